#ifndef PFH_HOFERLAB_HPP
#define PFH_HOFERLAB_HPP

/**
 * Large-scale geometry experiments: the normalized invariant matrix of the
 * sharply supported family, the quasi-flat embedding estimates built from
 * it, coarse separation of distinct family scales, and the growth table for
 * the infinite twist envelopes.
 *
 * The matrix is A[i][j] = (mu_{d_i}(member j) - mu_{d_i}(member n+1)) / d_i
 * for i, j = 1..n, built from a family of n+1 members so the last one
 * serves as the common offset; the subtraction cancels the mean term and
 * leaves A[i][j] = zeta_{d_i}(f_j) / d_i, which vanishes for j > i, equals
 * 1/(d_i + 1) on the diagonal, and stays >= 3/16 below it. The smoothed
 * variants produce the same triangular shape with entries within 1/(2 d_j)
 * of the exact ones.
 */

#include <string>
#include <utility>
#include <vector>

#include "pfh/envelope.hpp"
#include "pfh/family.hpp"
#include "pfh/twist.hpp"

namespace pfh {

struct MuMatrixReport {
    long long n = 0;                  // matrix dimension, family size minus 1
    std::vector<long long> degrees;   // d_1..d_n
    std::vector<std::vector<Rat>> exact;
    std::vector<std::vector<Rat>> smoothed;
    Rat max_slack;                    // max |exact - smoothed| entrywise
    bool exact_triangular = true;     // zero strictly above the diagonal
    bool smoothed_triangular = true;
    bool exact_diag_positive = true;
    bool smoothed_diag_positive = true;
    bool exact_below_diag_ok = true;  // entries below the diagonal >= 3/16
    bool smoothed_below_diag_ok = true;
    bool all_ok = true;
    std::vector<std::vector<Rat>> exact_inverse;
    Rat exact_inverse_norm;           // infinity operator norm of the inverse
};

/// Builds the matrix from a family with at least 2 members (dimension is
/// fam.n - 1). All entries exact.
MuMatrixReport mu_matrix(const FamilyConfig& fam);

struct EmbeddingBounds {
    Rat lower;  // |A (t - s)|_infinity
    Rat upper;  // 2 n (2 |t - s|_infinity + 1 + 1/n)
    bool ok = false;  // lower <= upper
};

/// Distance bounds for a pair of nonnegative coefficient vectors against the
/// exact matrix. Sizes must equal report.n.
EmbeddingBounds embedding_bounds(const MuMatrixReport& report, const std::vector<Rat>& t,
                                 const std::vector<Rat>& s);

struct SeparationReport {
    long long i = 0, j = 0;
    long long k = 0;       // probe member index, 2i + 1
    long long d_k = 0;     // probe degree
    Rat r;                 // time scale
    Rat margin_exact;      // |mu_{d_k}(member 2i) - mu_{d_k}(member 2j)| / d_k
    Rat margin_smoothed;
    Rat bound;             // 3 r / 16
    bool ok = false;       // both margins >= bound
};

/// Coarse separation of the scaled families through the degree-d_{2i+1}
/// invariant; needs 1 <= i < j and fam.n >= 2j, r >= 0.
SeparationReport separation(const FamilyConfig& fam, const Rat& r, long long i, long long j);

struct GrowthRow {
    long long d = 0;
    Rat v;           // envelope value at z0(d)
    Rat eta_lower;   // v/2 - d/6
    Rat ratio;       // eta_lower / d
    bool has_actual = false;
    Rat eta_actual;  // engine value on the matching truncation
    bool actual_ok = true;  // eta_actual >= eta_lower when present
};

struct GrowthReport {
    std::string spec_name;
    std::vector<GrowthRow> rows;
    bool ratios_increasing = true;
    bool actual_ok = true;
};

/// Growth certificate along an ascending list of even degrees >= 4. The
/// envelope must be adapted at every node up to the largest degree
/// (std::domain_error names the first bad node otherwise). Degrees up to
/// engine_cap also get the engine value eta(F_i) on the truncation with
/// 2i - 1 >= d + 1.
GrowthReport growth_table(const InfiniteTwistSpec& spec, const std::vector<long long>& ds,
                          long long engine_cap = 6);

/// Componentwise fold of a real parameter into the two-sided cone: returns
/// (max(x, 0), max(-x, 0)).
std::pair<Rat, Rat> lfold(const Rat& x);

/// Displacement energy of a spherical disc of the given area, valid for
/// area < 1/2 (total sphere area 1): the energy equals the area.
Rat disc_displacement_energy(const Rat& area);

}  // namespace pfh

#endif  // PFH_HOFERLAB_HPP

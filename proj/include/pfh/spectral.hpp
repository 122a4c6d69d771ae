#ifndef PFH_SPECTRAL_HPP
#define PFH_SPECTRAL_HPP

/**
 * The spectral optimum over concave lattice paths.
 *
 * For a twist profile h, degree d >= 1, and grading k with k = d (mod 2),
 * the quantity computed here is
 *
 *   c_{d,k}(h) = max { action(P, h) : P of degree d, index(P) = k },
 *
 * the paths ranging over all concave lattice paths whose step slopes stay
 * within [0, max slope of h]. Feasibility of k is part of the answer: the
 * index of a degree-d path is d (mod 2d+2) up to the vertical shift, which
 * moves it by exactly 2d+2 per unit, so only one residue class per shape is
 * reachable and some gradings admit no path at all (then feasible = false).
 *
 * The engine is a dynamic program over slope classes in increasing order.
 * A path is determined by its base height and the multiset of primitive
 * steps; the program tracks span, rise mod (d+1), and shape index mod
 * (2d+2), which is enough because both the transition cost and the index
 * increment depend on the running height only through its residue. Values
 * are exact rationals throughout. Optimal witnesses are reconstructed from
 * per-class table snapshots when the memory budget allows, re-validated
 * against the literal index and action computations, and returned in
 * path_order; otherwise only the value is reported and the stats say so.
 *
 * A brute-force oracle is provided alongside: enumerate every shape, close
 * each one at the unique base height that meets the grading, take the max.
 * It is deliberately independent of the dynamic program (no shared index or
 * optimization logic beyond the lattice primitives) and is feasible for
 * degree <= 6 and moderate slope caps.
 */

#include <string>
#include <vector>

#include "pfh/lattice.hpp"
#include "pfh/twist.hpp"

namespace pfh {

struct SpectralOptions {
    bool want_witnesses = true;
    size_t witness_cap = 16;
    /// Distinct optimal shapes explored during reconstruction.
    size_t shape_cap = 4096;
    /// Reconstruction steps before giving up (guards pathological fan-out).
    unsigned long long dfs_step_cap = 2'000'000;
    /// Table-entry budget for snapshots; above it, values only.
    unsigned long long snapshot_budget = 2'000'000;
};

struct SpectralStats {
    unsigned long long slope_classes = 0;
    unsigned long long states_reached = 0;
    unsigned long long transitions = 0;
    unsigned long long shapes_seen = 0;  // oracle only
    bool witnesses_complete = false;
    std::string witness_note;
};

struct SpectralResult {
    bool feasible = false;
    Rat value;  // meaningful only when feasible
    std::vector<LatticePath> witnesses;
    SpectralStats stats;
};

/// The spectral value by dynamic programming. Throws std::invalid_argument
/// on d < 1 or a grading of the wrong parity, std::domain_error if the
/// profile has a piece of degree > 2 (the step costs would leave the
/// rationals).
SpectralResult c_dk(const TwistProfile& tp, long long d, long long k,
                    const SpectralOptions& opt = {});

struct SweepEntry {
    long long k = 0;
    bool feasible = false;
    Rat value;
};

/// One dynamic-programming run serving many gradings; values only.
std::vector<SweepEntry> c_sweep(const TwistProfile& tp, long long d,
                                const std::vector<long long>& ks);

struct OracleOptions {
    EnumerationLimits limits;
    size_t witness_cap = 16;
};

/// Brute-force reference value, same contract as c_dk. Throws
/// std::invalid_argument when d or the slope cap exceeds the enumeration
/// limits.
SpectralResult oracle_c_dk(const TwistProfile& tp, long long d, long long k,
                           const OracleOptions& opt = {});

/// One enumeration sweep serving many gradings; values only.
std::vector<SweepEntry> oracle_sweep(const TwistProfile& tp, long long d,
                                     const std::vector<long long>& ks,
                                     const OracleOptions& opt = {});

struct AxiomCheck {
    std::string name;
    bool applicable = true;
    bool pass = true;
    std::string details;
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    bool all_pass = true;
};

/// Exercises the structural identities of the spectral values on a pair of
/// profiles at one degree: grading periodicity (k + 2d+2 shifts the value by
/// exactly 1), monotonicity when one profile dominates the other, the
/// Lipschitz bounds (d/2) min(g-h) <= c(g) - c(h) <= (d/2) max(g-h), each
/// side applicable when the path family of the smaller-sloped profile is
/// contained in the other's, and normalization against the zero profile.
/// Gradings in ks must have the parity of d.
AxiomReport axiom_report(const TwistProfile& h, const TwistProfile& g, long long d,
                         const std::vector<long long>& ks);

}  // namespace pfh

#endif  // PFH_SPECTRAL_HPP

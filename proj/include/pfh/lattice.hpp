#ifndef PFH_LATTICE_HPP
#define PFH_LATTICE_HPP

/**
 * Concave lattice paths and their combinatorial index.
 *
 * A path of degree d starts at (0, y0), y0 an integer, and proceeds by
 * primitive integer steps (q, p), q >= 1, p >= 0, gcd(q, p) = 1, grouped
 * into runs of equal steps with strictly increasing slopes p/q from run to
 * run. The horizontal spans sum to d, so the path is the graph of a concave
 * piecewise-linear function Y on [0, d] ... concave when read as the region
 * below: slopes only ever increase, so the region under consideration is the
 * convex one above the path. The path data earns two independent indices.
 *
 * Counting: j+ = #{(x, t) integer : 0 <= x <= d, 0 <= t < Y(x)} and
 * j- = #{(x, t) : Y(x) <= t < 0}, j = j+ - j-, and I = 2 j - d.
 *
 * Area: with A_twice = sum over primitive steps of (2 q y_start + p q),
 * y = min height, w = max height, e = number of primitive steps, the same
 * index is I = A_twice + y + w - e.
 *
 * Both are implemented literally and compared in the tests; the library
 * never assumes their agreement in either computation.
 *
 * The action of a path against a twist profile h with max slope >= every
 * step slope is
 *
 *   action = y0 + sum over steps of (p (1 - z) + q h(z)) / 2,
 *
 * z any height where the profile's derivative picks up the step's slope
 * (the value is constant across that flat spot, and the profile supplies a
 * canonical z).
 */

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "pfh/rational.hpp"
#include "pfh/twist.hpp"

namespace pfh {

struct PrimitiveSegment {
    long long q = 1;  // horizontal span, >= 1
    long long p = 0;  // vertical rise, >= 0, gcd(q, p) = 1
};

struct Run {
    PrimitiveSegment seg;
    long long mult = 1;  // how many copies of seg, >= 1
};

class LatticePath {
public:
    /// Validates and builds. Throws std::invalid_argument on empty runs,
    /// non-primitive steps, nonpositive multiplicities, or slopes that fail
    /// to increase strictly from run to run.
    static LatticePath make(long long y0, std::vector<Run> runs);

    /// Parses the literal form "y0; q:p*m, q:p*m, ...". The "*m" suffix is
    /// optional and defaults to 1. Whitespace around tokens is ignored.
    static LatticePath parse(const std::string& text);

    /// Canonical literal form, always carrying explicit multiplicities.
    std::string literal() const;

    long long y0() const { return y0_; }
    const std::vector<Run>& runs() const { return runs_; }
    /// Total horizontal span, sum of q * mult.
    long long degree() const { return degree_; }
    /// Number of primitive steps, sum of mult.
    long long segment_count() const { return segments_; }
    /// Total rise, sum of p * mult.
    long long rise() const { return rise_; }
    /// Height of the path over x in [0, degree]; exact.
    Rat height_at(const Rat& x) const;
    /// Same path shifted vertically by dy.
    LatticePath shifted(long long dy) const;

    bool operator==(const LatticePath& other) const;

private:
    long long y0_ = 0;
    std::vector<Run> runs_;
    long long degree_ = 0;
    long long segments_ = 0;
    long long rise_ = 0;
};

/// The pieces of the index computation. index_by_count fills the lattice
/// point counts and derives I from them alone, leaving A_twice at 0;
/// index_by_area fills the area side and derives I from it alone, leaving
/// j_plus and j_minus at -1. Both record y (min height), w (max height),
/// and e (step count).
struct IndexBreakdown {
    long long j_plus = -1;
    long long j_minus = -1;
    long long j = 0;
    long long I = 0;
    long long A_twice = 0;
    long long y = 0;
    long long w = 0;
    long long e = 0;
};

IndexBreakdown index_by_count(const LatticePath& path);
IndexBreakdown index_by_area(const LatticePath& path);

/// Exact action of the path against the profile. Throws std::domain_error
/// (from the profile) if some step slope exceeds the profile's max slope.
Rat action(const LatticePath& path, const TwistProfile& tp);

/// All primitive steps (q, p) with q <= d and p/q <= max_slope, sorted by
/// increasing slope, ties (there are none among primitives) immaterial.
std::vector<PrimitiveSegment> farey_slopes(long long d, const Rat& max_slope);

struct EnumerationLimits {
    long long max_d = 6;
    Rat max_slope_times_d = Rat(64);
    unsigned long long max_paths = 50'000'000;
};

/// Visits every shape (path with y0 = 0) of the given degree and slope cap,
/// in lexicographic run order, and returns the count. Throws
/// std::invalid_argument when the requested range exceeds the limits and
/// std::runtime_error if max_paths is hit.
unsigned long long enumerate_shapes(long long d, const Rat& max_slope,
                                    const std::function<void(const LatticePath&)>& visit,
                                    const EnumerationLimits& limits = {});

/// Shapes crossed with base heights y0 in [y_lo, y_hi].
unsigned long long enumerate_paths(long long d, const Rat& max_slope, long long y_lo,
                                   long long y_hi,
                                   const std::function<void(const LatticePath&)>& visit,
                                   const EnumerationLimits& limits = {});

/// Total order used for witness lists: base height first, then the expanded
/// step sequences compared step by step (slope, then span).
bool path_order(const LatticePath& a, const LatticePath& b);

}  // namespace pfh

#endif  // PFH_LATTICE_HPP

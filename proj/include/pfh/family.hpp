#ifndef PFH_FAMILY_HPP
#define PFH_FAMILY_HPP

/**
 * The graded family of sharply supported twist profiles used by the
 * large-scale geometry experiments.
 *
 * Member i (i = 1..n) has degree parameter d_i = 2^(iota+i+1) and exact
 * piecewise-linear profile
 *
 *   f_i(z) = 0                      on [-1, 1 - 2/d_i],
 *   f_i(z) = d_i^2 (z - (1-2/d_i))  on [1 - 2/d_i, 1],
 *
 * a ramp of slope d_i^2 whose integral is exactly 2 and whose positive part
 * occupies the topmost 2/d_i of the z-interval, a spherical disc of area
 * 1/d_i. Alongside the ramp we build a C^1 smoothed variant h_i with
 *
 *   |f_i - h_i| <= 1/d_i,   h_i = 0 on [-1, 1-2/d_i + delta],   int h_i = 2,
 *
 * realized by rounding the corner with a parabolic arc on a window of
 * half-width delta = min(smoothing_window, d_i^-5) pushed strictly inside the
 * support, then steepening the last stretch [1 - 1/d_i, 1] by an exact
 * quadratic correction that restores the integral while keeping h' and h''
 * nonnegative. All identities are exact and asserted at construction.
 */

#include <vector>

#include "pfh/twist.hpp"

namespace pfh {

struct FamilyMember {
    long long index = 0;  // 1-based position in the family
    long long d = 0;      // 2^(iota+index+1)
    TwistProfile exact_f = TwistProfile::zero();
    TwistProfile smoothed_h = TwistProfile::zero();
    Rat delta;  // half-width actually used for this member
};

struct FamilyConfig {
    long long iota = 0;
    long long n = 0;
    Rat smoothing_window;
    std::vector<FamilyMember> members;  // size n
};

/// Builds the family; iota >= 1, n >= 1. The default window cap is generous
/// (1), so delta = d_i^-5 unless the caller tightens it. Throws
/// std::invalid_argument on bad parameters and std::logic_error if any of the
/// construction identities fails to verify (which would be a bug, not an
/// input error).
FamilyConfig build_family(long long iota, long long n, const Rat& smoothing_window = Rat(1));

/// How many of the degree-d_i sample heights z_k = -1 + 2(d_i - k)/(d_i + 1),
/// k = 0, 1, 2, ..., land strictly above the support edge 1 - 2/d_j of member
/// j's exact ramp. The heights decrease in k, so these form a prefix; the
/// count is found by direct scan, no closed form. For j <= i it equals
/// d_i / d_j, and for j > i it is zero.
long long samples_in_support(const FamilyConfig& fam, long long i, long long j);

/// Exact sum of f_j over that prefix of sample heights (direct evaluation):
/// sum over k of f_j(-1 + 2(d_i - k)/(d_i + 1)).
Rat sample_sum(const FamilyConfig& fam, long long i, long long j);

}  // namespace pfh

#endif  // PFH_FAMILY_HPP

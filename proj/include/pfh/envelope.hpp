#ifndef PFH_ENVELOPE_HPP
#define PFH_ENVELOPE_HPP

/**
 * Infinite twist specifications and their finite truncations.
 *
 * An infinite twist is described by its values v_d at the node heights
 * z0(d) = 1 - 2/(d+1), d = 2, 3, 4, ..., together with an "adapted" slope
 * s_d assigned to each node. The piecewise-linear interpolation of the nodes
 * is convex as long as the secant slopes are nondecreasing, and the slope
 * assignment is adapted when each s_d is a nonnegative multiple of (d+1)
 * lying between the incoming and outgoing secants at z0(d). Those divisibility
 * windows have length (d+1) * (z0(d+1) - z0(d)) * (something growing), so a
 * valid multiple exists for every d once the profile is steep enough; the
 * check is exact and per-node.
 *
 * Two ready-made specifications are provided. The standard one vanishes up
 * to z0(2) = 1/3 and has v_d = d^2 afterwards. The deep one vanishes up to
 * z0(15) = 7/8 and has v_d = (d-15)^2 afterwards, keeping the whole positive
 * part inside the topmost 1/16 of the interval while still making v_d / d
 * grow without bound.
 *
 * truncation(i) realizes the finite profile F_i: the nodes d = 2 .. 2i-1
 * joined by straight segments, continued past z0(2i-1) with the straight
 * ray of slope s_{2i-1}. Each F_i is a valid twist profile, and F_i <= F_{i+1}
 * pointwise.
 */

#include <map>
#include <string>
#include <vector>

#include "pfh/twist.hpp"

namespace pfh {

class InfiniteTwistSpec {
public:
    /// Vanishes on [-1, 1/3]; v_d = d^2 for d >= 3.
    static InfiniteTwistSpec standard();
    /// Vanishes on [-1, 7/8]; v_d = (d-15)^2 for d >= 16.
    static InfiniteTwistSpec deep();

    const std::string& name() const { return name_; }
    /// Left edge of the support, z0(onset).
    Rat support_left() const;
    long long onset() const { return onset_; }

    /// Node height z0(d) = 1 - 2/(d+1). Requires d >= 2.
    static Rat z0(long long d);
    /// Node value. Zero for d <= onset, (d - shift)^2 beyond.
    Rat v(long long d) const;
    /// Slope of the segment joining the nodes at z0(d) and z0(d+1).
    Rat secant(long long d) const;
    /// Adapted slope at z0(d): the smallest multiple of (d+1) that is >= the
    /// incoming secant (taken as 0 at the onset node). Overrides installed by
    /// with_slope_override take precedence. Requires d >= 2.
    Rat s(long long d) const;

    /// Exact adaptedness test at one node: s(d) must be a nonnegative
    /// multiple of (d+1) and must lie in [incoming secant, outgoing secant].
    /// On failure, *why (if given) receives a short reason.
    bool check_adapted(long long d, std::string* why = nullptr) const;
    /// check_adapted for every d in [2, dmax]; returns the first failing d,
    /// or 0 if all pass.
    long long first_unadapted(long long dmax) const;

    /// Strict growth of v_d / d across [lo, hi] (consecutive d). Returns the
    /// first d where v(d+1)/(d+1) <= v(d)/d, or 0 if the ratio climbs
    /// strictly throughout.
    long long first_growth_failure(long long lo, long long hi) const;

    /// The truncation F_i, i >= 2: nodes d = 2 .. 2i-1, then the adapted ray.
    TwistProfile truncation(long long i) const;

    /// Copy of this spec with the slope at one node replaced; used to probe
    /// how downstream certificates reject a non-adapted assignment.
    InfiniteTwistSpec with_slope_override(long long d, const Rat& slope) const;

private:
    InfiniteTwistSpec(std::string name, long long onset, long long shift);

    std::string name_;
    long long onset_;  // last d with v_d = 0
    long long shift_;  // v_d = (d - shift)^2 past the onset
    std::map<long long, Rat> slope_overrides_;
};

}  // namespace pfh

#endif  // PFH_ENVELOPE_HPP

#ifndef PFH_TWIST_HPP
#define PFH_TWIST_HPP

/**
 * Monotone twist profiles on the closed interval [-1, 1].
 *
 * A profile is the generating function h of an area-preserving monotone twist
 * of the sphere (coordinates (z, theta), total area 1, Hamiltonian
 * H(z, theta) = h(z)/2). It is stored as a contiguous piecewise polynomial
 * with exact rational coefficients and must satisfy
 *
 *   h(-1) = 0,   h'(-1) = 0,   h' >= 0 and h'' >= 0 throughout.
 *
 * Joins between pieces are continuous; the first derivative may jump upward
 * (a convex corner), which is how exact piecewise-linear ramp profiles enter.
 * Profiles whose derivative is strictly increasing and whose top slope h'(1)
 * is a whole number are called nice; niceness is a query, not a constructor
 * requirement.
 *
 * The slope inverse uses subdifferential semantics so that it is total on
 * [0, h'(1)] even for profiles with plateaus and corners:
 *
 *   inverse_slope(s) = midpoint of { z : s is between h'(z-) and h'(z+) }.
 *
 * For a strictly convex profile that set is a single point; on a plateau the
 * midpoint is returned, and the quantity p(1-z) + q h(z) that the lattice
 * model consumes is constant across the plateau, so the choice is immaterial.
 *
 * All operations are exact and all types are immutable after construction, so
 * concurrent shared reads are safe.
 */

#include <string>
#include <vector>

#include "pfh/poly.hpp"
#include "pfh/rational.hpp"

namespace pfh {

/// One polynomial piece of a profile, valid on [lo, hi].
struct Piece {
    Rat lo;
    Rat hi;
    Poly f;
};

class TwistProfile {
public:
    /**
     * Validates and builds a profile from contiguous pieces covering [-1, 1].
     *
     * Throws std::invalid_argument when the pieces do not cover [-1, 1]
     * contiguously, a piece has degree > 3, a join is discontinuous, the
     * derivative drops at a join, h(-1) or h'(-1) is nonzero, or some piece
     * has negative second derivative somewhere on its interval.
     */
    static TwistProfile from_pieces(std::vector<Piece> pieces);

    /// Convenience: the zero profile (a degenerate but valid twist).
    static TwistProfile zero();

    /// h(z); throws std::domain_error outside [-1, 1].
    Rat eval(const Rat& z) const;
    /// H(z) = h(z)/2.
    Rat eval_H(const Rat& z) const { return eval(z) / 2; }

    /// One-sided derivatives. slope_left needs z in (-1, 1], slope_right
    /// needs z in [-1, 1); both throw std::domain_error otherwise.
    Rat slope_left(const Rat& z) const;
    Rat slope_right(const Rat& z) const;

    /// m = h'(1), the top (and maximal) slope.
    const Rat& max_slope() const { return max_slope_; }

    /// True when the derivative is continuous at every join.
    bool is_c1() const;
    /// True when h'' > 0 on the interior of every piece (no plateaus).
    bool strictly_convex() const;
    /// Nice twist: strictly convex with whole-number top slope.
    bool is_nice() const;

    /// Largest degree among the pieces.
    int max_piece_degree() const;

    /// Exact integral of h over [-1, 1].
    Rat integral() const;
    /// Calabi invariant of the time-1 map: (1/4) * integral of h.
    Rat calabi() const { return integral() / 4; }
    /// Mean of H over the sphere; coincides with calabi() in these units.
    Rat mean() const { return calabi(); }

    /// max H = h(1)/2 (h is nondecreasing).
    Rat max_value() const;

    /// Largest z* such that h vanishes on [-1, z*] (equals 1 for the zero
    /// profile, whose support is empty).
    Rat support_left() const;
    /// Spherical area of {H != 0}: (1 - support_left)/2 under total area 1.
    Rat support_area() const;

    /// The profile t*h (t >= 0 rational; throws std::invalid_argument on
    /// negative t). scale(n) below is the integer special case used to form
    /// the iterated Hamiltonian n*H.
    TwistProfile scaled(const Rat& t) const;
    TwistProfile scale(long long n) const;

    /**
     * A z with h'(z) = s under subdifferential semantics (plateau midpoint,
     * corner point). Throws std::domain_error("incompatible slope") when s is
     * outside [0, max_slope]. Requires every piece touched by the search to
     * have degree <= 2 so the answer is rational; a degree-3 piece raises
     * std::domain_error unless s resolves on the piece boundary.
     */
    Rat inverse_slope(const Rat& s) const;

    /**
     * Coarse Hofer upper bound (1/N) * max(H) + 2 for the time-1 map, valid
     * for twists whose support area is strictly less than 1/N. Throws
     * std::domain_error("lemma inapplicable") when the area precondition
     * fails.
     */
    Rat hofer_upper_bound(long long N) const;

    const std::vector<Piece>& pieces() const { return pieces_; }

    bool operator==(const TwistProfile& other) const;

private:
    TwistProfile() = default;
    std::vector<Piece> pieces_;
    Rat max_slope_;
};

/// Pointwise extrema of the difference g - h over [-1, 1], exact. Requires
/// both profiles to have pieces of degree <= 2 (the difference is then
/// piecewise quadratic, with rational extrema). Returns {min, max}.
std::pair<Rat, Rat> difference_range(const TwistProfile& h, const TwistProfile& g);

/// g dominates h pointwise (h <= g on [-1, 1]).
bool dominates(const TwistProfile& g, const TwistProfile& h);

}  // namespace pfh

#endif  // PFH_TWIST_HPP

#include "pfh/twist.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace pfh {

namespace {

// Exact square root of a nonnegative rational, when it exists.
std::optional<Rat> rational_sqrt(const Rat& r) {
    if (r < 0) return std::nullopt;
    Int n = numerator(r), d = denominator(r);
    Int sn = sqrt(n), sd = sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Rat(sn, sd);
}

std::string rat_msg(const Rat& r) { return rat_str(r); }

}  // namespace

TwistProfile TwistProfile::from_pieces(std::vector<Piece> pieces) {
    if (pieces.empty())
        throw std::invalid_argument("profile needs at least one piece");
    if (pieces.front().lo != -1 || pieces.back().hi != 1)
        throw std::invalid_argument("pieces must cover [-1, 1]");
    for (size_t i = 0; i < pieces.size(); ++i) {
        const Piece& pc = pieces[i];
        if (!(pc.lo < pc.hi))
            throw std::invalid_argument("piece interval is empty or reversed at [" +
                                        rat_msg(pc.lo) + ", " + rat_msg(pc.hi) + "]");
        if (pc.f.degree() > 3)
            throw std::invalid_argument("piece degree exceeds 3");
        if (i + 1 < pieces.size() && pieces[i + 1].lo != pc.hi)
            throw std::invalid_argument("pieces are not contiguous at z = " + rat_msg(pc.hi));
        // Convexity within the piece: f'' is linear for degree <= 3, so the
        // endpoint values decide the sign on the whole interval.
        Poly f2 = pc.f.derivative().derivative();
        if (f2.eval(pc.lo) < 0 || f2.eval(pc.hi) < 0)
            throw std::invalid_argument("second derivative is negative on piece starting at z = " +
                                        rat_msg(pc.lo));
    }
    for (size_t i = 0; i + 1 < pieces.size(); ++i) {
        const Rat x = pieces[i].hi;
        if (pieces[i].f.eval(x) != pieces[i + 1].f.eval(x))
            throw std::invalid_argument("discontinuous join at z = " + rat_msg(x));
        // Convex corners (upward derivative jumps) are allowed; downward
        // jumps would break convexity of h.
        if (pieces[i].f.derivative().eval(x) > pieces[i + 1].f.derivative().eval(x))
            throw std::invalid_argument("derivative drops at join z = " + rat_msg(x));
    }
    if (pieces.front().f.eval(Rat(-1)) != 0)
        throw std::invalid_argument("h(-1) must vanish");
    if (pieces.front().f.derivative().eval(Rat(-1)) != 0)
        throw std::invalid_argument("h'(-1) must vanish");

    TwistProfile tp;
    tp.max_slope_ = pieces.back().f.derivative().eval(Rat(1));
    tp.pieces_ = std::move(pieces);
    return tp;
}

TwistProfile TwistProfile::zero() {
    return from_pieces({Piece{Rat(-1), Rat(1), Poly()}});
}

Rat TwistProfile::eval(const Rat& z) const {
    if (z < -1 || z > 1) throw std::domain_error("z outside [-1, 1]: " + rat_msg(z));
    for (const Piece& pc : pieces_)
        if (z <= pc.hi) return pc.f.eval(z);
    return pieces_.back().f.eval(z);  // unreachable; keeps the compiler calm
}

Rat TwistProfile::slope_left(const Rat& z) const {
    if (z <= -1 || z > 1)
        throw std::domain_error("left slope needs z in (-1, 1], got " + rat_msg(z));
    for (const Piece& pc : pieces_)
        if (z <= pc.hi) return pc.f.derivative().eval(z);
    return max_slope_;
}

Rat TwistProfile::slope_right(const Rat& z) const {
    if (z < -1 || z >= 1)
        throw std::domain_error("right slope needs z in [-1, 1), got " + rat_msg(z));
    for (const Piece& pc : pieces_)
        if (z < pc.hi) return pc.f.derivative().eval(z);
    return max_slope_;
}

bool TwistProfile::is_c1() const {
    for (size_t i = 0; i + 1 < pieces_.size(); ++i) {
        const Rat x = pieces_[i].hi;
        if (pieces_[i].f.derivative().eval(x) != pieces_[i + 1].f.derivative().eval(x))
            return false;
    }
    return true;
}

bool TwistProfile::strictly_convex() const {
    for (const Piece& pc : pieces_) {
        Poly f2 = pc.f.derivative().derivative();
        // Need f'' > 0 on the open interior; f'' is linear, so it may vanish
        // at one endpoint at most.
        if (f2.eval(pc.lo) <= 0 && f2.eval(pc.hi) <= 0) return false;
        if (f2.eval(pc.lo) < 0 || f2.eval(pc.hi) < 0) return false;
    }
    return true;
}

bool TwistProfile::is_nice() const {
    return strictly_convex() && is_integer(max_slope_) && is_c1();
}

int TwistProfile::max_piece_degree() const {
    int deg = -1;
    for (const Piece& pc : pieces_) deg = std::max(deg, pc.f.degree());
    return deg;
}

Rat TwistProfile::integral() const {
    Rat total(0);
    for (const Piece& pc : pieces_) total += pc.f.integral(pc.lo, pc.hi);
    return total;
}

Rat TwistProfile::max_value() const { return eval(Rat(1)) / 2; }

Rat TwistProfile::support_left() const {
    for (const Piece& pc : pieces_)
        if (!pc.f.is_zero()) return pc.lo;
    return Rat(1);
}

Rat TwistProfile::support_area() const { return (Rat(1) - support_left()) / 2; }

TwistProfile TwistProfile::scaled(const Rat& t) const {
    if (t < 0) throw std::invalid_argument("profile scaling factor must be nonnegative");
    std::vector<Piece> out;
    out.reserve(pieces_.size());
    for (const Piece& pc : pieces_) out.push_back(Piece{pc.lo, pc.hi, pc.f.scaled(t)});
    return from_pieces(std::move(out));
}

TwistProfile TwistProfile::scale(long long n) const {
    if (n <= 0) throw std::invalid_argument("scale expects a positive integer");
    return scaled(Rat(n));
}

Rat TwistProfile::inverse_slope(const Rat& s) const {
    if (s < 0 || s > max_slope_) throw std::domain_error("incompatible slope");

    // Solve f'(z) = s inside one piece; f' is nondecreasing on it.
    auto solve_in_piece = [&](const Piece& pc) -> Rat {
        Poly f1 = pc.f.derivative();
        if (f1.degree() <= 0) {
            // Constant derivative equal to s on the whole piece; callers
            // handle plateaus before getting here.
            return pc.lo;
        }
        if (f1.degree() == 1) {
            // f'(z) = c1 z + c0.
            return (s - f1.coeff(0)) / f1.coeff(1);
        }
        // Quadratic derivative (cubic piece): rational only for square
        // discriminants.
        Rat a = f1.coeff(2), b = f1.coeff(1), c = f1.coeff(0) - s;
        Rat disc = b * b - 4 * a * c;
        auto root = rational_sqrt(disc);
        if (!root)
            throw std::domain_error("inverse slope is irrational on a cubic piece (slope " +
                                    rat_msg(s) + ")");
        Rat z1 = (-b + *root) / (2 * a);
        Rat z2 = (-b - *root) / (2 * a);
        for (const Rat& z : {z1, z2})
            if (z >= pc.lo && z <= pc.hi && f1.eval(z) == s) return z;
        throw std::domain_error("no rational slope inverse on the piece");
    };

    // zlo: least z with h'(z+) >= s.
    Rat zlo(-1);
    for (const Piece& pc : pieces_) {
        Poly f1 = pc.f.derivative();
        Rat d0 = f1.eval(pc.lo), d1 = f1.eval(pc.hi);
        if (d0 >= s) {
            zlo = pc.lo;
            break;
        }
        if (d1 >= s) {
            zlo = solve_in_piece(pc);
            break;
        }
    }
    // zhi: greatest z with h'(z-) <= s.
    Rat zhi(1);
    for (auto it = pieces_.rbegin(); it != pieces_.rend(); ++it) {
        Poly f1 = it->f.derivative();
        Rat d0 = f1.eval(it->lo), d1 = f1.eval(it->hi);
        if (d1 <= s) {
            zhi = it->hi;
            break;
        }
        if (d0 <= s) {
            zhi = solve_in_piece(*it);
            break;
        }
    }
    return (zlo + zhi) / 2;
}

Rat TwistProfile::hofer_upper_bound(long long N) const {
    if (N <= 0) throw std::invalid_argument("N must be a positive integer");
    if (!(support_area() < Rat(1, N)))
        throw std::domain_error("lemma inapplicable: support area " + rat_str(support_area()) +
                                " is not below 1/" + std::to_string(N));
    return max_value() / N + 2;
}

bool TwistProfile::operator==(const TwistProfile& other) const {
    if (pieces_.size() != other.pieces_.size()) return false;
    for (size_t i = 0; i < pieces_.size(); ++i)
        if (pieces_[i].lo != other.pieces_[i].lo || pieces_[i].hi != other.pieces_[i].hi ||
            !(pieces_[i].f == other.pieces_[i].f))
            return false;
    return true;
}

std::pair<Rat, Rat> difference_range(const TwistProfile& h, const TwistProfile& g) {
    if (h.max_piece_degree() > 2 || g.max_piece_degree() > 2)
        throw std::invalid_argument("difference_range needs piece degrees <= 2");

    std::vector<Rat> cuts;
    for (const Piece& pc : h.pieces()) {
        cuts.push_back(pc.lo);
        cuts.push_back(pc.hi);
    }
    for (const Piece& pc : g.pieces()) {
        cuts.push_back(pc.lo);
        cuts.push_back(pc.hi);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    auto piece_poly = [](const TwistProfile& tp, const Rat& a, const Rat& b) -> Poly {
        for (const Piece& pc : tp.pieces())
            if (pc.lo <= a && b <= pc.hi) return pc.f;
        throw std::logic_error("refined interval not contained in one piece");
    };

    Rat lo_val, hi_val;
    bool first = true;
    auto consider = [&](const Rat& v) {
        if (first) {
            lo_val = hi_val = v;
            first = false;
        } else {
            if (v < lo_val) lo_val = v;
            if (v > hi_val) hi_val = v;
        }
    };
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        const Rat &a = cuts[i], &b = cuts[i + 1];
        Poly diff = piece_poly(g, a, b) - piece_poly(h, a, b);
        consider(diff.eval(a));
        consider(diff.eval(b));
        if (diff.degree() == 2) {
            Rat vertex = -diff.coeff(1) / (2 * diff.coeff(2));
            if (a < vertex && vertex < b) consider(diff.eval(vertex));
        }
    }
    return {lo_val, hi_val};
}

bool dominates(const TwistProfile& g, const TwistProfile& h) {
    return difference_range(h, g).first >= 0;
}

}  // namespace pfh

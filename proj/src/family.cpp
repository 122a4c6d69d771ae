#include "pfh/family.hpp"

#include <stdexcept>
#include <string>

namespace pfh {

namespace {

Int pow_int(long long base, int exp) {
    Int r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

TwistProfile make_exact_ramp(long long d) {
    Rat z_c = Rat(1) - Rat(2, d);
    Int m = Int(d) * d;
    // ramp m*(z - z_c) written in ascending coefficients
    Poly ramp(std::vector<Rat>{-Rat(m) * z_c, Rat(m)});
    std::vector<Piece> pieces;
    pieces.push_back({Rat(-1), z_c, Poly{}});
    pieces.push_back({z_c, Rat(1), ramp});
    return TwistProfile::from_pieces(pieces);
}

TwistProfile make_smoothed(long long d, const Rat& window, Rat* delta_out) {
    Rat z_c = Rat(1) - Rat(2, d);
    Rat m = Rat(Int(d) * d);
    Rat delta = Rat(1) / Rat(pow_int(d, 5));
    if (window < delta) delta = window;
    if (!(delta > 0)) throw std::invalid_argument("smoothing window must be positive");
    *delta_out = delta;

    Rat a1 = z_c + delta;        // support edge of the smoothed profile
    Rat a2 = a1 + 2 * delta;     // end of the parabolic arc
    Rat T = Rat(1) - Rat(1, d);  // start of the integral-restoring stretch

    // The arc m(z-a1)^2/(4 delta) rises from 0 with slope 0 at a1 and meets
    // the shifted ramp m z - m z_c - 2 m delta with matching value and slope
    // at a2. Both joins are C^1.
    Rat c2 = m / (4 * delta);
    Poly arc({c2 * a1 * a1, -2 * c2 * a1, c2});
    Poly line(std::vector<Rat>{-m * z_c - 2 * m * delta, m});

    // Integral of the profile with a plain line on [T, 1]; the quadratic
    // bump kappa/2 (z-T)^2 added there contributes exactly kappa/(6 d^3),
    // so kappa = 6 d^3 * deficit restores int h = 2 on the nose.
    Rat partial = arc.integral(a1, a2) + line.integral(a2, Rat(1));
    Rat deficit = Rat(2) - partial;
    if (!(deficit > 0)) throw std::logic_error("smoothing deficit must be positive");
    Rat kappa = 6 * deficit * Rat(pow_int(d, 3));
    Poly bump({kappa / 2 * T * T, -kappa * T, kappa / 2});
    Poly tail = line + bump;

    std::vector<Piece> pieces;
    pieces.push_back({Rat(-1), a1, Poly{}});
    pieces.push_back({a1, a2, arc});
    pieces.push_back({a2, T, line});
    pieces.push_back({T, Rat(1), tail});
    return TwistProfile::from_pieces(pieces);
}

}  // namespace

FamilyConfig build_family(long long iota, long long n, const Rat& smoothing_window) {
    if (iota < 1) throw std::invalid_argument("iota must be >= 1");
    if (n < 1) throw std::invalid_argument("family size n must be >= 1");
    if (iota + n + 1 > 40) throw std::invalid_argument("family degree 2^(iota+n+1) too large");
    if (!(smoothing_window > 0)) throw std::invalid_argument("smoothing window must be positive");

    FamilyConfig fam;
    fam.iota = iota;
    fam.n = n;
    fam.smoothing_window = smoothing_window;
    for (long long i = 1; i <= n; ++i) {
        FamilyMember mem;
        mem.index = i;
        mem.d = 1LL << (iota + i + 1);
        mem.exact_f = make_exact_ramp(mem.d);
        mem.smoothed_h = make_smoothed(mem.d, smoothing_window, &mem.delta);

        // Construction identities, all exact. A failure here is a bug.
        if (mem.exact_f.integral() != 2)
            throw std::logic_error("family member integral != 2 (exact)");
        if (mem.smoothed_h.integral() != 2)
            throw std::logic_error("family member integral != 2 (smoothed)");
        auto range = difference_range(mem.exact_f, mem.smoothed_h);
        Rat dev = abs_rat(range.first);
        if (abs_rat(range.second) > dev) dev = abs_rat(range.second);
        if (dev > Rat(1, mem.d))
            throw std::logic_error("smoothing deviation exceeds 1/d");
        if (!(mem.smoothed_h.support_left() > mem.exact_f.support_left()))
            throw std::logic_error("smoothed support must sit strictly inside the ramp support");
        if (!mem.smoothed_h.is_c1())
            throw std::logic_error("smoothed member must be C^1");

        fam.members.push_back(std::move(mem));
    }
    return fam;
}

namespace {

const FamilyMember& member_at(const FamilyConfig& fam, long long i) {
    if (i < 1 || i > fam.n) throw std::invalid_argument("family index out of range");
    return fam.members[static_cast<size_t>(i - 1)];
}

}  // namespace

long long samples_in_support(const FamilyConfig& fam, long long i, long long j) {
    const FamilyMember& mi = member_at(fam, i);
    const FamilyMember& mj = member_at(fam, j);
    Rat edge = mj.exact_f.support_left();
    long long count = 0;
    while (count <= mi.d) {
        Rat z = Rat(-1) + Rat(2 * (mi.d - count), mi.d + 1);
        if (!(z > edge)) break;
        ++count;
    }
    return count;
}

Rat sample_sum(const FamilyConfig& fam, long long i, long long j) {
    const FamilyMember& mi = member_at(fam, i);
    const FamilyMember& mj = member_at(fam, j);
    long long count = samples_in_support(fam, i, j);
    Rat total = 0;
    for (long long k = 0; k < count; ++k) {
        Rat z = Rat(-1) + Rat(2 * (mi.d - k), mi.d + 1);
        total += mj.exact_f.eval(z);
    }
    return total;
}

}  // namespace pfh


#include "pfh/invariants.hpp"

#include <stdexcept>

namespace pfh {

Rat zeta_closed(const TwistProfile& tp, long long d) {
    if (d < 1) throw std::invalid_argument("degree must be >= 1");
    Rat total = 0;
    for (long long i = 1; i <= d; ++i) total += tp.eval(Rat(-1) + Rat(2 * i, d + 1));
    return total / 2;
}

Rat mu_invariant(const TwistProfile& tp, long long d, const Rat& t) {
    if (t < 0) throw std::invalid_argument("time must be >= 0");
    return t * (zeta_closed(tp, d) - Rat(d) * tp.mean());
}

Rat eta(const TwistProfile& tp, long long d) {
    if (d < 2 || d % 2 != 0) throw std::invalid_argument("eta needs an even degree >= 2");
    SpectralOptions opt;
    opt.want_witnesses = false;
    SpectralResult top = c_dk(tp, d, -d, opt);
    SpectralResult two = c_dk(tp, 2, -2, opt);
    if (!top.feasible || !two.feasible)
        throw std::logic_error("grading -d must be feasible (the flat path realizes it)");
    return top.value - Rat(d, 2) * two.value;
}

ZetaLimitReport zeta_limit(const TwistProfile& tp, long long d,
                           const std::vector<long long>& scales) {
    ZetaLimitReport report;
    report.d = d;
    report.zeta = zeta_closed(tp, d);
    SpectralOptions opt;
    opt.want_witnesses = false;
    long long prev = 0;
    for (long long n : scales) {
        if (n < 1) throw std::invalid_argument("scales must be >= 1");
        if (n <= prev) throw std::invalid_argument("scales must ascend");
        prev = n;
        SpectralResult res = c_dk(tp.scale(n), d, -d, opt);
        if (!res.feasible)
            throw std::logic_error("grading -d must be feasible (the flat path realizes it)");
        ZetaLimitRow row;
        row.n = n;
        row.c_value = res.value;
        row.ratio = res.value / n;
        row.gap = report.zeta - row.ratio;
        if (row.gap < 0) report.upper_ok = false;
        report.rows.push_back(row);
    }
    return report;
}

EtaLowerBound eta_lower_bound(const TwistProfile& tp, long long d) {
    if (d < 4 || d % 2 != 0)
        throw std::invalid_argument("eta lower bound needs an even degree >= 4");
    if (tp.support_left() < Rat(1, 3))
        throw std::domain_error("support must be contained in {z > 1/3}");

    Rat z0 = Rat(1) - Rat(2, d + 1);
    Rat sl = tp.slope_left(z0);
    Rat sr = tp.slope_right(z0);
    Int mult = ceil_rat(sl / (d + 1));
    if (mult < 0) mult = 0;
    Rat p_rat = Rat(mult * (d + 1));
    if (p_rat > sr)
        throw std::domain_error("no multiple of d+1 between the one-sided slopes at z0(d)");
    long long p = to_ll(rat_num(p_rat));

    EtaLowerBound out;
    out.d = d;
    out.h_at_z0 = tp.eval(z0);
    out.p = p;
    if (p == 0) {
        out.witness = LatticePath::make(0, {{{1, 0}, d}});
    } else {
        long long a = p / (d + 1);
        out.witness = LatticePath::make(-a, {{{1, 0}, d - 1}, {{1, p}, 1}});
    }
    if (index_by_count(out.witness).I != -d)
        throw std::logic_error("corner witness misses the grading");
    out.witness_action = action(out.witness, tp);
    if (out.witness_action != out.h_at_z0 / 2)
        throw std::logic_error("corner witness action is not H(z0)");
    out.bound = out.h_at_z0 / 2 - Rat(d, 6);
    out.method =
        "adapted corner witness for c_d plus small-support control of the degree-2 term";
    return out;
}

SupportControl support_control(long long d, const Rat& area, long long k) {
    if (d < 1) throw std::invalid_argument("degree must be >= 1");
    if (area < 0) throw std::invalid_argument("area must be >= 0");
    if (!(area < Rat(1, d + 1)))
        throw std::domain_error("support control needs area < 1/(d+1), strictly");
    if (k < -d || k > d) throw std::invalid_argument("support control needs |k| <= d");
    SupportControl out;
    out.bound = Rat(2 * d) * area;
    out.method = "small-support envelope |c| <= 2 d * area";
    return out;
}

InvariantBundle invariant_bundle(const TwistProfile& tp, long long d, const Rat& t) {
    InvariantBundle b;
    b.d = d;
    b.t = t;
    b.zeta = zeta_closed(tp, d);
    b.mu = mu_invariant(tp, d, t);
    b.calabi = tp.calabi();
    b.mean = tp.mean();
    if (d >= 4 && d % 2 == 0) {
        try {
            b.eta_lower = eta_lower_bound(tp, d).bound;
            b.has_eta_lower = true;
        } catch (const std::domain_error&) {
            b.has_eta_lower = false;
        }
    }
    return b;
}

}  // namespace pfh


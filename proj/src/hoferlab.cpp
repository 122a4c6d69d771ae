#include "pfh/hoferlab.hpp"

#include <stdexcept>

#include "pfh/invariants.hpp"
#include "pfh/spectral.hpp"

namespace pfh {

namespace {

std::vector<std::vector<Rat>> build_matrix(const FamilyConfig& fam, bool smoothed, long long n) {
    const FamilyMember& offset = fam.members.back();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n, Rat(0)));
    for (long long i = 0; i < n; ++i) {
        long long d_i = fam.members[i].d;
        const TwistProfile& off_tp = smoothed ? offset.smoothed_h : offset.exact_f;
        Rat base = mu_invariant(off_tp, d_i);
        for (long long j = 0; j < n; ++j) {
            const FamilyMember& mj = fam.members[j];
            const TwistProfile& tp = smoothed ? mj.smoothed_h : mj.exact_f;
            a[i][j] = (mu_invariant(tp, d_i) - base) / d_i;
        }
    }
    return a;
}

void check_shape(const std::vector<std::vector<Rat>>& a, long long n, bool* triangular,
                 bool* diag_positive, bool* below_ok) {
    *triangular = *diag_positive = *below_ok = true;
    for (long long i = 0; i < n; ++i) {
        for (long long j = 0; j < n; ++j) {
            if (j > i && a[i][j] != 0) *triangular = false;
            if (j == i && !(a[i][j] > 0)) *diag_positive = false;
            if (j < i && a[i][j] < Rat(3, 16)) *below_ok = false;
        }
    }
}

}  // namespace

MuMatrixReport mu_matrix(const FamilyConfig& fam) {
    if (fam.n < 2)
        throw std::invalid_argument("matrix needs a family of at least 2 members (n+1 total)");
    MuMatrixReport report;
    report.n = fam.n - 1;
    long long n = report.n;
    for (long long i = 0; i < n; ++i) report.degrees.push_back(fam.members[i].d);
    report.exact = build_matrix(fam, false, n);
    report.smoothed = build_matrix(fam, true, n);

    report.max_slack = 0;
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) {
            Rat slack = abs_rat(report.exact[i][j] - report.smoothed[i][j]);
            if (slack > report.max_slack) report.max_slack = slack;
        }

    check_shape(report.exact, n, &report.exact_triangular, &report.exact_diag_positive,
                &report.exact_below_diag_ok);
    check_shape(report.smoothed, n, &report.smoothed_triangular, &report.smoothed_diag_positive,
                &report.smoothed_below_diag_ok);
    report.all_ok = report.exact_triangular && report.smoothed_triangular &&
                    report.exact_diag_positive && report.smoothed_diag_positive &&
                    report.exact_below_diag_ok && report.smoothed_below_diag_ok;

    // Lower-triangular inverse by forward substitution, column by column.
    report.exact_inverse.assign(n, std::vector<Rat>(n, Rat(0)));
    for (long long col = 0; col < n; ++col) {
        for (long long row = 0; row < n; ++row) {
            Rat rhs = (row == col) ? Rat(1) : Rat(0);
            for (long long m = 0; m < row; ++m)
                rhs -= report.exact[row][m] * report.exact_inverse[m][col];
            if (report.exact[row][row] == 0) throw std::logic_error("singular matrix");
            report.exact_inverse[row][col] = rhs / report.exact[row][row];
        }
    }
    report.exact_inverse_norm = 0;
    for (long long row = 0; row < n; ++row) {
        Rat sum = 0;
        for (long long col = 0; col < n; ++col) sum += abs_rat(report.exact_inverse[row][col]);
        if (sum > report.exact_inverse_norm) report.exact_inverse_norm = sum;
    }
    return report;
}

EmbeddingBounds embedding_bounds(const MuMatrixReport& report, const std::vector<Rat>& t,
                                 const std::vector<Rat>& s) {
    long long n = report.n;
    if (static_cast<long long>(t.size()) != n || static_cast<long long>(s.size()) != n)
        throw std::invalid_argument("coefficient vectors must have the matrix dimension");
    for (const Rat& x : t)
        if (x < 0) throw std::invalid_argument("coefficients must be >= 0");
    for (const Rat& x : s)
        if (x < 0) throw std::invalid_argument("coefficients must be >= 0");

    EmbeddingBounds out;
    Rat sup = 0;
    for (long long i = 0; i < n; ++i) {
        Rat diff = abs_rat(t[i] - s[i]);
        if (diff > sup) sup = diff;
    }
    out.lower = 0;
    for (long long i = 0; i < n; ++i) {
        Rat row = 0;
        for (long long j = 0; j < n; ++j) row += report.exact[i][j] * (t[j] - s[j]);
        if (abs_rat(row) > out.lower) out.lower = abs_rat(row);
    }
    out.upper = Rat(2 * n) * (2 * sup + 1 + Rat(1, n));
    out.ok = out.lower <= out.upper;
    return out;
}

SeparationReport separation(const FamilyConfig& fam, const Rat& r, long long i, long long j) {
    if (r < 0) throw std::invalid_argument("time scale must be >= 0");
    if (i < 1 || j <= i) throw std::invalid_argument("separation needs 1 <= i < j");
    if (fam.n < 2 * j)
        throw std::invalid_argument("family too small: need members up to index 2j");

    SeparationReport report;
    report.i = i;
    report.j = j;
    report.k = 2 * i + 1;
    report.r = r;
    const FamilyMember& probe = fam.members[static_cast<size_t>(report.k - 1)];
    report.d_k = probe.d;
    const FamilyMember& lo = fam.members[static_cast<size_t>(2 * i - 1)];
    const FamilyMember& hi = fam.members[static_cast<size_t>(2 * j - 1)];
    report.margin_exact =
        abs_rat(mu_invariant(lo.exact_f, probe.d, r) - mu_invariant(hi.exact_f, probe.d, r)) /
        probe.d;
    report.margin_smoothed =
        abs_rat(mu_invariant(lo.smoothed_h, probe.d, r) - mu_invariant(hi.smoothed_h, probe.d, r)) /
        probe.d;
    report.bound = Rat(3) * r / 16;
    report.ok = report.margin_exact >= report.bound && report.margin_smoothed >= report.bound;
    return report;
}

GrowthReport growth_table(const InfiniteTwistSpec& spec, const std::vector<long long>& ds,
                          long long engine_cap) {
    if (ds.empty()) throw std::invalid_argument("growth table needs at least one degree");
    long long prev = 0;
    for (long long d : ds) {
        if (d < 4 || d % 2 != 0) throw std::invalid_argument("degrees must be even and >= 4");
        if (d <= prev) throw std::invalid_argument("degrees must ascend");
        prev = d;
    }
    long long bad = spec.first_unadapted(ds.back());
    if (bad != 0)
        throw std::domain_error("envelope is not adapted at node " + std::to_string(bad));

    GrowthReport report;
    report.spec_name = spec.name();
    SpectralOptions opt;
    opt.want_witnesses = false;
    bool have_prev_ratio = false;
    Rat prev_ratio;
    for (long long d : ds) {
        GrowthRow row;
        row.d = d;
        row.v = spec.v(d);
        row.eta_lower = row.v / 2 - Rat(d, 6);
        row.ratio = row.eta_lower / d;
        if (have_prev_ratio && row.ratio <= prev_ratio) report.ratios_increasing = false;
        prev_ratio = row.ratio;
        have_prev_ratio = true;
        if (d <= engine_cap) {
            long long trunc = d / 2 + 1;  // smallest i with 2i - 1 >= d + 1
            TwistProfile f = spec.truncation(trunc);
            SpectralResult top = c_dk(f, d, -d, opt);
            SpectralResult two = c_dk(f, 2, -2, opt);
            if (!top.feasible || !two.feasible)
                throw std::logic_error("grading -d must be feasible on a truncation");
            row.eta_actual = top.value - Rat(d, 2) * two.value;
            row.has_actual = true;
            row.actual_ok = row.eta_actual >= row.eta_lower;
            if (!row.actual_ok) report.actual_ok = false;
        }
        report.rows.push_back(row);
    }
    return report;
}

std::pair<Rat, Rat> lfold(const Rat& x) {
    return {x > 0 ? x : Rat(0), x < 0 ? Rat(-x) : Rat(0)};
}

Rat disc_displacement_energy(const Rat& area) {
    if (area < 0 || !(area < Rat(1, 2)))
        throw std::domain_error("disc area must lie in [0, 1/2)");
    return area;
}

}  // namespace pfh


#ifndef PFH_INVARIANTS_HPP
#define PFH_INVARIANTS_HPP

/**
 * Closed-form invariants of twist profiles and certified bounds built on
 * top of the spectral engine.
 *
 * zeta_closed is the sampled sum
 *
 *   zeta_d(h) = (1/2) sum_{i=1}^{d} h(-1 + 2i/(d+1)),
 *
 * the large-scale limit of c_{d,-d}(n h)/n; the engine side of that limit is
 * exercised by zeta_limit, which also certifies the one-sided bound
 * c_{d,-d}(n h)/n <= zeta_d(h) for every n it is given (the sampled sum
 * dominates every path action in the model, so a violation would be a bug).
 *
 * mu_invariant is the homogenized, mean-normalized spectral invariant
 * mu = t (zeta_d(h) - d * mean), linear in the time t. eta_lower_bound
 * certifies, for even d >= 4 and profiles vanishing up to height 1/3, a
 * lower bound for the defect eta_d = c_d - (d/2) c_2 by exhibiting an
 * explicit corner-witness path for c_d and controlling c_2 through the
 * small-support bound; support_control is that bound on its own.
 */

#include <string>
#include <vector>

#include "pfh/lattice.hpp"
#include "pfh/spectral.hpp"
#include "pfh/twist.hpp"

namespace pfh {

/// The sampled sum above. Requires d >= 1.
Rat zeta_closed(const TwistProfile& tp, long long d);

/// t * (zeta_closed(tp, d) - d * mean(tp)); t >= 0.
Rat mu_invariant(const TwistProfile& tp, long long d, const Rat& t = Rat(1));

/// c_{d,-d}(tp) - (d/2) c_{2,-2}(tp) through the spectral engine; d even.
Rat eta(const TwistProfile& tp, long long d);

struct ZetaLimitRow {
    long long n = 0;
    Rat c_value;  // c_{d,-d}(n * tp)
    Rat ratio;    // c_value / n
    Rat gap;      // zeta - ratio
};

struct ZetaLimitReport {
    long long d = 0;
    Rat zeta;
    std::vector<ZetaLimitRow> rows;
    bool upper_ok = true;  // gap >= 0 on every row
};

/// Engine values along a grid of scales. Throws like c_dk; the scales must
/// be >= 1 and ascending.
ZetaLimitReport zeta_limit(const TwistProfile& tp, long long d,
                           const std::vector<long long>& scales);

struct EtaLowerBound {
    long long d = 0;
    Rat bound;           // H(z0) - d/6, z0 = 1 - 2/(d+1)
    Rat h_at_z0;         // h(z0)
    long long p = 0;     // witness corner slope, a multiple of d+1
    LatticePath witness; // degree-d path of index -d with action = H(z0)
    Rat witness_action;
    std::string method;
};

/// Certified lower bound eta_d >= H(z0(d)) - d/6 for even d >= 4, for
/// profiles with support contained in {z > 1/3} that admit a multiple of
/// (d+1) between the one-sided slopes at z0(d). Throws std::domain_error
/// when the support or slope conditions fail, std::invalid_argument on a
/// bad degree.
EtaLowerBound eta_lower_bound(const TwistProfile& tp, long long d);

struct SupportControl {
    Rat bound;  // 2 d * area
    std::string method;
};

/// |c_{d,k}| <= 2 d * area for profiles supported in spherical area < 1/(d+1)
/// (strict) and |k| <= d. The arguments are the certificate's data; no
/// profile is inspected.
SupportControl support_control(long long d, const Rat& area, long long k);

struct InvariantBundle {
    long long d = 0;
    Rat t;
    Rat zeta;
    Rat mu;
    Rat calabi;
    Rat mean;
    bool has_eta_lower = false;
    Rat eta_lower;
};

/// Closed-form summary for one degree; attaches the eta lower bound when
/// its preconditions hold (even d >= 4, support and slope conditions).
InvariantBundle invariant_bundle(const TwistProfile& tp, long long d, const Rat& t = Rat(1));

}  // namespace pfh

#endif  // PFH_INVARIANTS_HPP

#include "pfh/envelope.hpp"

#include <stdexcept>

namespace pfh {

InfiniteTwistSpec::InfiniteTwistSpec(std::string name, long long onset, long long shift)
    : name_(std::move(name)), onset_(onset), shift_(shift) {}

InfiniteTwistSpec InfiniteTwistSpec::standard() {
    return InfiniteTwistSpec("standard", 2, 0);
}

InfiniteTwistSpec InfiniteTwistSpec::deep() {
    return InfiniteTwistSpec("deep", 15, 15);
}

Rat InfiniteTwistSpec::support_left() const { return z0(onset_); }

Rat InfiniteTwistSpec::z0(long long d) {
    if (d < 2) throw std::invalid_argument("node index must be >= 2");
    return Rat(1) - Rat(2, d + 1);
}

Rat InfiniteTwistSpec::v(long long d) const {
    if (d < 2) throw std::invalid_argument("node index must be >= 2");
    if (d <= onset_) return Rat(0);
    Int b = d - shift_;
    return Rat(b * b);
}

Rat InfiniteTwistSpec::secant(long long d) const {
    // z0(d+1) - z0(d) = 2 / ((d+1)(d+2))
    return (v(d + 1) - v(d)) * Rat(Int(d + 1) * (d + 2), 2);
}

Rat InfiniteTwistSpec::s(long long d) const {
    auto it = slope_overrides_.find(d);
    if (it != slope_overrides_.end()) return it->second;
    Rat incoming = (d == 2) ? Rat(0) : secant(d - 1);
    Int mult = ceil_rat(incoming / (d + 1));
    if (mult < 0) mult = 0;
    return Rat(mult * (d + 1));
}

bool InfiniteTwistSpec::check_adapted(long long d, std::string* why) const {
    Rat slope = s(d);
    if (slope < 0) {
        if (why) *why = "slope is negative";
        return false;
    }
    if (!is_integer(slope / (d + 1))) {
        if (why) *why = "slope is not a multiple of d+1";
        return false;
    }
    Rat incoming = (d == 2) ? Rat(0) : secant(d - 1);
    if (slope < incoming) {
        if (why) *why = "slope falls below the incoming secant";
        return false;
    }
    if (slope > secant(d)) {
        if (why) *why = "slope exceeds the outgoing secant";
        return false;
    }
    return true;
}

long long InfiniteTwistSpec::first_unadapted(long long dmax) const {
    for (long long d = 2; d <= dmax; ++d)
        if (!check_adapted(d)) return d;
    return 0;
}

long long InfiniteTwistSpec::first_growth_failure(long long lo, long long hi) const {
    for (long long d = lo; d < hi; ++d)
        if (v(d + 1) / (d + 1) <= v(d) / d) return d;
    return 0;
}

TwistProfile InfiniteTwistSpec::truncation(long long i) const {
    if (i < 2) throw std::invalid_argument("truncation index must be >= 2");
    long long top = 2 * i - 1;
    std::vector<Piece> pieces;
    pieces.push_back({Rat(-1), z0(2), Poly{}});
    for (long long d = 2; d < top; ++d) {
        Rat sec = secant(d);
        Poly seg(std::vector<Rat>{v(d) - sec * z0(d), sec});
        pieces.push_back({z0(d), z0(d + 1), seg});
    }
    Rat ray = s(top);
    Poly tail(std::vector<Rat>{v(top) - ray * z0(top), ray});
    pieces.push_back({z0(top), Rat(1), tail});
    return TwistProfile::from_pieces(pieces);
}

InfiniteTwistSpec InfiniteTwistSpec::with_slope_override(long long d, const Rat& slope) const {
    InfiniteTwistSpec copy = *this;
    copy.slope_overrides_[d] = slope;
    return copy;
}

}  // namespace pfh


#include "pfh/rational.hpp"

#include <limits>
#include <sstream>

namespace pfh {

Int floor_rat(const Rat& r) {
    Int q = numerator(r) / denominator(r);
    if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

Int ceil_rat(const Rat& r) {
    Int q = numerator(r) / denominator(r);
    if (numerator(r) > 0 && q * denominator(r) != numerator(r)) ++q;
    return q;
}

long long to_ll(const Int& v) {
    if (v > std::numeric_limits<long long>::max() ||
        v < std::numeric_limits<long long>::min())
        throw std::overflow_error("integer does not fit in 64 bits: " + v.str());
    return static_cast<long long>(v);
}

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(Int(text));
        }
        Int p(text.substr(0, slash));
        Int q(text.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator");
        return Rat(p, q);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational literal: " + text);
    }
}

std::string rat_str(const Rat& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string rat_decimal(const Rat& r, int sig_digits) {
    if (sig_digits < 1) throw std::invalid_argument("sig_digits must be >= 1");
    if (r == 0) return "0";
    const bool neg = r < 0;
    Int p = abs(numerator(r));
    Int q = abs(denominator(r));

    // Find exp = number of digits in front of the decimal point (may be <= 0
    // for values below 1): smallest e with |r| < 10^e.
    int exp = 0;
    {
        Int scaled_p = p;
        while (scaled_p >= q) {
            scaled_p /= 10;
            ++exp;
        }
        if (exp == 0) {
            // |r| < 1: count leading zeros after the point.
            Int scaled_q = p * 10;
            while (scaled_q < q) {
                scaled_q *= 10;
                --exp;
            }
        }
    }

    // Round p/q * 10^(sig - exp) to the nearest integer, half away from zero.
    Int shift = sig_digits - exp;
    Int num = p, den = q;
    for (Int i = 0; i < shift; ++i) num *= 10;
    for (Int i = 0; i < -shift; ++i) den *= 10;
    Int digits = (2 * num + den) / (2 * den);
    // Rounding can carry into one more digit (e.g. 999.96 -> 1000.0).
    {
        Int probe = digits, count = 0;
        while (probe > 0) {
            probe /= 10;
            ++count;
        }
        if (count > sig_digits) {
            digits = (digits + 5) / 10;
            ++exp;
        }
    }

    std::string ds = digits.str();
    while (static_cast<int>(ds.size()) < sig_digits) ds.insert(ds.begin(), '0');

    std::string out;
    if (exp >= sig_digits) {
        // Pad with zeros up to the decimal point.
        out = ds + std::string(exp - sig_digits, '0');
    } else if (exp >= 1) {
        out = ds.substr(0, exp) + "." + ds.substr(exp);
    } else {
        out = "0." + std::string(-exp, '0') + ds;
    }
    // Trim trailing zeros in the fractional part (keep at least one digit).
    if (out.find('.') != std::string::npos) {
        while (out.back() == '0') out.pop_back();
        if (out.back() == '.') out.pop_back();
    }
    return neg ? "-" + out : out;
}

}  // namespace pfh

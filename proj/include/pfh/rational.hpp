// rational.hpp : exact arithmetic primitives used across the library.
//
// Every quantity the library certifies (actions, indices, invariants, matrix
// entries) is an exact rational. We wrap boost::multiprecision behind short
// aliases so the representation stays swappable, and collect the handful of
// helpers (floor/ceil, parsing, deterministic decimal rendering) that the
// standard types do not provide directly.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace pfh {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// Floor and ceiling of a rational as big integers. cpp_int division truncates
// toward zero, so negative values need the usual adjustment.
Int floor_rat(const Rat& r);
Int ceil_rat(const Rat& r);

inline Rat abs_rat(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// Checked narrowing; throws std::overflow_error when the value does not fit.
long long to_ll(const Int& v);

// Parse "p/q" or "p" (optionally signed, q > 0 after normalization).
// Throws std::invalid_argument on malformed input or zero denominator.
Rat parse_rat(const std::string& text);

// Canonical exact rendering: "p" when integral, otherwise "p/q" in lowest
// terms with q > 0.
std::string rat_str(const Rat& r);

// Deterministic decimal rendering with the given number of significant
// digits, round half away from zero, computed in integer arithmetic only.
// Used for the human-readable column of reports; the exact string stays the
// source of truth.
std::string rat_decimal(const Rat& r, int sig_digits = 12);

}  // namespace pfh

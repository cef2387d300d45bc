#ifndef PYTUPLE_NATURAL_HPP
#define PYTUPLE_NATURAL_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace pytuple {

// Exact unbounded integer. All public entry points keep values >= 0;
// intermediate subtractions are guarded by the algebra (e.g. delta < a).
using Natural = boost::multiprecision::cpp_int;

// Parses a non-empty decimal digit string. Rejects signs, whitespace and
// anything else that would make the value inexact or negative.
Natural parse_natural(std::string_view text);

inline std::string to_decimal(const Natural& n) { return n.str(); }

inline bool is_even(const Natural& n) { return (n & 1) == 0; }
inline bool is_odd(const Natural& n) { return (n & 1) == 1; }

inline bool fits_u64(const Natural& n) {
    return n >= 0 && n <= Natural(UINT64_MAX);
}

// Exact floor square root; n must be small enough that x*x never wraps
// (callers stay below 2^62).
std::uint64_t isqrt_u64(std::uint64_t n);

// Exact floor square root of any Natural. Uses the 64-bit path when the
// value fits and falls back losslessly above that.
Natural isqrt(const Natural& n);

// (flag, root): flag iff n == root * root.
std::pair<bool, Natural> is_perfect_square(const Natural& n);

// gcd over a non-empty list with at least one value > 0.
Natural gcd_all(std::span<const Natural> values);
Natural gcd_all(const std::vector<Natural>& values);

} // namespace pytuple

#endif

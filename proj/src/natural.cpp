#include "natural.hpp"

#include <cctype>
#include <cmath>

namespace pytuple {

Natural parse_natural(std::string_view text) {
    if (text.empty())
        throw DomainError("empty string is not a natural number");
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw DomainError("'" + std::string(text) + "' is not a decimal natural number");
    }
    return Natural(std::string(text));
}

std::uint64_t isqrt_u64(std::uint64_t n) {
    if (n == 0)
        return 0;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    // the double seed can be off by one in either direction
    while (r > 0 && r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

Natural isqrt(const Natural& n) {
    if (n < 0)
        throw DomainError("square root of a negative value");
    if (n <= Natural(std::uint64_t{1} << 62))
        return Natural(isqrt_u64(n.convert_to<std::uint64_t>()));
    return boost::multiprecision::sqrt(n);
}

std::pair<bool, Natural> is_perfect_square(const Natural& n) {
    Natural root = isqrt(n);
    return {root * root == n, root};
}

Natural gcd_all(std::span<const Natural> values) {
    if (values.empty())
        throw DomainError("gcd of an empty list");
    Natural g = 0;
    for (const Natural& v : values) {
        g = boost::multiprecision::gcd(g, v);
        if (g == 1)
            return g;
    }
    if (g == 0)
        throw DomainError("gcd of an all-zero list");
    return g;
}

Natural gcd_all(const std::vector<Natural>& values) {
    return gcd_all(std::span<const Natural>(values.data(), values.size()));
}

} // namespace pytuple

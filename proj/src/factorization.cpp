#include "factorization.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <utility>

namespace pytuple {

namespace {

using boost::multiprecision::gcd;
using boost::multiprecision::powm;

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        constexpr std::uint32_t limit = 4096;
        std::vector<bool> sieve(limit, true);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i < limit; ++i) {
            if (!sieve[i])
                continue;
            out.push_back(i);
            for (std::uint32_t j = i * i; j < limit; j += i)
                sieve[j] = false;
        }
        return out;
    }();
    return primes;
}

// n odd, n > a. Returns false iff a is a Miller-Rabin witness for compositeness.
bool miller_rabin_round(const Natural& n, const Natural& a) {
    Natural d = n - 1;
    unsigned s = 0;
    while (is_even(d)) {
        d >>= 1;
        ++s;
    }
    Natural x = powm(a, d, n);
    if (x == 1 || x == n - 1)
        return true;
    for (unsigned i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1)
            return true;
    }
    return false;
}

int jacobi(Natural a, Natural n) {
    a %= n;
    if (a < 0)
        a += n;
    int result = 1;
    while (a != 0) {
        while (is_even(a)) {
            a >>= 1;
            Natural r = n % 8;
            if (r == 3 || r == 5)
                result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3)
            result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

Natural mod_norm(Natural x, const Natural& n) {
    x %= n;
    if (x < 0)
        x += n;
    return x;
}

// halve x mod odd n
Natural half_mod(Natural x, const Natural& n) {
    if (is_odd(x))
        x += n;
    return (x >> 1) % n;
}

// Strong Lucas test with Selfridge parameters. n odd, not a perfect square,
// coprime to the small primes already tried.
bool strong_lucas(const Natural& n) {
    Natural d_param = 5;
    int sign = 1;
    while (true) {
        Natural d_signed = sign > 0 ? d_param : -d_param;
        int j = jacobi(d_signed, n);
        if (j == 0)
            return d_param == n; // shares a factor with n
        if (j == -1) {
            d_param = d_signed;
            break;
        }
        d_param += 2;
        sign = -sign;
    }
    const Natural d_sel = d_param;
    const Natural p_sel = 1;
    const Natural q_sel = (Natural(1) - d_sel) / 4;

    Natural d = n + 1;
    unsigned s = 0;
    while (is_even(d)) {
        d >>= 1;
        ++s;
    }

    // Lucas chain over the bits of d, most significant first.
    std::vector<bool> bits;
    for (Natural t = d; t > 0; t >>= 1)
        bits.push_back(is_odd(t));
    std::reverse(bits.begin(), bits.end());

    Natural u = 1, v = p_sel;
    Natural qk = mod_norm(q_sel, n);
    for (std::size_t i = 1; i < bits.size(); ++i) {
        u = mod_norm(u * v, n);
        v = mod_norm(v * v - 2 * qk, n);
        qk = mod_norm(qk * qk, n);
        if (bits[i]) {
            Natural u2 = half_mod(mod_norm(p_sel * u + v, n), n);
            Natural v2 = half_mod(mod_norm(d_sel * u + p_sel * v, n), n);
            u = u2;
            v = v2;
            qk = mod_norm(qk * q_sel, n);
        }
    }
    if (u == 0 || v == 0)
        return true;
    for (unsigned r = 1; r < s; ++r) {
        v = mod_norm(v * v - 2 * qk, n);
        if (v == 0)
            return true;
        qk = mod_norm(qk * qk, n);
    }
    return false;
}

void spend(std::uint64_t& budget, std::uint64_t amount) {
    if (budget < amount)
        throw BudgetExceededError("factorization effort limit exceeded");
    budget -= amount;
}

Natural distance(const Natural& a, const Natural& b) {
    return a >= b ? a - b : b - a;
}

// Brent's cycle-finding variant of Pollard rho. Deterministic: polynomial
// offsets c = 1, 2, ... are tried in order. Every squaring is charged
// against the budget.
Natural brent_rho(const Natural& n, std::uint64_t& budget) {
    for (Natural c = 1;; ++c) {
        Natural x = 2, y = 2, q = 1, g = 1, ys = y;
        std::uint64_t r = 1;
        constexpr std::uint64_t batch = 128;
        while (g == 1) {
            x = y;
            spend(budget, r);
            for (std::uint64_t i = 0; i < r; ++i)
                y = (y * y + c) % n;
            std::uint64_t k = 0;
            while (k < r && g == 1) {
                ys = y;
                const std::uint64_t lim = std::min(batch, r - k);
                spend(budget, lim);
                for (std::uint64_t i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = (q * distance(x, y)) % n;
                }
                g = gcd(q, n);
                k += lim;
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                spend(budget, 1);
                ys = (ys * ys + c) % n;
                g = gcd(distance(x, ys), n);
            }
        }
        if (g != n)
            return g;
    }
}

} // namespace

bool is_prime(const Natural& n) {
    if (n < 2)
        return false;
    for (std::uint32_t p : small_primes()) {
        if (n == p)
            return true;
        if (n % p == 0)
            return false;
        if (Natural(p) * p > n)
            return true;
    }
    static const std::array<unsigned, 13> bases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (unsigned b : bases) {
        if (!miller_rabin_round(n, Natural(b)))
            return false;
    }
    // the 13-prime base set is a proof below this bound
    static const Natural deterministic_bound("3317044064679887385961981");
    if (n < deterministic_bound)
        return true;
    if (is_perfect_square(n).first)
        return false;
    return strong_lucas(n);
}

Factorization factorize(const Natural& n, std::uint64_t budget) {
    if (n == 0)
        throw DomainError("0 has no prime factorization");
    std::map<Natural, unsigned> acc;
    Natural rem = n;
    for (std::uint32_t p : small_primes()) {
        if (rem == 1 || Natural(p) * p > rem)
            break;
        while (rem % p == 0) {
            acc[p] += 1;
            rem /= p;
        }
    }
    if (rem > 1) {
        std::vector<std::pair<Natural, unsigned>> work{{rem, 1}};
        while (!work.empty()) {
            auto [v, mult] = work.back();
            work.pop_back();
            if (is_prime(v)) {
                acc[v] += mult;
                continue;
            }
            if (auto [sq, root] = is_perfect_square(v); sq) {
                work.emplace_back(root, mult * 2);
                continue;
            }
            Natural f = brent_rho(v, budget);
            work.emplace_back(f, mult);
            work.emplace_back(v / f, mult);
        }
    }
    Factorization out;
    out.value = n;
    out.factors.reserve(acc.size());
    for (auto& [p, e] : acc)
        out.factors.push_back({p, e});
    return out;
}

Factorization square(const Factorization& f) {
    Factorization out;
    out.value = f.value * f.value;
    out.factors.reserve(f.factors.size());
    for (const auto& pp : f.factors)
        out.factors.push_back({pp.prime, pp.exponent * 2});
    return out;
}

Natural divisor_count(const Factorization& f) {
    Natural tau = 1;
    for (const auto& pp : f.factors)
        tau *= pp.exponent + 1;
    return tau;
}

std::vector<Natural> divisors_below(const Factorization& f, const Natural& bound,
                                    DivisorParity parity) {
    // build products incrementally, dropping anything >= bound right away:
    // multiplying can only grow a divisor, so pruned values never come back
    std::vector<Natural> divs;
    if (bound > 1)
        divs.push_back(1);
    for (const auto& pp : f.factors) {
        const std::size_t base = divs.size();
        Natural pk = 1;
        for (unsigned e = 1; e <= pp.exponent; ++e) {
            pk *= pp.prime;
            if (pk >= bound)
                break;
            for (std::size_t j = 0; j < base; ++j) {
                Natural d = divs[j] * pk;
                if (d < bound)
                    divs.push_back(std::move(d));
            }
        }
    }
    if (parity == DivisorParity::SameAsCofactor) {
        std::erase_if(divs, [&](const Natural& d) {
            return is_even(d) != is_even(f.value / d);
        });
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

} // namespace pytuple

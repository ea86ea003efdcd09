// Small-number utilities: primality by trial division (inputs here are
// sweep parameters, comfortably below 2^40), prime-power decomposition,
// p-adic valuations and digit sums.

#pragma once

#include <degsum/bigint.hpp>
#include <optional>
#include <numeric>

namespace degsum {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
        if (n == d) return true;
        if (n % d == 0) return false;
    }
    for (std::uint64_t d = 11; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> primes_upto(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t k = 2; k <= n; ++k)
        if (is_prime(k)) out.push_back(k);
    return out;
}

struct PrimePower {
    std::uint64_t p;
    std::uint64_t e;
};

// q = p^e with e >= 1, or nothing
inline std::optional<PrimePower> as_prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) { p = d; break; }
    std::uint64_t e = 0, m = q;
    while (m % p == 0) { m /= p; ++e; }
    if (m != 1) return std::nullopt;
    return PrimePower{p, e};
}

inline bool is_power_of(std::uint64_t x, std::uint64_t b) {
    if (b < 2 || x < b) return false;
    while (x % b == 0) x /= b;
    return x == 1;
}

struct Valuation {
    std::uint64_t exponent;
    Nat cofactor;  // the p'-part
};

// n = p^e * cofactor with p not dividing cofactor; rejects n = 0 and non-prime p
inline Valuation valuation(const Nat& n, std::uint64_t p) {
    if (n.is_zero()) throw std::domain_error("valuation: zero input");
    if (!is_prime(p)) throw std::domain_error("valuation: p is not prime");
    std::uint64_t e = 0;
    Nat m = n, pn(p);
    for (;;) {
        auto [q, r] = divmod(m, pn);
        if (!r.is_zero()) break;
        m = std::move(q);
        ++e;
    }
    return {e, std::move(m)};
}

inline Nat p_part(const Nat& n, std::uint64_t p) {
    return pow(Nat(p), valuation(n, p).exponent);
}

inline std::uint64_t digit_sum(std::uint64_t n, std::uint64_t p) {
    std::uint64_t s = 0;
    while (n) { s += n % p; n /= p; }
    return s;
}

// Legendre: v_p(n!) = (n - digit_sum_p(n)) / (p - 1)
inline std::uint64_t factorial_valuation(std::uint64_t n, std::uint64_t p) {
    return (n - digit_sum(n, p)) / (p - 1);
}

// distinct primes dividing n (n fits comfortably in 64 bits after cofactoring)
inline std::vector<std::uint64_t> prime_divisors_u64(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) out.push_back(n);
    return out;
}

inline std::vector<std::uint64_t> prime_divisors(const Nat& n) {
    std::vector<std::uint64_t> out;
    Nat m = n;
    for (std::uint64_t d = 2; ; ++d) {
        if (m.fits_u64()) {
            for (auto p : prime_divisors_u64(m.to_u64()))
                if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
            std::sort(out.begin(), out.end());
            return out;
        }
        auto [q, r] = divmod(m, Nat(d));
        if (r.is_zero()) {
            out.push_back(d);
            do {
                m = std::move(q);
                auto qr = divmod(m, Nat(d));
                if (!qr.second.is_zero()) break;
                q = std::move(qr.first);
            } while (true);
        }
    }
}

} // namespace degsum

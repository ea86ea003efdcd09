// Gaussian binomial coefficients at integer q, evaluated exactly.

#pragma once

#include <degsum/bigint.hpp>

namespace degsum {

// (m choose k)_q = prod_{i=0}^{k-1} (q^{m-i} - 1) / prod_{i=0}^{k-1} (q^{k-i} - 1)
inline Nat q_binomial(std::uint64_t m, std::uint64_t k, const Nat& q) {
    if (k > m) throw std::domain_error("q_binomial: k > m");
    if (q < Nat(2)) throw std::domain_error("q_binomial: q must be >= 2");
    if (k == 0 || k == m) return Nat(1);
    Nat num(1), den(1);
    for (std::uint64_t i = 0; i < k; ++i) {
        num = num * (pow(q, m - i) - Nat(1));
        den = den * (pow(q, k - i) - Nat(1));
    }
    return div_exact(num, den);
}

} // namespace degsum

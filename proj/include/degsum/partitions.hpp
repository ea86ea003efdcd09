// Partition counts, partition-pair convolutions, the Euler-product
// pentagonal bracket and the p*(r) majorant bracket.
//
// The p(r) table is filled once by the Euler pentagonal recurrence
//   p(r) = sum_{k>=1} (-1)^{k+1} [ p(r - k(3k-1)/2) + p(r - k(3k+1)/2) ]
// and memoized up to a configured cap (default 256; every threshold in the
// sweeps is far below that).

#pragma once

#include <degsum/bigint.hpp>
#include <degsum/rational.hpp>
#include <degsum/realfun.hpp>
#include <degsum/numtheory.hpp>

namespace degsum {

inline constexpr std::size_t kPartitionCap = 256;

namespace detail {

inline const std::vector<Nat>& partition_table() {
    static const std::vector<Nat> table = [] {
        std::vector<Nat> p(kPartitionCap + 1);
        p[0] = Nat(1);
        for (std::size_t r = 1; r <= kPartitionCap; ++r) {
            Nat plus, minus;
            for (std::size_t k = 1;; ++k) {
                std::size_t g1 = k * (3 * k - 1) / 2;
                std::size_t g2 = k * (3 * k + 1) / 2;
                if (g1 > r) break;
                Nat term = p[r - g1];
                if (g2 <= r) term = term + p[r - g2];
                if (k % 2 == 1) plus = plus + term; else minus = minus + term;
            }
            p[r] = plus - minus;
        }
        return p;
    }();
    return table;
}

} // namespace detail

inline Nat partition_count(std::size_t r) {
    if (r > kPartitionCap) throw std::out_of_range("partition_count: above configured cap");
    return detail::partition_table()[r];
}

// conv(r) = sum_a p(a) p(r-a), the bipartition count at total size r
inline Nat partition_pair_count(std::size_t r) {
    Nat s;
    for (std::size_t a = 0; a <= r; ++a)
        s = s + partition_count(a) * partition_count(r - a);
    return s;
}

// Bracket of prod_{i>=1} (1 - q^{-i}) from the pentagonal expansion
//   1 - x - x^2 + x^5 + x^7 - x^{12} - x^{15} + ...   (x = 1/q)
// Terms are summed in sign-pairs; partial sums after a negative pair are
// lower bounds and after a positive pair upper bounds, and they nest as
// more pairs are taken.
inline Bracket euler_product_bracket(const Rat& q, std::size_t terms) {
    if (q < Rat(2)) throw std::domain_error("euler_product_bracket: q must be >= 2");
    if (terms < 2) throw std::domain_error("euler_product_bracket: need at least 2 pairs");
    Rat x = q.reciprocal();
    Rat partial(1);
    Rat lower, upper;
    bool have_lower = false, have_upper = false;
    for (std::size_t k = 1; k <= terms; ++k) {
        Rat g1 = pow(x, k * (3 * k - 1) / 2);
        Rat g2 = pow(x, k * (3 * k + 1) / 2);
        if (k % 2 == 1) {
            partial = partial - g1 - g2;
            lower = partial;
            have_lower = true;
        } else {
            partial = partial + g1 + g2;
            upper = partial;
            have_upper = true;
        }
    }
    if (!have_upper) upper = Rat(1);   // product is < 1 anyway
    if (!have_lower) throw std::logic_error("euler_product_bracket: no lower partial");
    return Bracket(lower, upper);
}

// Bracket of p*(r) = exp(pi sqrt(2r/3)) / r^{3/4}  (and p*(0) = 1).
// Dyadic endpoints, so exact rational comparisons downstream stay cheap.
inline Bracket p_star_bracket(std::size_t r, std::size_t precision = 128) {
    if (r == 0) return Bracket(Rat(1), Rat(1));
    const std::size_t p = precision + 8;
    DyInterval two_r_over_3 = DyInterval::from_rat(Rat(static_cast<std::int64_t>(2 * r), 3), p);
    DyInterval expo = pi_iv(p).mul(two_r_over_3.sqrt(p), p);
    DyInterval numer = exp_iv(expo, p);
    // r^{3/4} = sqrt(sqrt(r^3))
    DyInterval r3{Dyadic(Int(pow(Nat(r), 3)))};
    DyInterval denom = r3.sqrt(p).sqrt(p);
    return numer.div(denom, precision).to_bracket();
}

} // namespace degsum

// Unipotent character counts for the classical types and the comparison of
// v against |W| and |W|^{1/sqrt r}.
//
// The root comparison v <= |W|^{1/sqrt r} is decided in two sound stages:
// first an integer test v^k <= |W|^j where j/k is the best rational
// under-approximation of 1/sqrt(r) with denominator <= 64 (a pass is
// conclusive since |W| >= 1), then a high-precision bracket of |W|^{1/sqrt r}
// with doubling precision. The bracket stage reports UNDECIDED at the cap
// rather than guessing.

#pragma once

#include <degsum/partitions.hpp>

namespace degsum {

enum class LieClass { A, TwoA, BC, D, TwoD };

inline Nat unipotent_count_A(std::uint64_t r) {
    if (r < 1) throw std::domain_error("unipotent_count_A: r >= 1");
    return partition_count(r + 1);
}

// v = sum over s >= 0 with s + s^2 <= r of conv(r - s - s^2)
inline Nat unipotent_count_BC(std::uint64_t r) {
    if (r < 2) throw std::domain_error("unipotent_count_BC: r >= 2");
    Nat v;
    for (std::uint64_t s = 0; s + s * s <= r; ++s)
        v = v + partition_pair_count(r - s - s * s);
    return v;
}

// v = sum over odd positive s with s^2 <= r of conv(r - s^2)
inline Nat unipotent_count_2D(std::uint64_t r) {
    if (r < 4) throw std::domain_error("unipotent_count_2D: r >= 4");
    Nat v;
    for (std::uint64_t s = 1; s * s <= r; s += 2)
        v = v + partition_pair_count(r - s * s);
    return v;
}

// v = sum over even s >= 2 with s^2 <= r of conv(r - s^2) + eps, where the
// defect-zero term eps is conv(r)/2 for odd r and conv(r)/2 + (3/2) p(r/2)
// for even r; integrality of the total is asserted, not assumed.
inline Nat unipotent_count_D(std::uint64_t r) {
    if (r < 4) throw std::domain_error("unipotent_count_D: r >= 4");
    Rat v;
    for (std::uint64_t s = 2; s * s <= r; s += 2)
        v = v + Rat(Int(partition_pair_count(r - s * s)));
    Rat eps = Rat(Int(partition_pair_count(r)), Nat(2));
    if (r % 2 == 0) eps = eps + Rat(3, 2) * Rat(Int(partition_count(r / 2)));
    v = v + eps;
    return v.to_nat();  // throws if the halves fail to cancel
}

inline Nat unipotent_count(LieClass t, std::uint64_t r) {
    switch (t) {
        case LieClass::A:
        case LieClass::TwoA: return unipotent_count_A(r);
        case LieClass::BC:   return unipotent_count_BC(r);
        case LieClass::D:    return unipotent_count_D(r);
        case LieClass::TwoD: return unipotent_count_2D(r);
    }
    throw std::logic_error("unipotent_count: bad type");
}

inline Nat weyl_order_of(LieClass t, std::uint64_t r) {
    switch (t) {
        case LieClass::A:
        case LieClass::TwoA: return factorial(r + 1);
        case LieClass::BC:   return pow(Nat(2), r) * factorial(r);
        case LieClass::D:
        case LieClass::TwoD: return pow(Nat(2), r - 1) * factorial(r);
    }
    throw std::logic_error("weyl_order_of: bad type");
}

enum class RootVerdict { leq_W_root, leq_W_only, undecided };

inline constexpr std::size_t kRootPrecisionCap = 4096;

// Decides v <= W^{1/sqrt r}; requires v <= W (checked).
inline RootVerdict root_compare(const Nat& v, const Nat& W, std::uint64_t r,
                                std::size_t precision_cap = kRootPrecisionCap) {
    if (v > W) throw std::logic_error("root_compare: v exceeds |W|");
    if (v <= Nat(1) || r == 1) return RootVerdict::leq_W_root;

    // stage 1: maximal j/k <= 1/sqrt(r) with k <= 64, test v^k <= W^j
    {
        std::uint64_t best_j = 0, best_k = 1;
        for (std::uint64_t k = 1; k <= 64; ++k) {
            std::uint64_t j = 0;
            while ((j + 1) * (j + 1) * r <= k * k) ++j;
            if (j * best_k > best_j * k) { best_j = j; best_k = k; }
        }
        if (best_j > 0 && pow(v, best_k) <= pow(W, best_j)) return RootVerdict::leq_W_root;
    }

    // stage 2: bracket W^{1/sqrt r}, doubling precision until conclusive
    for (std::size_t prec = 128; prec <= precision_cap; prec *= 2) {
        DyInterval lnW = ln_point(Dyadic(Int(W)), prec);
        DyInterval sr = DyInterval(Dyadic(Int(Nat(r)))).sqrt(prec);
        DyInterval root = exp_iv(lnW.div(sr, prec), prec);
        Rat value{Int(v)};
        if (cmp(root.lo(), value) >= 0) return RootVerdict::leq_W_root;
        if (cmp(root.hi(), value) < 0) return RootVerdict::leq_W_only;
    }
    return RootVerdict::undecided;
}

struct ThresholdRow {
    std::uint64_t r;
    Nat v;
    Nat weyl;
    RootVerdict verdict;
};

// one row per rank up to r_max, exact counts and the two comparisons
inline std::vector<ThresholdRow> threshold_report(LieClass t, std::uint64_t r_max) {
    std::uint64_t r_min = t == LieClass::A || t == LieClass::TwoA ? 1
                         : t == LieClass::BC                      ? 2 : 4;
    std::vector<ThresholdRow> rows;
    for (std::uint64_t r = r_min; r <= r_max; ++r) {
        ThresholdRow row{r, unipotent_count(t, r), weyl_order_of(t, r), RootVerdict::undecided};
        row.verdict = root_compare(row.v, row.weyl, r);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace degsum

// Sylow orders and the torus-normalizer bound chain.
//
// sylow_sym gives the exact Sylow p-part of Sym(n) from the p-adic digits
// of n; for Lie-type groups in non-defining characteristic the bound
// |P| <= (q0+1)^r |W|_p comes from embedding P in a torus normalizer. Two
// variants of |W|_p are offered: the exact p-part, and the 2-power chain
// (n!)_p <= 2^{n-1} the source inequalities use; the derivation list records
// which one produced a value.

#pragma once

#include <degsum/orders.hpp>

namespace degsum {

// exact Sylow p-subgroup order of Sym(n), via |P| = prod p^{a_i (p^i-1)/(p-1)}
inline Nat sylow_sym(std::uint64_t n, std::uint64_t p) {
    if (!is_prime(p)) throw std::domain_error("sylow_sym: p not prime");
    if (n == 0) throw std::domain_error("sylow_sym: n >= 1 required");
    // digit a_i of n in base p contributes a_i * (p^i - 1)/(p - 1)
    std::uint64_t exponent = 0, repunit = 0, m = n;
    while (m) {
        exponent += (m % p) * repunit;
        m /= p;
        repunit = repunit * p + 1;
    }
    return pow(Nat(p), exponent);
}

enum class BoundTightness { equality, strict };

// |P| <= 2^{n-1} for a Sylow p-subgroup of Sym(n), with equality detection
inline BoundTightness sylow_sym_2bound(std::uint64_t n, std::uint64_t p) {
    Nat P = sylow_sym(n, p);
    Nat cap = pow(Nat(2), n - 1);
    if (P > cap) throw std::logic_error("sylow_sym_2bound: bound violated");
    return P == cap ? BoundTightness::equality : BoundTightness::strict;
}

enum class SylowBoundKind { exact, upper_bound_on_P, lower_bound_on_index };
enum class WeylPartMode { sharp, paper };

struct SylowBound {
    QuadInt value;
    SylowBoundKind kind;
    std::vector<std::string> derivation;
};

namespace detail {

// the 2-power majorant of |W|_p used in the source chains
inline Nat weyl_p_part_paper(const GroupSpec& s, const OrderFormula& f) {
    switch (s.family) {
        case Family::LinearGL: case Family::LinearPGL: case Family::LinearPSL:
        case Family::UnitaryGU: case Family::UnitaryPGU: case Family::UnitaryPSU:
            return pow(Nat(2), s.n_or_rank - 1);            // (n!)_p <= 2^{n-1}
        case Family::OrthOddGO: case Family::OrthOddOmega:
            return pow(Nat(2), 2 * s.n_or_rank - 1);        // 2^m (m!)_p <= 2^{2m-1}
        case Family::SympSp: case Family::SympPSp:
            return pow(Nat(2), 2 * s.n_or_rank - 1);
        case Family::OrthEvenAdjPlus: case Family::OrthEvenAdjMinus:
        case Family::OrthEvenSimplePlus: case Family::OrthEvenSimpleMinus:
            return pow(Nat(2), 2 * (s.n_or_rank - 1));      // 2^{r-1} (r!)_p <= 4^{r-1}
        default:
            return f.weyl_order;                            // crude |W|_p <= |W|
    }
}

} // namespace detail

// (q0+1)^r * |W|_p, an upper bound on |P| for p != ell
inline SylowBound torus_weyl_bound(const GroupSpec& s, std::uint64_t p,
                                   WeylPartMode mode = WeylPartMode::sharp) {
    if (!family_is_lie(s.family))
        throw std::domain_error("torus_weyl_bound: Lie-type families only");
    OrderFormula f = order(s);
    if (p == f.ell) throw std::domain_error("torus_weyl_bound: p equals the defining characteristic");
    if (!is_prime(p)) throw std::domain_error("torus_weyl_bound: p not prime");

    QuadInt torus = pow(q0_of(s) + QuadInt(Rat(1)), f.rank);
    Nat wp = mode == WeylPartMode::sharp ? p_part(f.weyl_order, p)
                                         : detail::weyl_p_part_paper(s, f);
    SylowBound b;
    b.value = torus * QuadInt(Rat(Int(wp)));
    b.kind = SylowBoundKind::upper_bound_on_P;
    b.derivation = {"torus normalizer", "(q0+1)^r eigenvalue bound"};
    b.derivation.push_back(mode == WeylPartMode::sharp ? "exact |W|_p"
                                                       : "2^{n-1} factorial majorant");
    return b;
}

// lower bound on |S|_{p'} = |S| / |P|, dividing |S| by the torus-Weyl bound;
// for Alt(n) the bound |P| <= 2^{n-1} gives |S|_{p'} >= n!/2^n
inline SylowBound index_lower_bound(const GroupSpec& s, std::uint64_t p,
                                    WeylPartMode mode = WeylPartMode::sharp) {
    if (s.family == Family::Sym || s.family == Family::Alt) {
        Nat half_fact = order(GroupSpec{Family::Alt, s.n_or_rank, 0, {}}).group_order;
        SylowBound b;
        b.value = QuadInt(Rat(Int(half_fact), pow(Nat(2), s.n_or_rank - 1)));
        b.kind = SylowBoundKind::lower_bound_on_index;
        b.derivation = {"Sym Sylow 2-power bound"};
        return b;
    }
    SylowBound tw = torus_weyl_bound(s, p, mode);
    OrderFormula f = order(s);
    SylowBound b;
    b.value = QuadInt(Rat(Int(f.simple_order))) * tw.value.reciprocal();
    b.kind = SylowBoundKind::lower_bound_on_index;
    b.derivation = tw.derivation;
    b.derivation.push_back("divide |S|");
    return b;
}

// exact |S|_{p'}: cofactor of the p-part of the simple order
inline Nat index_exact(const GroupSpec& s, std::uint64_t p) {
    return valuation(order(s).simple_order, p).cofactor;
}

} // namespace degsum

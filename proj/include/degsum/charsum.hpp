// Character degree sums: exact formulas where they exist (GL, GU, odd
// orthogonal, PGL2/PGL3/PGU3/PSL2, the 2F4 polynomial, involution counts for
// Sym) and certified upper bounds elsewhere (the C polynomial table for
// exceptional groups, |G|_{ell'} |W| for classical adjoint groups).

#pragma once

#include <degsum/qbinomial.hpp>
#include <degsum/sylow.hpp>

namespace degsum {

enum class SigmaKind { exact, upper_bound };

struct SigmaResult {
    QuadInt value;
    SigmaKind kind;
    std::string source;

    // exact results are nonnegative integers
    Nat exact_nat() const {
        if (kind != SigmaKind::exact || !value.is_rational())
            throw std::logic_error("SigmaResult: not an exact integer");
        return value.rational_part().to_nat();
    }
};

// t_n = t_{n-1} + (n-1) t_{n-2}: solutions of x^2 = 1 in Sym(n)
inline Nat sigma_sym(std::uint64_t n) {
    Nat prev(1), cur(1);  // t_0, t_1
    if (n == 0) return prev;
    for (std::uint64_t k = 2; k <= n; ++k) {
        Nat next = cur + Nat(k - 1) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// Sigma(GL_n(q)) = q^{n(n+1)/2} prod_{i odd <= n} (1 - q^{-i}), expanded
// over integers as q^{n(n+1)/2 - sum_odd i} prod_{i odd} (q^i - 1)
inline Nat sigma_gl(std::uint64_t n, std::uint64_t q) {
    if (n < 1) throw std::domain_error("sigma_gl: n >= 1");
    if (!as_prime_power(q)) throw std::domain_error("sigma_gl: q must be a prime power");
    std::uint64_t odd_sum = 0;
    Nat prod(1);
    for (std::uint64_t i = 1; i <= n; i += 2) {
        odd_sum += i;
        prod = prod * (pow(Nat(q), i) - Nat(1));
    }
    return pow(Nat(q), n * (n + 1) / 2 - odd_sum) * prod;
}

// Sigma(GU_n(q)) = prod_{i odd <= n} (q^i + 1) * prod_{i even <= n} q^i
inline Nat sigma_gu(std::uint64_t n, std::uint64_t q) {
    if (n < 1) throw std::domain_error("sigma_gu: n >= 1");
    if (!as_prime_power(q)) throw std::domain_error("sigma_gu: q must be a prime power");
    Nat r(1);
    std::uint64_t even_sum = 0;
    for (std::uint64_t i = 1; i <= n; ++i) {
        if (i % 2) r = r * (pow(Nat(q), i) + Nat(1));
        else even_sum += i;
    }
    return r * pow(Nat(q), even_sum);
}

// Sigma(GO_{2m+1}(q)) = 2 sum_k q^{2k(m-k+1)} (m choose k)_{q^2}, odd q
inline Nat sigma_go_odd(std::uint64_t m, std::uint64_t q) {
    if (m < 1) throw std::domain_error("sigma_go_odd: m >= 1");
    auto pp = as_prime_power(q);
    if (!pp || pp->p == 2) throw std::domain_error("sigma_go_odd: odd q required");
    Nat q2 = Nat(q) * Nat(q);
    Nat s;
    for (std::uint64_t k = 0; k <= m; ++k)
        s = s + pow(Nat(q), 2 * k * (m - k + 1)) * q_binomial(m, k, q2);
    return Nat(2) * s;
}

// When gcd(n, q-1) = 1 the scalars split GL_n(q) as Z x SL_n(q) with
// SL = PSL, so Sigma(PSL_n(q)) = Sigma(GL_n(q)) / (q-1); same on the
// unitary side with q+1.
inline std::optional<Nat> sigma_psl_split(std::uint64_t n, std::uint64_t q) {
    if (std::gcd(n, q - 1) != 1) return std::nullopt;
    return div_exact(sigma_gl(n, q), Nat(q - 1));
}
inline std::optional<Nat> sigma_psu_split(std::uint64_t n, std::uint64_t q) {
    if (std::gcd(n, q + 1) != 1) return std::nullopt;
    return div_exact(sigma_gu(n, q), Nat(q + 1));
}

// The four families with quoted closed forms.
inline Nat sigma_small_lie(const GroupSpec& s) {
    validate(s);
    auto pp = as_prime_power(s.q);
    const std::uint64_t q = s.q;
    switch (s.family) {
        case Family::LinearPGL:
            if (s.n_or_rank == 2) {
                Nat qq = Nat(q) * Nat(q);
                return pp->p == 2 ? qq : qq + Nat(1);
            }
            if (s.n_or_rank == 3) return Nat(q) * Nat(q) * (pow(Nat(q), 3) - Nat(1));
            break;
        case Family::UnitaryPGU:
            if (s.n_or_rank == 3) return Nat(q) * Nat(q) * (pow(Nat(q), 3) + Nat(1));
            break;
        case Family::LinearPSL:
            if (s.n_or_rank == 2) {
                if (q < 4) throw std::domain_error("sigma_small_lie: PSL2 needs q >= 4");
                if (pp->p == 2) return Nat(q) * Nat(q);
                if (q % 4 == 1) return div_exact(Nat(q) * Nat(q) + Nat(q) + Nat(2), Nat(2));
                return div_exact(Nat(q) * (Nat(q) + Nat(1)), Nat(2));
            }
            break;
        default: break;
    }
    throw std::domain_error("sigma_small_lie: only PGL2, PGL3, PGU3, PSL2");
}

// Bound C for an exceptional family (exact rational, never rounded)
inline SigmaResult sigma_exceptional_bound(const GroupSpec& s) {
    validate(s);
    if (!family_is_exceptional(s.family))
        throw std::domain_error("sigma_exceptional_bound: exceptional families only");
    auto qp = [&](std::uint64_t e) { return Rat(Int(pow(Nat(s.q), e))); };
    Rat c;
    switch (s.family) {
        case Family::Suzuki2B2:   c = qp(3); break;
        case Family::Triality3D4: c = qp(16) + qp(13); break;
        case Family::G2:          c = qp(8) + Rat(3, 2) * qp(6); break;
        case Family::Ree2G2:      c = qp(4); break;
        case Family::F4:          c = qp(28) + qp(27); break;
        case Family::Ree2F4:      c = qp(14); break;
        case Family::E6:          c = qp(42) + qp(38); break;
        case Family::Twisted2E6:  c = qp(42) + qp(39); break;
        case Family::E7:          c = qp(70) + qp(67); break;
        case Family::E8:          c = qp(128) + qp(125); break;
        default: throw std::logic_error("sigma_exceptional_bound: unreachable");
    }
    return SigmaResult{QuadInt(c), SigmaKind::upper_bound, "exceptional C table"};
}

// The 24-term degree-sum polynomial of 2F4(q); sqrt(2q) = 2^{m+1} is an
// integer for q = 2^{2m+1}, so the value is an exact integer. The companion
// bound "< q^14" holds for m >= 1; the m = 0 evaluation exceeds it (the
// generic degree data does not describe 2F4(2); see README).
inline Nat sigma_2f4_exact(std::uint64_t q) {
    auto pp = as_prime_power(q);
    if (!pp || pp->p != 2 || pp->e % 2 == 0)
        throw std::domain_error("sigma_2f4_exact: q = 2^{2m+1} required");
    const std::uint64_t m = (pp->e - 1) / 2;
    const Rat s(Int(pow(Nat(2), m + 1)));  // sqrt(2q)
    auto qp = [&](std::uint64_t e) { return Rat(Int(pow(Nat(q), e))); };
    Rat v = qp(14) - qp(13) + s * qp(12) + qp(12) - s * qp(11) + qp(11)
          - s * qp(10) + Rat(4, 3) * qp(10) + Rat(3) * s * qp(9) - Rat(2) * qp(9)
          - s * qp(8) + Rat(2) * qp(8) - Rat(3) * s * qp(7) - qp(7)
          + Rat(3) * s * qp(6) - Rat(8, 3) * qp(6) + s * qp(5) + qp(5)
          - Rat(3) * s * qp(4) + s * qp(3) - Rat(2) * qp(3) + s * qp(2)
          + Rat(7, 3) * qp(2) - s * Rat(Int(Nat(q)));
    Nat value = v.to_nat();  // integrality is part of the contract
    if (m >= 1 && !(Rat(Int(value)) < qp(14)))
        throw std::logic_error("sigma_2f4_exact: q^14 bound violated for m >= 1");
    return value;
}

// Uniform bound Sigma(G_ad) < |G_ad|_{ell'} |W| for the adjoint group of the
// spec's family; the simple group sits inside G_ad with abelian quotient, so
// this also dominates Sigma(S).
inline Nat adjoint_weyl_bound(const GroupSpec& s) {
    GroupSpec adjoint = s;
    switch (s.family) {
        case Family::LinearGL: case Family::LinearPSL:
            adjoint.family = Family::LinearPGL; break;
        case Family::UnitaryGU: case Family::UnitaryPSU:
            adjoint.family = Family::UnitaryPGU; break;
        case Family::SympPSp:
            adjoint.family = Family::SympSp; break;  // |PGSp_{2r}(q)| = |Sp_{2r}(q)|
        case Family::OrthEvenSimplePlus:
            adjoint.family = Family::OrthEvenAdjPlus; break;
        case Family::OrthEvenSimpleMinus:
            adjoint.family = Family::OrthEvenAdjMinus; break;
        case Family::OrthOddOmega:
            adjoint.family = Family::OrthOddGO; break;
        default: break;
    }
    OrderFormula f = order(adjoint);
    if (f.ell == 0 || f.weyl_order.is_zero())
        throw std::domain_error("adjoint_weyl_bound: Lie-type families only");
    Nat g = f.group_order;
    // |SO_{2m+1}(q)| = |GO_{2m+1}(q)| / 2 is the adjoint order on the odd
    // orthogonal side
    if (adjoint.family == Family::OrthOddGO) g = div_exact(g, Nat(2));
    return valuation(g, f.ell).cofactor * f.weyl_order;
}

// z(q) = (1+q^{-1})(1+q^{-3}) exp(1/(q^3(q^2-1))) bracketed rationally via
// 1 + x < exp(x) <= 1 + x + x^2 on (0,1]
inline Bracket unitary_z_bracket(std::uint64_t q) {
    Rat x(Int(1), pow(Nat(q), 3) * (Nat(q) * Nat(q) - Nat(1)));
    Rat base = (Rat(1) + Rat(Int(1), Nat(q))) * (Rat(1) + Rat(Int(1), pow(Nat(q), 3)));
    return Bracket(base * (Rat(1) + x), base * (Rat(1) + x + x * x));
}

// square-free split of n!: n! = s^2 * d, returning (s, d)
inline std::pair<Nat, Nat> factorial_sqrt_split(std::uint64_t n) {
    Nat s(1), d(1);
    for (std::uint64_t p = 2; p <= n; ++p) {
        if (!is_prime(p)) continue;
        std::uint64_t e = factorial_valuation(n, p);
        s = s * pow(Nat(p), e / 2);
        if (e % 2) d = d * Nat(p);
    }
    return {std::move(s), std::move(d)};
}

// Tightest available upper bound on Sigma for the given family.
inline SigmaResult sigma_upper_general(const GroupSpec& s) {
    validate(s);
    const std::uint64_t n = s.n_or_rank;
    switch (s.family) {
        case Family::Sym:
        case Family::Alt: {
            // eq5: Sigma_n <= 2^n (n!)^{1/2}, kept exact as a quadratic integer
            auto [sq, d] = factorial_sqrt_split(n);
            Nat coeff = pow(Nat(2), n) * sq;
            QuadInt v = d.is_one() ? QuadInt(Rat(Int(coeff)))
                                   : QuadInt(Rat(0), Rat(Int(coeff)), d.to_u64());
            return {v, SigmaKind::upper_bound, "2^n sqrt(n!)"};
        }
        case Family::LinearGL:
            return {QuadInt(Rat(Int(sigma_gl(n, s.q)))), SigmaKind::exact, "GL product formula"};
        case Family::LinearPGL:
        case Family::LinearPSL:
            if (n == 2 || (n == 3 && s.family == Family::LinearPGL))
                return {QuadInt(Rat(Int(sigma_small_lie(s)))), SigmaKind::exact, "closed PGL/PSL2 form"};
            return {QuadInt(Rat(Int(sigma_gl(n, s.q)))), SigmaKind::upper_bound,
                    "Sigma(GL) majorant"};
        case Family::UnitaryGU:
            return {QuadInt(Rat(Int(sigma_gu(n, s.q)))), SigmaKind::exact, "GU product formula"};
        case Family::UnitaryPGU:
        case Family::UnitaryPSU:
            if (n == 3 && s.family == Family::UnitaryPGU)
                return {QuadInt(Rat(Int(sigma_small_lie(s)))), SigmaKind::exact, "closed PGU3 form"};
            return {QuadInt(Rat(Int(sigma_gu(n, s.q)))), SigmaKind::upper_bound,
                    "Sigma(GU) majorant"};
        case Family::OrthOddGO:
            return {QuadInt(Rat(Int(sigma_go_odd(n, s.q)))), SigmaKind::exact, "GO-odd q-binomial formula"};
        case Family::OrthOddOmega: {
            // GO = SO x {+-1} so Sigma(SO) = Sigma(GO)/2, and Omega <= SO has
            // abelian quotient
            Rat half(Int(sigma_go_odd(n, s.q)), Nat(2));
            return {QuadInt(half), SigmaKind::upper_bound, "GO-odd formula / 2"};
        }
        case Family::SympSp:
        case Family::SympPSp:
        case Family::OrthEvenAdjPlus:
        case Family::OrthEvenAdjMinus:
        case Family::OrthEvenSimplePlus:
        case Family::OrthEvenSimpleMinus:
            return {QuadInt(Rat(Int(adjoint_weyl_bound(s)))), SigmaKind::upper_bound, "adjoint |G|_{ell'} |W|"};
        case Family::Ree2F4: {
            // the generic polynomial describes 2F4(q) only for m >= 1
            if (s.q == 2)
                throw std::domain_error("sigma_upper_general: no verified bound for 2F4(2)");
            Nat exact = sigma_2f4_exact(s.q);
            return {QuadInt(Rat(Int(exact))), SigmaKind::exact, "2F4 polynomial"};
        }
        default:
            if (family_is_exceptional(s.family)) return sigma_exceptional_bound(s);
            throw std::domain_error("sigma_upper_general: unsupported family");
    }
}

} // namespace degsum

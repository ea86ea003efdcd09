// Exact order formulas: |G| for the catalog group, |S| for its simple
// composition factor, the defining characteristic, the Weyl order and the
// algebraic rank. The odd-q even orthogonal normalization follows
// |POmega_{2r}^{+-}(q)| = |SO^{+-}_{2r}(q)| / (4, q^r -+ 1); for even q the
// gcd is 1 and the same formula applies.

#pragma once

#include <degsum/group_spec.hpp>

namespace degsum {

struct OrderFormula {
    Nat group_order;        // |G|
    Nat simple_order;       // |S|, the non-abelian simple factor (when it exists)
    std::uint64_t ell = 0;  // defining characteristic; 0 for Sym/Alt/sporadic
    Nat weyl_order;         // |W| of the ambient algebraic group; 0 when not Lie type
    std::uint64_t rank = 0;
    bool q0_squared = false;  // q = q0^2 (Suzuki/Ree/2F4)
};

namespace detail {

inline Nat lie_product(std::uint64_t q, std::uint64_t qexp,
                       std::initializer_list<std::pair<int, int>> factors) {
    // factors are (degree d, sign s) meaning q^d + s
    Nat r = pow(Nat(q), qexp);
    for (auto [d, s] : factors) {
        Nat t = pow(Nat(q), static_cast<std::uint64_t>(d));
        r = r * (s > 0 ? t + Nat(1) : t - Nat(1));
    }
    return r;
}

inline std::uint64_t sporadic_order(const std::string& name) {
    if (name == "M11") return 7920;
    if (name == "M12") return 95040;
    if (name == "M22") return 443520;
    if (name == "M23") return 10200960;
    if (name == "M24") return 244823040;
    if (name == "J1") return 175560;
    if (name == "J2") return 604800;
    throw std::invalid_argument("sporadic order unknown: " + name +
                                " (provide a degree table with an order line instead)");
}

} // namespace detail

inline OrderFormula order(const GroupSpec& s) {
    validate(s);
    using detail::lie_product;
    OrderFormula f;
    const std::uint64_t n = s.n_or_rank, q = s.q;
    const auto pp = s.q ? as_prime_power(s.q) : std::nullopt;
    if (pp) f.ell = pp->p;

    auto gcd_u = [](std::uint64_t a, const Nat& b) {
        return gcd(Nat(a), b);
    };

    switch (s.family) {
        case Family::Sym: {
            f.group_order = factorial(n);
            f.simple_order = n >= 2 ? div_exact(f.group_order, Nat(2)) : Nat(1);
            return f;
        }
        case Family::Alt: {
            f.group_order = n >= 2 ? div_exact(factorial(n), Nat(2)) : Nat(1);
            f.simple_order = f.group_order;
            return f;
        }
        case Family::LinearGL:
        case Family::LinearPGL:
        case Family::LinearPSL: {
            Nat gl = pow(Nat(q), n * (n - 1) / 2);
            for (std::uint64_t i = 1; i <= n; ++i) gl = gl * (pow(Nat(q), i) - Nat(1));
            Nat pgl = div_exact(gl, Nat(q - 1));
            Nat psl = div_exact(pgl, gcd_u(n, Nat(q - 1)));
            f.group_order = s.family == Family::LinearGL ? gl
                          : s.family == Family::LinearPGL ? pgl : psl;
            f.simple_order = psl;
            f.weyl_order = factorial(n);
            f.rank = n - 1;
            return f;
        }
        case Family::UnitaryGU:
        case Family::UnitaryPGU:
        case Family::UnitaryPSU: {
            Nat gu = pow(Nat(q), n * (n - 1) / 2);
            for (std::uint64_t i = 1; i <= n; ++i) {
                Nat t = pow(Nat(q), i);
                gu = gu * (i % 2 ? t + Nat(1) : t - Nat(1));
            }
            Nat pgu = div_exact(gu, Nat(q + 1));
            Nat psu = div_exact(pgu, gcd_u(n, Nat(q + 1)));
            f.group_order = s.family == Family::UnitaryGU ? gu
                          : s.family == Family::UnitaryPGU ? pgu : psu;
            f.simple_order = psu;
            f.weyl_order = factorial(n);
            f.rank = n - 1;
            return f;
        }
        case Family::OrthOddGO:
        case Family::OrthOddOmega: {
            const std::uint64_t m = n;
            Nat go = Nat(2) * pow(Nat(q), m * m);
            for (std::uint64_t i = 1; i <= m; ++i) go = go * (pow(Nat(q), 2 * i) - Nat(1));
            Nat omega = div_exact(go, Nat(4));
            f.group_order = s.family == Family::OrthOddGO ? go : omega;
            f.simple_order = omega;
            f.weyl_order = pow(Nat(2), m) * factorial(m);
            f.rank = m;
            return f;
        }
        case Family::SympSp:
        case Family::SympPSp: {
            const std::uint64_t r = n;
            Nat sp = pow(Nat(q), r * r);
            for (std::uint64_t i = 1; i <= r; ++i) sp = sp * (pow(Nat(q), 2 * i) - Nat(1));
            Nat psp = div_exact(sp, gcd_u(2, Nat(q - 1)));
            f.group_order = s.family == Family::SympSp ? sp : psp;
            // Sp4(2) is not simple; its derived subgroup has index 2
            f.simple_order = (r == 2 && q == 2) ? div_exact(psp, Nat(2)) : psp;
            f.weyl_order = pow(Nat(2), r) * factorial(r);
            f.rank = r;
            return f;
        }
        case Family::OrthEvenAdjPlus:
        case Family::OrthEvenAdjMinus:
        case Family::OrthEvenSimplePlus:
        case Family::OrthEvenSimpleMinus: {
            const std::uint64_t r = n;
            const bool plus = s.family == Family::OrthEvenAdjPlus ||
                              s.family == Family::OrthEvenSimplePlus;
            Nat g = pow(Nat(q), r * (r - 1));
            Nat qr = pow(Nat(q), r);
            g = g * (plus ? qr - Nat(1) : qr + Nat(1));
            for (std::uint64_t i = 1; i <= r - 1; ++i) g = g * (pow(Nat(q), 2 * i) - Nat(1));
            Nat simple = div_exact(g, gcd_u(4, plus ? qr - Nat(1) : qr + Nat(1)));
            const bool adjoint = s.family == Family::OrthEvenAdjPlus ||
                                 s.family == Family::OrthEvenAdjMinus;
            f.group_order = adjoint ? g : simple;
            f.simple_order = simple;
            f.weyl_order = pow(Nat(2), r - 1) * factorial(r);
            f.rank = r;
            return f;
        }
        case Family::Suzuki2B2: {
            f.group_order = lie_product(q, 2, {{2, +1}, {1, -1}});
            f.simple_order = f.group_order;  // q >= 8 enforced by validate
            f.weyl_order = Nat(8);
            f.rank = 2;
            f.q0_squared = true;
            return f;
        }
        case Family::Triality3D4: {
            Nat q4 = pow(Nat(q), 4);
            f.group_order = pow(Nat(q), 12) * (q4 * q4 + q4 + Nat(1)) *
                            (pow(Nat(q), 6) - Nat(1)) * (Nat(q) * Nat(q) - Nat(1));
            f.simple_order = f.group_order;
            f.weyl_order = Nat(192);
            f.rank = 4;
            return f;
        }
        case Family::G2: {
            f.group_order = lie_product(q, 6, {{6, -1}, {2, -1}});
            f.simple_order = q == 2 ? div_exact(f.group_order, Nat(2)) : f.group_order;
            f.weyl_order = Nat(12);
            f.rank = 2;
            return f;
        }
        case Family::Ree2G2: {
            f.group_order = lie_product(q, 3, {{3, +1}, {1, -1}});
            f.simple_order = q == 3 ? div_exact(f.group_order, Nat(3)) : f.group_order;
            f.weyl_order = Nat(12);
            f.rank = 2;
            f.q0_squared = true;
            return f;
        }
        case Family::F4: {
            f.group_order = lie_product(q, 24, {{12, -1}, {8, -1}, {6, -1}, {2, -1}});
            f.simple_order = f.group_order;
            f.weyl_order = Nat(1152);
            f.rank = 4;
            return f;
        }
        case Family::Ree2F4: {
            f.group_order = lie_product(q, 12, {{6, +1}, {4, -1}, {3, +1}, {1, -1}});
            f.simple_order = q == 2 ? div_exact(f.group_order, Nat(2)) : f.group_order;
            f.weyl_order = Nat(1152);
            f.rank = 4;
            f.q0_squared = true;
            return f;
        }
        case Family::E6: {
            f.group_order = lie_product(q, 36, {{12, -1}, {9, -1}, {8, -1}, {6, -1}, {5, -1}, {2, -1}});
            f.simple_order = div_exact(f.group_order, gcd_u(3, Nat(q - 1)));
            f.weyl_order = Nat(51840);
            f.rank = 6;
            return f;
        }
        case Family::Twisted2E6: {
            f.group_order = lie_product(q, 36, {{12, -1}, {9, +1}, {8, -1}, {6, -1}, {5, +1}, {2, -1}});
            f.simple_order = div_exact(f.group_order, gcd_u(3, Nat(q + 1)));
            f.weyl_order = Nat(51840);
            f.rank = 6;
            return f;
        }
        case Family::E7: {
            f.group_order = lie_product(q, 63, {{18, -1}, {14, -1}, {12, -1}, {10, -1}, {8, -1}, {6, -1}, {2, -1}});
            f.simple_order = div_exact(f.group_order, gcd_u(2, Nat(q - 1)));
            f.weyl_order = Nat(2903040);
            f.rank = 7;
            return f;
        }
        case Family::E8: {
            f.group_order = lie_product(q, 120, {{30, -1}, {24, -1}, {20, -1}, {18, -1}, {14, -1}, {12, -1}, {8, -1}, {2, -1}});
            f.simple_order = f.group_order;
            f.weyl_order = Nat(696729600);
            f.rank = 8;
            return f;
        }
        case Family::Sporadic: {
            f.group_order = Nat(detail::sporadic_order(s.sporadic_name));
            f.simple_order = f.group_order;
            return f;
        }
    }
    throw std::logic_error("order: unknown family");
}

// q0 as an exact quadratic integer: q0 = sqrt(q) for Suzuki/Ree/2F4, else q
inline QuadInt q0_of(const GroupSpec& s) {
    auto pp = as_prime_power(s.q);
    if (!pp) throw std::logic_error("q0_of: no field parameter");
    if (family_has_irrational_q0(s.family)) {
        // q = p^{2m+1} -> q0 = p^m sqrt(p)
        std::uint64_t m = (pp->e - 1) / 2;
        return QuadInt(Rat(0), Rat(Int(pow(Nat(pp->p), m))), pp->p);
    }
    return QuadInt(Rat(Int(Nat(s.q))));
}

} // namespace degsum

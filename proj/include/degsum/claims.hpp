// The claim registry: every bulk inequality the classification rests on,
// re-evaluated cell by cell in exact (or conclusively bracketed) arithmetic.
//
// A claim's registered expectation is the outcome frozen from independent
// oracles, which is how expected failure points (for instance the G2 dagger
// inequality failing at q = 2) stay visible instead of aborting a run. Where
// the computed truth deviates from the originally quoted endpoint, the
// record's note says so; the ledger of such deviations also appears in the
// README.

#pragma once

#include <degsum/charsum.hpp>
#include <degsum/unipotent.hpp>

#include <functional>

namespace degsum {

enum class Verdict { HOLDS, FAILS_AT, UNDECIDED };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::HOLDS: return "HOLDS";
        case Verdict::FAILS_AT: return "FAILS_AT";
        case Verdict::UNDECIDED: return "UNDECIDED";
    }
    return "?";
}

struct CellResult {
    std::string point;    // parameter assignment, e.g. "n=40"
    int outcome;          // +1 inequality holds, -1 fails, 0 inconclusive
    bool expected;        // outcome equals the registered expectation
    std::string witness;  // exact values for the two sides
};

struct ClaimRecord {
    std::string id;
    std::string statement;
    std::string range;
    Verdict verdict = Verdict::UNDECIDED;  // HOLDS means: every cell as registered
    std::vector<CellResult> cells;
    std::string note;

    std::size_t holding_cells() const {
        std::size_t k = 0;
        for (const auto& c : cells) k += c.outcome > 0;
        return k;
    }
    bool all_expected() const {
        for (const auto& c : cells)
            if (!c.expected) return false;
        return true;
    }
};

namespace claims_detail {

inline std::string cmp_witness(const Rat& lhs, const Rat& rhs) {
    return "lhs=" + lhs.to_string() + " rhs=" + rhs.to_string();
}

inline void finish(ClaimRecord& rec) {
    rec.verdict = Verdict::HOLDS;
    for (const auto& c : rec.cells) {
        if (c.outcome == 0) { rec.verdict = Verdict::UNDECIDED; return; }
        if (!c.expected) rec.verdict = Verdict::FAILS_AT;
    }
}

inline std::vector<std::uint64_t> prime_powers_upto(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = lo; q <= hi; ++q)
        if (as_prime_power(q)) out.push_back(q);
    return out;
}

// ---- C1: 2^n (n!)^{1/2} < n!/2^n, squared to 2^{4n} < n! ---------------

inline ClaimRecord run_c1() {
    ClaimRecord rec{"C1", "2^n (n!)^{1/2} < n!/2^n  (squared form: 2^{4n} < n!)",
                    "n = 30..200 (quoted onset 40)", Verdict::UNDECIDED, {}, {}};
    Nat fact(1);
    for (std::uint64_t k = 2; k <= 29; ++k) fact = fact * Nat(k);
    bool monotone_cert = true;
    for (std::uint64_t n = 30; n <= 200; ++n) {
        fact = fact * Nat(n);
        bool holds = pow(Nat(2), 4 * n) < fact;
        bool expect = n >= 41;  // exact-arithmetic onset; the quoted n >= 40 fails at 40
        rec.cells.push_back({"n=" + std::to_string(n), holds ? 1 : -1, holds == expect,
                             "2^{4n}=" + pow(Nat(2), 4 * n).to_decimal() + " n!=" + fact.to_decimal()});
        if (n >= 41 && !(n + 1 > 16)) monotone_cert = false;
    }
    // successive-ratio certificate: the side ratio grows by (n+1)/16 > 1 from
    // the onset, so holding at 41 gives every larger n
    rec.cells.push_back({"certificate ratio (n+1)/16 > 1 for n >= 41",
                         monotone_cert ? 1 : -1, monotone_cert, "sqrt(n!)/4^n strictly increasing"});
    rec.note = "holds for every n >= 41; the quoted onset n = 40 fails in exact arithmetic "
               "(2^160 = 1461501637330902918203684832716283019655932542976 > 40!)";
    finish(rec);
    return rec;
}

// ---- C2: prod_{m<=n} (sqrt(m)+1) < n!/2^n, via sqrt brackets ------------

inline ClaimRecord run_c2() {
    ClaimRecord rec{"C2", "prod_{m=1}^{n} (m^{1/2}+1) < n!/2^n",
                    "n = 15..40 (quoted range 19..40)", Verdict::UNDECIDED, {}, {}};
    for (std::uint64_t n = 15; n <= 40; ++n) {
        int outcome = 0;
        std::string witness;
        for (std::size_t prec = 128; prec <= 1024 && outcome == 0; prec *= 2) {
            DyInterval prod{Dyadic::one()};
            for (std::uint64_t m = 1; m <= n; ++m) {
                DyInterval s = DyInterval(Dyadic(Int(Nat(m)))).sqrt(prec);
                prod = prod.mul(s.add(DyInterval(Dyadic::one()), prec), prec);
            }
            Rat rhs(Int(factorial(n)), pow(Nat(2), n));
            if (cmp(prod.hi(), rhs) < 0) outcome = 1;
            else if (cmp(prod.lo(), rhs) >= 0) outcome = -1;
            witness = "lhs in [" + prod.lo().to_rat().to_string() + ", " +
                      prod.hi().to_rat().to_string() + "] rhs=" + rhs.to_string();
        }
        bool expect = n >= 19;
        rec.cells.push_back({"n=" + std::to_string(n), outcome, outcome != 0 && (outcome > 0) == expect,
                             std::move(witness)});
    }
    rec.note = "holds on the quoted range 19..40; fails for n <= 18 as the onset suggests";
    finish(rec);
    return rec;
}

// ---- C3: exceptional bound C < 2 |G|_{ell'} for exceptional families --------

inline std::vector<GroupSpec> exceptional_box(std::uint64_t qmax) {
    std::vector<GroupSpec> out;
    auto add = [&](Family f, std::uint64_t q) { out.push_back(GroupSpec{f, 0, q, {}}); };
    for (std::uint64_t q : {8ull, 32ull})
        if (q <= qmax) add(Family::Suzuki2B2, q);
    for (std::uint64_t q : {3ull, 27ull})
        if (q <= qmax) add(Family::Ree2G2, q);
    for (std::uint64_t q : {2ull, 8ull, 32ull})
        if (q <= qmax) add(Family::Ree2F4, q);
    for (Family f : {Family::Triality3D4, Family::G2, Family::F4, Family::E6,
                     Family::Twisted2E6, Family::E7, Family::E8})
        for (std::uint64_t q : prime_powers_upto(2, qmax)) add(f, q);
    return out;
}

inline ClaimRecord run_c3() {
    ClaimRecord rec{"C3", "C < 2 |G|_{ell'} for every exceptional family bound C",
                    "all exceptional families, q <= 32", Verdict::UNDECIDED, {}, {}};
    for (const GroupSpec& s : exceptional_box(32)) {
        Rat C = sigma_exceptional_bound(s).value.rational_part();
        OrderFormula f = order(s);
        Rat rhs{Int(Nat(2) * valuation(f.group_order, f.ell).cofactor)};
        bool holds = C < rhs;
        bool expect = !(s.family == Family::F4 && s.q == 2);  // the quoted carve-out
        rec.cells.push_back({s.label(), holds ? 1 : -1, holds == expect, cmp_witness(C, rhs)});
    }
    rec.note = "F4(2) is the quoted carve-out: there C = 2^28 + 2^27 exceeds 2 |G|_{2'} = 789434100";
    finish(rec);
    return rec;
}

// ---- C4: the G2 dagger inequality -----------------------------------------

inline ClaimRecord run_c4() {
    ClaimRecord rec{"C4", "q^8 + (3/2) q^6 < q^6 (q^6-1)(q^2-1) / (12 (q+1)^2)",
                    "prime powers q = 2..32 (quoted for q != 2)", Verdict::UNDECIDED, {}, {}};
    for (std::uint64_t q : prime_powers_upto(2, 32)) {
        Rat lhs = Rat(Int(pow(Nat(q), 8))) + Rat(3, 2) * Rat(Int(pow(Nat(q), 6)));
        Rat rhs(Int(pow(Nat(q), 6) * (pow(Nat(q), 6) - Nat(1)) * (Nat(q) * Nat(q) - Nat(1))),
                Nat(12) * Nat(q + 1) * Nat(q + 1));
        bool holds = lhs < rhs;
        bool expect = q != 2;
        rec.cells.push_back({"q=" + std::to_string(q), holds ? 1 : -1, holds == expect,
                             cmp_witness(lhs, rhs)});
    }
    rec.note = "fails exactly at q = 2, as quoted";
    finish(rec);
    return rec;
}

// ---- C5: the 2F4 index inequality, in Q(sqrt 2) ---------------------------

inline ClaimRecord run_c5() {
    ClaimRecord rec{"C5",
                    "q^14 < q^12 (q^6+1)(q^4-1)(q^3+1)(q-1)(q^5+1) / (1152 (q0+1)^4), q0 = sqrt q",
                    "q = 8, 32, 128 (m = 1, 2, 3)", Verdict::UNDECIDED, {}, {}};
    for (std::uint64_t m : {1ull, 2ull, 3ull}) {
        std::uint64_t q = 1ull << (2 * m + 1);
        GroupSpec s{Family::Ree2F4, 0, q, {}};
        QuadInt q0 = q0_of(s);
        QuadInt denom = pow(q0 + QuadInt(Rat(1)), 4) * QuadInt(Rat(1152));
        // as displayed (carries a (q^5+1) factor the group order does not have)
        Nat displayed = pow(Nat(q), 12) * (pow(Nat(q), 6) + Nat(1)) * (pow(Nat(q), 4) - Nat(1)) *
                        (pow(Nat(q), 3) + Nat(1)) * Nat(q - 1) * (pow(Nat(q), 5) + Nat(1));
        QuadInt lhs = QuadInt(Rat(Int(pow(Nat(q), 14)))) * denom;
        bool holds_displayed = lhs < QuadInt(Rat(Int(displayed)));
        // and against the actual simple-group order
        Nat true_order = order(s).simple_order;
        bool holds_true = lhs < QuadInt(Rat(Int(true_order)));
        bool ok = holds_displayed && holds_true;
        rec.cells.push_back({"q=" + std::to_string(q), ok ? 1 : -1, ok,
                             "displayed=" + std::to_string(holds_displayed) +
                                 " true-order=" + std::to_string(holds_true)});
    }
    rec.note = "verified both as displayed and with the actual |2F4(q)| "
               "(the displayed product carries a stray (q^5+1) factor); both hold";
    finish(rec);
    return rec;
}

// ---- C6 / C7: the GL and GU threshold inequalities ------------------------

inline ClaimRecord run_c6() {
    ClaimRecord rec{"C6",
                    "q^{n^2-1}/((n,q-1)(2(q+1))^{n-1}) (1-1/q-1/q^2) > q^{n(n+1)/2}(1-1/q)",
                    "n = 4..12, prime powers q <= 16", Verdict::UNDECIDED, {}, {}};
    auto is_exception = [](std::uint64_t n, std::uint64_t q) {
        return (n == 5 && q == 2) || (n == 4 && q <= 5);
    };
    for (std::uint64_t n = 4; n <= 12; ++n)
        for (std::uint64_t q : prime_powers_upto(2, 16)) {
            Rat lhs = Rat(Int(pow(Nat(q), n * n - 1)),
                          Nat(std::gcd(n, q - 1)) * pow(Nat(2 * (q + 1)), n - 1)) *
                      (Rat(1) - Rat(1, q) - Rat(1, q * q));
            Rat rhs = Rat(Int(pow(Nat(q), n * (n + 1) / 2))) * (Rat(1) - Rat(1, q));
            bool holds = lhs > rhs;
            bool expect = !is_exception(n, q);
            rec.cells.push_back({"n=" + std::to_string(n) + ",q=" + std::to_string(q),
                                 holds ? 1 : -1, holds == expect, cmp_witness(lhs, rhs)});
        }
    rec.note = "exception set is exactly {(5,2)} and {(4,q): q = 2,3,4,5}";
    finish(rec);
    return rec;
}

inline ClaimRecord run_c7() {
    ClaimRecord rec{"C7",
                    "q^{n(n+1)/2} z < q^{n^2-1}/((n,q+1)(2(q+1))^{n-1}) (1-q^{-2}-q^{-4}), "
                    "z = (1+1/q)(1+1/q^3) exp(1/(q^3(q^2-1)))",
                    "n = 4..12, prime powers q <= 16", Verdict::UNDECIDED, {}, {}};
    auto is_exception = [](std::uint64_t n, std::uint64_t q) {
        return ((n == 5 || n == 6) && q == 2) || (n == 4 && q <= 7);
    };
    for (std::uint64_t n = 4; n <= 12; ++n)
        for (std::uint64_t q : prime_powers_upto(2, 16)) {
            Bracket z = unitary_z_bracket(q);
            Rat qn{Int(pow(Nat(q), n * (n + 1) / 2))};
            Rat rhs = Rat(Int(pow(Nat(q), n * n - 1)),
                          Nat(std::gcd(n, q + 1)) * pow(Nat(2 * (q + 1)), n - 1)) *
                      (Rat(1) - Rat(1, q * q) - Rat(Int(1), pow(Nat(q), 4)));
            int outcome = 0;
            if (qn * z.upper < rhs) outcome = 1;        // conclusive via the majorant
            else if (qn * z.lower >= rhs) outcome = -1; // conclusive via the minorant
            bool expect = !is_exception(n, q);
            rec.cells.push_back({"n=" + std::to_string(n) + ",q=" + std::to_string(q),
                                 outcome, outcome != 0 && (outcome > 0) == expect,
                                 cmp_witness(qn * z.upper, rhs)});
        }
    rec.note = "exp bracketed by 1+x < exp(x) <= 1+x+x^2 on (0,1]; every cell conclusive; "
               "exception set is {(5,2),(6,2)} and {(4,q): q = 2,3,4,5,7}";
    finish(rec);
    return rec;
}

// ---- C8: odd orthogonal closing inequality --------------------------------

inline ClaimRecord run_c8() {
    ClaimRecord rec{"C8",
                    "2 z q^{m(m+1)} q^2/(q^2-1) < q^{m^2+m(m+1)} / (4(q+1))^m / z, "
                    "z = (1-q^{-2}-q^{-4})^{-1}",
                    "m = 1..10, odd prime powers q <= 16 (quoted for m >= 3)",
                    Verdict::UNDECIDED, {}, {}};
    for (std::uint64_t m = 1; m <= 10; ++m)
        for (std::uint64_t q : prime_powers_upto(3, 16)) {
            if (q % 2 == 0) continue;
            Rat z = (Rat(1) - Rat(1, q * q) - Rat(Int(1), pow(Nat(q), 4))).reciprocal();
            Rat lhs = Rat(2) * z * Rat(Int(pow(Nat(q), m * (m + 1)))) *
                      Rat(Int(Nat(q) * Nat(q)), Nat(q) * Nat(q) - Nat(1));
            Rat rhs = Rat(Int(pow(Nat(q), m * m + m * (m + 1))), pow(Nat(4 * (q + 1)), m)) / z;
            bool holds = lhs < rhs;
            bool expect = m >= 3 || (m == 2 && q >= 7);
            rec.cells.push_back({"m=" + std::to_string(m) + ",q=" + std::to_string(q),
                                 holds ? 1 : -1, holds == expect, cmp_witness(lhs, rhs)});
        }
    rec.note = "always satisfied on the quoted domain m >= 3; below it the m = 1 rows and "
               "(m, q) = (2, 3), (2, 5) fail, all outside the quoted statement";
    finish(rec);
    return rec;
}

// ---- C9: even orthogonal threshold ----------------------------------------

inline ClaimRecord run_c9() {
    ClaimRecord rec{"C9", "q^{r(r-1)} / (4(q+1))^r > (2r)^{r-1}",
                    "r = 4..20, prime powers q <= 16", Verdict::UNDECIDED, {}, {}};
    auto expect_holds = [](std::uint64_t q, std::uint64_t r) {
        if (q == 2) return r >= 9;
        if (q == 3) return r >= 6;
        if (q == 4) return r >= 5;
        return true;  // q = 5 and q >= 7 hold on the whole box (q = 5, r = 4 included)
    };
    for (std::uint64_t q : prime_powers_upto(2, 16))
        for (std::uint64_t r = 4; r <= 20; ++r) {
            Rat lhs(Int(pow(Nat(q), r * (r - 1))), pow(Nat(4 * (q + 1)), r));
            Rat rhs{Int(pow(Nat(2 * r), r - 1))};
            bool holds = lhs > rhs;
            rec.cells.push_back({"q=" + std::to_string(q) + ",r=" + std::to_string(r),
                                 holds ? 1 : -1, holds == expect_holds(q, r),
                                 cmp_witness(lhs, rhs)});
        }
    rec.note = "onsets: q=2 from r=9, q=3 from r=6, q=4 from r=5; q=5 and q=7 hold already "
               "at r=4 (the quoted q=5 onset r>=5 is sufficient, not sharp; q=7 was left to "
               "the residual case analysis and computes to HOLDS throughout)";
    finish(rec);
    return rec;
}

// ---- C10: PGL3 / PGU3 index thresholds ------------------------------------

inline ClaimRecord run_c10() {
    ClaimRecord rec{"C10", "|S|/(3(q+1)^2) > q^2(q^3-1)  [PGL3]  and  "
                           "q^2(q^3+1) < q^3(q-1)(q^2-q+1)/(3(3,q+1))  [PGU3]",
                    "prime powers q <= 64", Verdict::UNDECIDED, {}, {}};
    for (std::uint64_t q : prime_powers_upto(2, 64)) {
        Nat S = order(GroupSpec{Family::LinearPSL, 3, q, {}}).simple_order;
        Rat lhs(Int(S), Nat(3) * Nat(q + 1) * Nat(q + 1));
        Rat rhs{Int(Nat(q) * Nat(q) * (pow(Nat(q), 3) - Nat(1)))};
        bool holds = lhs > rhs;
        bool expect = q >= 8 || q == 5;  // q=5 holds, q=7 fails: "every q >= 8" is the sharp onset
        rec.cells.push_back({"PGL3 q=" + std::to_string(q), holds ? 1 : -1, holds == expect,
                             cmp_witness(lhs, rhs)});
    }
    for (std::uint64_t q : prime_powers_upto(2, 64)) {
        Rat lhs{Int(Nat(q) * Nat(q) * (pow(Nat(q), 3) + Nat(1)))};
        Rat rhs(Int(pow(Nat(q), 3) * Nat(q - 1) * (Nat(q) * Nat(q) - Nat(q) + Nat(1))),
                Nat(3) * Nat(std::gcd<std::uint64_t>(3, q + 1)));
        bool holds = lhs < rhs;
        bool expect = q >= 9 || q == 7;  // q=7 holds, q=8 fails: onset of "every q" is 9
        rec.cells.push_back({"PGU3 q=" + std::to_string(q), holds ? 1 : -1, holds == expect,
                             cmp_witness(lhs, rhs)});
    }
    rec.note = "PGL3 holds for every q >= 8 with q = 7 failing (q = 5 holds in isolation); "
               "PGU3 holds for every q >= 9 with q = 8 failing (q = 7 holds in isolation)";
    finish(rec);
    return rec;
}

// ---- C11: unipotent thresholds, exact table plus analytic onsets ----------

inline DyInterval pow_three_halves(const DyInterval& x, std::size_t prec) {
    return x.mul(x.sqrt(prec), prec);  // x^{3/2}
}

// analytic majorant comparisons behind the root thresholds; outcome of
// "LHS <= RHS" with interval evaluation at escalating precision
inline int analytic_cell(LieClass t, std::uint64_t r, std::size_t prec_cap = 1024) {
    for (std::size_t prec = 160; prec <= prec_cap; prec *= 2) {
        const std::size_t p = prec;
        DyInterval pi = pi_iv(p);
        DyInterval sr = DyInterval(Dyadic(Int(Nat(r)))).sqrt(p);
        DyInterval lnr = ln_point(Dyadic(Int(Nat(r))), p);
        DyInterval ln2r = ln_point(Dyadic(Int(Nat(2 * r))), p);
        DyInterval one{Dyadic::one()};
        DyInterval lhs, rhs;
        switch (t) {
            case LieClass::A: {
                // p*(r+1) vs ((r+1) sqrt(2 pi r))^{1/sqrt r} (r/e)^{sqrt r}
                Bracket ps = p_star_bracket(r + 1, p);
                lhs = DyInterval(DyInterval::from_rat(ps.lower, p).lo(),
                                 DyInterval::from_rat(ps.upper, p).hi());
                DyInterval base = DyInterval::exact_int(static_cast<std::int64_t>(r + 1))
                                      .mul(DyInterval::exact_int(2).mul(pi, p)
                                               .mul(DyInterval::exact_int(static_cast<std::int64_t>(r)), p)
                                               .sqrt(p), p);
                DyInterval expo = ln_iv(base, p).div(sr, p)
                                      .add(sr.mul(lnr.sub(one, p), p), p);
                rhs = exp_iv(expo, p);
                break;
            }
            case LieClass::BC: {
                // (sqrt r + 1)(r+1) e^{pi sqrt(4r/3)} / (r/2)^{3/2}
                DyInterval num = sr.add(one, p)
                                     .mul(DyInterval::exact_int(static_cast<std::int64_t>(r + 1)), p)
                                     .mul(exp_iv(pi.mul(DyInterval::from_rat(Rat(static_cast<std::int64_t>(4 * r), 3), p).sqrt(p), p), p), p);
                lhs = num.div(pow_three_halves(DyInterval::from_rat(Rat(static_cast<std::int64_t>(r), 2), p), p), p);
                DyInterval expo = ln_iv(DyInterval::exact_int(2).mul(pi, p).mul(DyInterval::exact_int(static_cast<std::int64_t>(r)), p), p)
                                      .div(sr.scale2(1), p)
                                      .add(sr.mul(ln2r.sub(one, p), p), p);
                rhs = exp_iv(expo, p);
                break;
            }
            case LieClass::TwoD: {
                // r^{3/2} e^{pi sqrt(4(r-1)/3)} / ((r-1)/2)^{3/2}
                DyInterval num = pow_three_halves(DyInterval::exact_int(static_cast<std::int64_t>(r)), p)
                                     .mul(exp_iv(pi.mul(DyInterval::from_rat(Rat(static_cast<std::int64_t>(4 * (r - 1)), 3), p).sqrt(p), p), p), p);
                lhs = num.div(pow_three_halves(DyInterval::from_rat(Rat(static_cast<std::int64_t>(r - 1), 2), p), p), p);
                DyInterval expo = ln_iv(pi.mul(DyInterval::from_rat(Rat(static_cast<std::int64_t>(r), 2), p), p), p)
                                      .div(sr.scale2(1), p)
                                      .add(sr.mul(ln2r.sub(one, p), p), p);
                rhs = exp_iv(expo, p);
                break;
            }
            default:
                throw std::logic_error("analytic_cell: A, BC, 2D only");
        }
        if (lhs.definitely_le(rhs)) return 1;
        if (lhs.definitely_gt(rhs)) return -1;
    }
    return 0;
}

inline ClaimRecord run_c11() {
    ClaimRecord rec{"C11", "unipotent counts: v <= |W|^{1/sqrt r} exactly, plus the analytic "
                           "majorant onsets behind the asymptotic ranges",
                    "r <= 60 for the exact table; onset scans for the majorants",
                    Verdict::UNDECIDED, {}, {}};
    // exact verdict table
    struct TypeRow { LieClass t; const char* name; };
    for (TypeRow tr : {TypeRow{LieClass::A, "A"}, TypeRow{LieClass::BC, "BC"},
                       TypeRow{LieClass::D, "D"}, TypeRow{LieClass::TwoD, "2D"}}) {
        for (const auto& row : threshold_report(tr.t, 60)) {
            bool root = row.verdict == RootVerdict::leq_W_root;
            bool expect_root = !(tr.t == LieClass::BC && row.r <= 6) &&
                               !(tr.t == LieClass::D && row.r == 4);
            int outcome = row.verdict == RootVerdict::undecided ? 0 : (root ? 1 : -1);
            rec.cells.push_back({std::string(tr.name) + " r=" + std::to_string(row.r),
                                 outcome, outcome != 0 && root == expect_root,
                                 "v=" + row.v.to_decimal() + " |W|=" + row.weyl.to_decimal()});
        }
    }
    // analytic onsets: A at 17, BC computes to 57 (44 was quoted), 2D at 55
    struct Scan { LieClass t; const char* name; std::uint64_t lo, hi, onset; };
    for (Scan sc : {Scan{LieClass::A, "A-analytic", 14, 60, 17},
                    Scan{LieClass::BC, "BC-analytic", 42, 60, 57},
                    Scan{LieClass::TwoD, "2D-analytic", 52, 60, 55}}) {
        for (std::uint64_t r = sc.lo; r <= sc.hi; ++r) {
            int outcome = analytic_cell(sc.t, r);
            bool expect = r >= sc.onset;
            rec.cells.push_back({std::string(sc.name) + " r=" + std::to_string(r), outcome,
                                 outcome != 0 && (outcome > 0) == expect, ""});
        }
    }
    rec.note = "exact root comparisons: BC fails only on 2..6 and D only at r=4, all other "
               "ranks hold through 60. Analytic onsets: A at r=17 and 2D at r=55 as quoted; "
               "the BC majorant inequality first holds at r=57, not at the quoted 44 (the "
               "exact counts cover 7..56, so the classification is unaffected)";
    finish(rec);
    return rec;
}

} // namespace claims_detail

struct ClaimInfo {
    std::string id;
    std::string summary;
    std::function<ClaimRecord()> run;
};

inline const std::vector<ClaimInfo>& claim_registry() {
    using namespace claims_detail;
    static const std::vector<ClaimInfo> reg = {
        {"C1", "symmetric-group bound crossover 2^n sqrt(n!) vs n!/2^n", run_c1},
        {"C2", "product form prod (sqrt m + 1) vs n!/2^n on 19..40", run_c2},
        {"C3", "exceptional C < 2 |G|_{ell'} with the F4(2) carve-out", run_c3},
        {"C4", "G2 dagger inequality, fails only at q=2", run_c4},
        {"C5", "2F4 index inequality in Q(sqrt 2), m = 1..3", run_c5},
        {"C6", "GL threshold sweep with exception set {(5,2),(4,<=5)}", run_c6},
        {"C7", "GU threshold sweep with exception set {(5,2),(6,2),(4,<=7)}", run_c7},
        {"C8", "odd orthogonal closing inequality, all m >= 3", run_c8},
        {"C9", "even orthogonal threshold onsets per q", run_c9},
        {"C10", "PGL3/PGU3 index thresholds with onsets 8 and 9", run_c10},
        {"C11", "unipotent count thresholds, exact and analytic", run_c11},
    };
    return reg;
}

inline ClaimRecord run_claim(const std::string& id) {
    for (const auto& c : claim_registry())
        if (c.id == id) return c.run();
    throw std::invalid_argument("unknown claim id: " + id);
}

} // namespace degsum

#include <catch2/catch.hpp>

#include <degsum/claims.hpp>
#include <degsum/sweep.hpp>

#include <sstream>

using namespace degsum;

namespace {
const TableCatalog& catalog() {
    static TableCatalog c{DEGSUM_DATA_DIR};
    return c;
}
const ExpectedList& expected_list() {
    static ExpectedList e = load_expected_list(std::filesystem::path(DEGSUM_DATA_DIR) / "expected_exceptions.pred");
    return e;
}
} // namespace

TEST_CASE("predicate grammar", "[verify][predicate]") {
    std::istringstream src(
        "case x family=F cond=q%4==1 && is_pow(q+1,p) || gcd(n,6)==2\n"
        "iso A B\n");
    ExpectedList el = parse_expected_list(src);
    REQUIRE(el.cases.size() == 1);
    PredicateEnv e;
    e.q = 5; e.p = 3; e.n = 3;   // 6 = 2*3 is not a power of 3; gcd(3,6) = 3
    CHECK(!el.cases[0].matches(e));
    e.q = 5; e.p = 2; e.n = 3;   // but q+1 = 6 is not a power of 2 either
    CHECK(!el.cases[0].matches(e));
    e.q = 3; e.p = 2; e.n = 3;   // q+1 = 4 = 2^2, but q % 4 == 3
    CHECK(!el.cases[0].matches(e));
    e.q = 5; e.p = 3; e.n = 2;   // gcd(2,6) == 2 carries the || arm
    CHECK(el.cases[0].matches(e));
    e.q = 13; e.p = 7; e.n = 3;  // 13 % 4 == 1 and 14 = ... not a power of 7; 14? no
    CHECK(!el.cases[0].matches(e));
    e.q = 48; e.p = 7; e.n = 3;  // 49 = 7^2 but 48 % 4 == 0
    CHECK(!el.cases[0].matches(e));
    CHECK(el.canonical_label("B") == "A");
    CHECK(el.canonical_label("C") == "C");
    std::istringstream bad1("case y family=F cond=q ++ 1\n");
    CHECK_THROWS(parse_expected_list(bad1));
    std::istringstream bad2("bogus line\n");
    CHECK_THROWS(parse_expected_list(bad2));
}

TEST_CASE("fixed predicate cases against hand checks", "[verify][predicate]") {
    const auto& el = expected_list();
    auto match = [&](const char* fam, std::int64_t n, std::int64_t q, std::int64_t p,
                     std::int64_t ell) {
        PredicateEnv e;
        e.n = n; e.q = q; e.p = p; e.ell = ell;
        return !el.matching(fam, e).empty();
    };
    CHECK(match("Alt", 5, 0, 2, 0));
    CHECK(match("Alt", 5, 0, 5, 0));
    CHECK(!match("Alt", 5, 0, 3, 0));
    CHECK(!match("Alt", 9, 0, 3, 0));
    CHECK(match("PSL2", 2, 4, 5, 2));    // q+1 = 5
    CHECK(match("PSL2", 2, 8, 3, 2));    // q+1 = 9 = 3^2
    CHECK(!match("PSL2", 2, 16, 3, 2));  // q+1 = 17
    CHECK(match("PSL2", 2, 16, 17, 2));
    CHECK(match("PSL2", 2, 5, 2, 5));    // q-1 = 4 = 2^2
    CHECK(!match("PSL2", 2, 3, 2, 3));   // t >= 2 demands q-1 >= 4
    CHECK(match("PSL2", 2, 7, 2, 7));    // q+1 = 8 = 2^3
    CHECK(match("Sp4", 2, 2, 3, 2));
    CHECK(match("Sp4", 2, 3, 2, 3));
    CHECK(!match("Sp4", 2, 4, 3, 2));
}

TEST_CASE("classify on the quoted PSL2 cells", "[verify][classify]") {
    auto psl2 = [](std::uint64_t q) { return GroupSpec{Family::LinearPSL, 2, q, {}}; };
    ClassifyResult r = classify(psl2(4), 5, &catalog());
    CHECK(r.verdict == ClassifyVerdict::EXCEPTION);
    CHECK(*r.sigma_exact == Nat(16));
    CHECK(r.index == Nat(12));
    CHECK(classify_psl2_pattern(4, 5) == Psl2Case::case11);

    r = classify(psl2(9), 2, &catalog());
    CHECK(r.verdict == ClassifyVerdict::EXCEPTION);
    CHECK(*r.sigma_exact == Nat(46));
    CHECK(r.index == Nat(45));
    CHECK(classify_psl2_pattern(9, 2) == Psl2Case::case12);

    r = classify(psl2(11), 3, &catalog());
    CHECK(r.verdict == ClassifyVerdict::LESS);
    CHECK(*r.sigma_exact == Nat(66));
    CHECK(r.index == Nat(220));

    CHECK(classify(psl2(7), 7, &catalog()).verdict == ClassifyVerdict::DEFINING);
    CHECK(classify_psl2_pattern(7, 2) == Psl2Case::case13);
    CHECK(classify_psl2_pattern(8, 3) == Psl2Case::case11);
    CHECK(classify_psl2_pattern(13, 7) == Psl2Case::less);  // q+1 = 14 = 2*7
    CHECK_THROWS(classify_psl2_pattern(3, 2));
}

TEST_CASE("classify agrees with the PSL2 pattern across the box", "[verify][classify]") {
    for (std::uint64_t q = 4; q <= 256; ++q) {
        auto pp = as_prime_power(q);
        if (!pp) continue;
        GroupSpec s{Family::LinearPSL, 2, q, {}};
        for (std::uint64_t p : prime_divisors(order(s).simple_order)) {
            if (p == pp->p) continue;
            ClassifyResult r = classify(s, p, &catalog());
            bool pattern_exception = classify_psl2_pattern(q, p) != Psl2Case::less;
            CHECK((r.verdict == ClassifyVerdict::EXCEPTION) == pattern_exception);
        }
    }
}

TEST_CASE("classify handles the Alt table and majorant routes", "[verify][classify]") {
    // table-decided cells
    CHECK(classify(GroupSpec{Family::Alt, 5, 0, {}}, 3, &catalog()).verdict ==
          ClassifyVerdict::LESS);                 // 16 < 20 even though t_5 = 26 >= 20
    CHECK(classify(GroupSpec{Family::Alt, 9, 0, {}}, 3, &catalog()).verdict ==
          ClassifyVerdict::LESS);                 // 1366 < 2240 though t_9 = 2620 >= 2240
    CHECK(classify(GroupSpec{Family::Alt, 8, 0, {}}, 2, &catalog()).verdict ==
          ClassifyVerdict::EXCEPTION);
    // majorant-decided cell with no bundled table
    ClassifyResult far = classify(GroupSpec{Family::Alt, 14, 0, {}}, 2, nullptr);
    CHECK(far.verdict == ClassifyVerdict::LESS);
    CHECK(far.trace.find("majorant") != std::string::npos);
    // without a table, Alt(9) at p=3 cannot be decided by the majorant alone
    CHECK(classify(GroupSpec{Family::Alt, 9, 0, {}}, 3, nullptr).verdict ==
          ClassifyVerdict::UNDECIDED);
}

TEST_CASE("classify Sp4 coincidence routes", "[verify][classify]") {
    GroupSpec sp42{Family::SympPSp, 2, 2, {}};
    ClassifyResult r = classify(sp42, 3, &catalog());
    CHECK(r.verdict == ClassifyVerdict::EXCEPTION);
    CHECK(*r.sigma_exact == Nat(46));
    CHECK(r.index == Nat(40));
    CHECK(classify(sp42, 5, &catalog()).verdict == ClassifyVerdict::LESS);

    GroupSpec sp43{Family::SympPSp, 2, 3, {}};
    r = classify(sp43, 2, &catalog());
    CHECK(r.verdict == ClassifyVerdict::EXCEPTION);
    CHECK(*r.sigma_exact == Nat(576));
    CHECK(r.index == Nat(405));
    CHECK(classify(sp43, 5, &catalog()).verdict == ClassifyVerdict::LESS);

    // q = 4: the adjoint-bound route closes every non-defining prime
    GroupSpec sp44{Family::SympPSp, 2, 4, {}};
    for (std::uint64_t p : {3ull, 5ull, 17ull})
        CHECK(classify(sp44, p, &catalog()).verdict == ClassifyVerdict::LESS);
    // q = 5, p = 2 is the honestly undecided cell
    CHECK(classify(GroupSpec{Family::SympPSp, 2, 5, {}}, 2, &catalog()).verdict ==
          ClassifyVerdict::UNDECIDED);
    CHECK(classify(GroupSpec{Family::SympPSp, 2, 5, {}}, 3, &catalog()).verdict ==
          ClassifyVerdict::LESS);
}

TEST_CASE("sweep reproduces the expected exception lists", "[verify][sweep]") {
    SweepConfig cfg;
    SweepReport rep = run_sweep(cfg, expected_list(), &catalog());
    INFO("mismatches: " << (rep.mismatches.empty() ? "none" : rep.mismatches.front()));
    CHECK(rep.matches_expected);
    CHECK(rep.undecided_undeclared == 0);
    CHECK(rep.undecided_declared == 1);  // Sp4 q=5 p=2

    // Alt box: exactly (5,{2,5}), (6,{2,3}), (8,{2})
    std::vector<std::pair<std::uint64_t, std::uint64_t>> alt_exc;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> sp4_exc;
    std::size_t psl2_count = 0;
    for (const auto& e : rep.exceptions) {
        CHECK(e.sigma >= e.index);  // soundness: re-checkable from the record alone
        for (const auto& m : e.members) {
            if (m.family_tag == "Alt") alt_exc.push_back({m.spec.n_or_rank, e.p});
            if (m.family_tag == "Sp4") sp4_exc.push_back({m.spec.q, e.p});
            if (m.family_tag == "PSL2") {
                ++psl2_count;
                CHECK(classify_psl2_pattern(m.spec.q, e.p) != Psl2Case::less);
            }
        }
    }
    CHECK(alt_exc == std::vector<std::pair<std::uint64_t, std::uint64_t>>{
                         {5, 2}, {5, 5}, {6, 2}, {6, 3}, {8, 2}});
    // Sp4 box: the two quoted rows
    CHECK(sp4_exc == std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 3}, {3, 2}});
    // PSL2 box q <= 1024: 11 exception cells, all matching the case patterns
    CHECK(psl2_count == 11);

    // canonical labels fold the cross-family coincidences into merged records
    auto record_of = [&](const std::string& canonical, std::uint64_t p) -> const ExceptionRecord* {
        for (const auto& e : rep.exceptions)
            if (e.canonical == canonical && e.p == p) return &e;
        return nullptr;
    };
    const ExceptionRecord* alt5p5 = record_of("Alt(5)", 5);
    REQUIRE(alt5p5 != nullptr);
    CHECK(alt5p5->members.size() == 2);  // Alt(5) and PSL(2,4)
    const ExceptionRecord* alt6p3 = record_of("Alt(6)", 3);
    REQUIRE(alt6p3 != nullptr);
    CHECK(alt6p3->members.size() == 2);  // Alt(6) and PSp(4,2)
    CHECK(alt6p3->has_family("Sp4"));
    const ExceptionRecord* alt6p2 = record_of("Alt(6)", 2);
    REQUIRE(alt6p2 != nullptr);
    CHECK(alt6p2->members.size() == 2);  // Alt(6) and PSL(2,9)
    const ExceptionRecord* psp43 = record_of("PSU(4,2)", 2);
    REQUIRE(psp43 != nullptr);           // PSp(4,3) folded onto its canonical name
    CHECK(psp43->members.size() == 1);
    CHECK(psp43->members.front().spec.label() == "PSp(4,3)");
}

TEST_CASE("sweep soundness and conservativity traces", "[verify][sweep]") {
    SweepConfig cfg;
    cfg.alt_max_n = 10;
    cfg.psl2_max_q = 64;
    cfg.sp4_max_q = 4;
    SweepReport rep = run_sweep(cfg, expected_list(), &catalog());
    for (const auto& cell : rep.cells) {
        if (cell.result.verdict == ClassifyVerdict::EXCEPTION) {
            REQUIRE(cell.result.sigma_exact.has_value());
            CHECK(*cell.result.sigma_exact >= cell.result.index);   // re-checkable witnesses
        }
        if (cell.result.verdict == ClassifyVerdict::LESS) {
            // conservativity: a LESS cell shows either exact < exact or upper < exact
            bool exact_route = cell.result.sigma_exact.has_value() &&
                               Rat(Int(*cell.result.sigma_exact)) < Rat(Int(cell.result.index));
            bool bound_route = cell.result.sigma_upper.has_value() &&
                               *cell.result.sigma_upper < QuadInt(Rat(Int(cell.result.index)));
            CHECK((exact_route || bound_route));
        }
    }
}

TEST_CASE("sweep determinism: two runs, identical serialized cells", "[verify][sweep]") {
    SweepConfig cfg;
    cfg.alt_max_n = 12;
    cfg.psl2_max_q = 128;
    cfg.sp4_max_q = 5;
    auto render = [&](const SweepReport& r) {
        std::ostringstream os;
        for (const auto& c : r.cells)
            os << c.point() << "|" << classify_verdict_name(c.result.verdict) << "|"
               << c.result.index.to_decimal() << "|" << c.result.trace << "\n";
        for (const auto& e : r.exceptions) {
            os << e.canonical << "," << e.sigma.to_decimal() << "," << e.index.to_decimal();
            for (const auto& m : e.members) os << "," << m.spec.label() << ":" << m.case_tag;
            os << "\n";
        }
        return os.str();
    };
    cfg.threads = 1;
    std::string a = render(run_sweep(cfg, expected_list(), &catalog()));
    cfg.threads = 4;  // concurrent evaluation must not change the bytes
    std::string b = render(run_sweep(cfg, expected_list(), &catalog()));
    CHECK(a == b);
    std::string c = render(run_sweep(cfg, expected_list(), &catalog()));
    CHECK(b == c);
}

TEST_CASE("empty boxes match trivially", "[verify][sweep]") {
    SweepConfig cfg;
    cfg.alt_max_n = 0;
    cfg.psl2_max_q = 0;
    cfg.sp4_max_q = 0;
    SweepReport rep = run_sweep(cfg, expected_list(), &catalog());
    CHECK(rep.matches_expected);
    CHECK(rep.cells.empty());
    CHECK(rep.exceptions.empty());
}

TEST_CASE("resource caps are enforced", "[verify][sweep]") {
    SweepConfig cfg;
    cfg.psl2_max_q = SweepConfig::kMaxQ + 1;
    CHECK_THROWS_AS(run_sweep(cfg, expected_list(), &catalog()), std::length_error);
}

TEST_CASE("claims C3, C4, C5 verdicts", "[verify][claims]") {
    ClaimRecord c3 = run_claim("C3");
    CHECK(c3.verdict == Verdict::HOLDS);
    // the F4(2) carve-out is a computed failure that matches the registration
    bool saw_f42 = false;
    for (const auto& cell : c3.cells)
        if (cell.point == "F4(2)") {
            saw_f42 = true;
            CHECK(cell.outcome == -1);
            CHECK(cell.expected);
        }
    CHECK(saw_f42);

    ClaimRecord c4 = run_claim("C4");
    CHECK(c4.verdict == Verdict::HOLDS);
    CHECK(c4.cells.front().point == "q=2");
    CHECK(c4.cells.front().outcome == -1);
    for (std::size_t i = 1; i < c4.cells.size(); ++i) CHECK(c4.cells[i].outcome == 1);

    ClaimRecord c5 = run_claim("C5");
    CHECK(c5.verdict == Verdict::HOLDS);
    CHECK(c5.cells.size() == 3);
    for (const auto& cell : c5.cells) CHECK(cell.outcome == 1);
}

TEST_CASE("claims C6, C7 exception sets frozen from the rational oracle", "[verify][claims]") {
    ClaimRecord c6 = run_claim("C6");
    CHECK(c6.verdict == Verdict::HOLDS);
    std::vector<std::string> fails;
    for (const auto& cell : c6.cells)
        if (cell.outcome < 0) fails.push_back(cell.point);
    CHECK(fails == std::vector<std::string>{"n=4,q=2", "n=4,q=3", "n=4,q=4", "n=4,q=5",
                                            "n=5,q=2"});

    ClaimRecord c7 = run_claim("C7");
    CHECK(c7.verdict == Verdict::HOLDS);
    fails.clear();
    for (const auto& cell : c7.cells) {
        CHECK(cell.outcome != 0);  // the z bracket decides every cell
        if (cell.outcome < 0) fails.push_back(cell.point);
    }
    CHECK(fails == std::vector<std::string>{"n=4,q=2", "n=4,q=3", "n=4,q=4", "n=4,q=5",
                                            "n=4,q=7", "n=5,q=2", "n=6,q=2"});
}

TEST_CASE("claims C8, C9, C10 verdicts", "[verify][claims]") {
    CHECK(run_claim("C8").verdict == Verdict::HOLDS);

    ClaimRecord c9 = run_claim("C9");
    CHECK(c9.verdict == Verdict::HOLDS);
    std::vector<std::string> fails;
    for (const auto& cell : c9.cells)
        if (cell.outcome < 0) fails.push_back(cell.point);
    CHECK(fails == std::vector<std::string>{"q=2,r=4", "q=2,r=5", "q=2,r=6", "q=2,r=7",
                                            "q=2,r=8", "q=3,r=4", "q=3,r=5", "q=4,r=4"});

    ClaimRecord c10 = run_claim("C10");
    CHECK(c10.verdict == Verdict::HOLDS);
    fails.clear();
    for (const auto& cell : c10.cells)
        if (cell.outcome < 0) fails.push_back(cell.point);
    CHECK(fails == std::vector<std::string>{"PGL3 q=2", "PGL3 q=3", "PGL3 q=4", "PGL3 q=7",
                                            "PGU3 q=2", "PGU3 q=3", "PGU3 q=4", "PGU3 q=5",
                                            "PGU3 q=8"});
}

TEST_CASE("formula and table routes agree wherever both exist", "[verify][classify]") {
    // PSL2(7) and PSL2(11) have both a closed form and a bundled table; the
    // classifier must give identical verdicts with and without the catalog
    for (std::uint64_t q : {7ull, 11ull}) {
        GroupSpec s{Family::LinearPSL, 2, q, {}};
        auto pp = as_prime_power(q);
        const DegreeTable* t = catalog().find(s.label());
        REQUIRE(t != nullptr);
        CHECK(t->sigma() == sigma_small_lie(s));
        for (std::uint64_t p : prime_divisors(order(s).simple_order)) {
            if (p == pp->p) continue;
            CHECK(classify(s, p, &catalog()).verdict == classify(s, p, nullptr).verdict);
        }
    }
    // the split quotient and the bundled PSU(3,3) table agree
    CHECK(*sigma_psu_split(3, 3) == catalog().find("PSU(3,3)")->sigma());
    // Alt(6) table vs the PSL2(9) closed form
    CHECK(catalog().find("Alt(6)")->sigma() ==
          sigma_small_lie(GroupSpec{Family::LinearPSL, 2, 9, {}}));
}

TEST_CASE("unknown claim ids are rejected", "[verify][claims]") {
    CHECK_THROWS_AS(run_claim("C99"), std::invalid_argument);
}

TEST_CASE("claim determinism", "[verify][claims]") {
    ClaimRecord a = run_claim("C4"), b = run_claim("C4");
    REQUIRE(a.cells.size() == b.cells.size());
    for (std::size_t i = 0; i < a.cells.size(); ++i) {
        CHECK(a.cells[i].witness == b.cells[i].witness);
        CHECK(a.cells[i].outcome == b.cells[i].outcome);
    }
}

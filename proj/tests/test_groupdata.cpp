#include <catch2/catch.hpp>

#include <degsum/degree_table.hpp>
#include <degsum/orders.hpp>

using namespace degsum;

namespace {
const TableCatalog& catalog() {
    static TableCatalog c{DEGSUM_DATA_DIR};
    return c;
}
GroupSpec spec(Family f, std::uint64_t n, std::uint64_t q = 0) { return GroupSpec{f, n, q, {}}; }
} // namespace

TEST_CASE("order formulas on pinned examples", "[groupdata]") {
    CHECK(order(spec(Family::LinearPSL, 2, 7)).simple_order == Nat(168));
    CHECK(order(spec(Family::OrthOddGO, 1, 3)).group_order == Nat(48));
    CHECK(order(spec(Family::Sym, 4)).group_order == Nat(24));
    CHECK(order(spec(Family::Alt, 4)).group_order == Nat(12));

    CHECK(order(spec(Family::LinearPSL, 2, 9)).simple_order == Nat(360));   // Alt(6)
    CHECK(order(spec(Family::LinearPSL, 4, 2)).simple_order == Nat(20160)); // Alt(8)
    CHECK(order(spec(Family::LinearGL, 3, 2)).group_order == Nat(168));     // GL3(2) = PSL2(7)
    CHECK(order(spec(Family::UnitaryPSU, 4, 2)).simple_order == Nat(25920));
    CHECK(order(spec(Family::SympPSp, 2, 3)).simple_order == Nat(25920));   // PSp4(3) = PSU4(2)
    CHECK(order(spec(Family::SympPSp, 2, 2)).simple_order == Nat(360));     // Sp4(2)' = Alt(6)
    CHECK(order(spec(Family::SympSp, 3, 2)).simple_order ==
          order(spec(Family::SympSp, 3, 2)).group_order);                   // Sp6(2) is simple
    CHECK(order(spec(Family::UnitaryPSU, 3, 3)).simple_order == Nat(6048));
    CHECK(order(spec(Family::G2, 0, 2)).group_order == Nat(12096));
    CHECK(order(spec(Family::G2, 0, 2)).simple_order == Nat(6048));         // G2(2)' = U3(3)
    CHECK(order(spec(Family::Ree2G2, 0, 3)).group_order == Nat(1512));
    CHECK(order(spec(Family::Ree2G2, 0, 3)).simple_order == Nat(504));      // PSL2(8)
    CHECK(order(spec(Family::Ree2F4, 0, 2)).group_order == Nat(35942400));
    CHECK(order(spec(Family::Ree2F4, 0, 2)).simple_order == Nat(17971200)); // Tits group
    CHECK(order(spec(Family::Suzuki2B2, 0, 8)).group_order == Nat(29120));  // Sz(8)
}

TEST_CASE("sporadic orders are name-keyed constants", "[groupdata]") {
    GroupSpec m11{Family::Sporadic, 0, 0, "M11"};
    CHECK(order(m11).group_order == Nat(7920));
    GroupSpec j1{Family::Sporadic, 0, 0, "J1"};
    CHECK(order(j1).group_order == Nat(175560));
    GroupSpec unknown{Family::Sporadic, 0, 0, "Mystery"};
    CHECK_THROWS(order(unknown));
}

TEST_CASE("invalid parameter combinations are rejected", "[groupdata]") {
    CHECK_THROWS(order(spec(Family::Suzuki2B2, 0, 2)));   // m >= 1 required
    CHECK_THROWS(order(spec(Family::Suzuki2B2, 0, 16))); // even exponent
    CHECK_THROWS(order(spec(Family::Ree2G2, 0, 9)));
    CHECK_THROWS(order(spec(Family::OrthOddGO, 2, 4)));  // even q
    CHECK_THROWS(order(spec(Family::LinearPSL, 2, 6)));  // not a prime power
    CHECK_THROWS(order(spec(Family::OrthEvenAdjPlus, 3, 3)));  // r >= 4
}

TEST_CASE("defining-characteristic valuation recovers the q-power prefactor", "[groupdata]") {
    struct Row { GroupSpec s; std::uint64_t qexp; };
    const Row rows[] = {
        {spec(Family::LinearGL, 4, 3), 6},       // q^{n(n-1)/2}
        {spec(Family::UnitaryGU, 3, 4), 3},
        {spec(Family::SympSp, 3, 5), 9},         // q^{r^2}
        {spec(Family::OrthOddGO, 2, 7), 4},      // q^{m^2}
        {spec(Family::OrthEvenAdjPlus, 4, 2), 12},
        {spec(Family::G2, 0, 5), 6},
        {spec(Family::Ree2F4, 0, 8), 12},
        {spec(Family::E8, 0, 2), 120},
    };
    for (const auto& row : rows) {
        OrderFormula f = order(row.s);
        auto pp = as_prime_power(row.s.q);
        auto v = valuation(f.group_order, pp->p);
        CHECK(v.exponent == pp->e * row.qexp);
    }
}

TEST_CASE("|S| divides |G| across the sweep box", "[groupdata]") {
    std::vector<GroupSpec> specs;
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        for (std::uint64_t n = 2; n <= 6; ++n) {
            specs.push_back(spec(Family::LinearGL, n, q));
            specs.push_back(spec(Family::LinearPGL, n, q));
            specs.push_back(spec(Family::UnitaryGU, n, q));
            specs.push_back(spec(Family::SympSp, std::max<std::uint64_t>(n, 2), q));
        }
        specs.push_back(spec(Family::OrthEvenAdjPlus, 4, q));
        specs.push_back(spec(Family::OrthEvenAdjMinus, 5, q));
        if (q % 2) {
            specs.push_back(spec(Family::OrthOddGO, 3, q));
        }
        specs.push_back(spec(Family::G2, 0, q));
        specs.push_back(spec(Family::E6, 0, q));
        specs.push_back(spec(Family::Twisted2E6, 0, q));
        specs.push_back(spec(Family::E7, 0, q));
    }
    for (const auto& sp : specs) {
        OrderFormula f = order(sp);
        CHECK((f.group_order % f.simple_order).is_zero());
    }
}

TEST_CASE("degree table ingestion validates the mass check", "[groupdata]") {
    DegreeTable t = ingest_degree_table(
        "label PSL(2,7)\norder 168\nprovenance test\n1 1\n3 2\n6 1\n7 1\n8 1\n");
    CHECK(t.sigma() == Nat(28));
    CHECK(t.character_count() == Nat(6));

    // corrupted mass (all degrees divide 168, but sum of squares is off)
    CHECK_THROWS_WITH(ingest_degree_table(
        "label X\norder 168\nprovenance test\n1 1\n3 2\n6 1\n7 1\n8 2\n"),
        Catch::Contains("mass check"));
    // degree not dividing the order
    CHECK_THROWS(ingest_degree_table(
        "label X\norder 168\nprovenance test\n1 1\n5 1\n"));
    // missing header
    CHECK_THROWS(ingest_degree_table("1 1\n"));

    DegreeTable s3 = ingest_degree_table(
        "label Sym(3)\norder 6\nprovenance brute force\n1 2\n2 1\n");
    CHECK(s3.sigma() == Nat(4));
}

TEST_CASE("bundled tables load and match pinned sums", "[groupdata]") {
    const auto& cat = catalog();
    REQUIRE(cat.size() >= 10);
    struct Want { const char* label; std::uint64_t sigma; std::uint64_t order; };
    const Want wants[] = {
        {"Alt(5)", 16, 60},   {"Alt(6)", 46, 360},     {"Alt(7)", 126, 2520},
        {"Alt(8)", 448, 20160}, {"Alt(9)", 1366, 181440}, {"Sym(3)", 4, 6},
        {"PSL(2,7)", 28, 168}, {"PSL(2,11)", 66, 660},
        {"G2(2)", 328, 12096}, {"PSU(3,3)", 252, 6048},
    };
    for (const auto& w : wants) {
        const DegreeTable* t = cat.find(w.label);
        REQUIRE(t != nullptr);
        CHECK(t->sigma() == Nat(w.sigma));
        CHECK(t->order == Nat(w.order));
        CHECK(!t->provenance.empty());
    }
    // the GL3(2) = PSL2(7) coincidence: table order matches the formula order
    CHECK(catalog().find("PSL(2,7)")->order ==
          order(spec(Family::LinearGL, 3, 2)).group_order);
}

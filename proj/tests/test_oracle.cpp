#include <doctest.h>

#include <set>

#include "lcdkit/oracle.hpp"

using namespace lcdkit;
using namespace lcdkit::oracle;

TEST_SUITE("oracle") {

TEST_CASE("enumeration yields each subspace exactly once") {
    Field f2(2);
    std::vector<std::string> lines;
    enumerate_codes(2, 1, f2, [&](const LinearCode& c) {
        lines.push_back(c.generator().to_text());
    });
    CHECK(lines == std::vector<std::string>{"10", "11", "01"});  // lex pivot order

    std::set<std::string> planes;
    enumerate_codes(4, 2, f2, [&](const LinearCode& c) {
        CHECK(c.dimension() == 2);
        CHECK(c.generator().rref().reduced == c.generator());
        planes.insert(c.generator().to_text());
    });
    CHECK(planes.size() == 35);

    std::size_t count = 0;
    enumerate_codes(3, 3, f2, [&](const LinearCode&) { ++count; });
    CHECK(count == 1);

    Field f3(3);
    std::set<std::string> gf3_lines;
    enumerate_codes(3, 1, f3, [&](const LinearCode& c) {
        gf3_lines.insert(c.generator().to_text());
    });
    CHECK(gf3_lines.size() == 13);

    CHECK_THROWS_AS(enumerate_codes(40, 20, f2, [](const LinearCode&) {}), BudgetError);
    CHECK_THROWS_AS(enumerate_codes(4, 2, f2, [](const LinearCode&) {}, 10), BudgetError);
}

TEST_CASE("census of GF(2)^3 and GF(2)^2") {
    Field f2(2);
    CensusReport rep3 = census(3, f2);
    REQUIRE(rep3.rows.size() == 2);
    CHECK(rep3.rows[0].total == 7);
    CHECK(rep3.rows[0].lcd == 4);
    CHECK(rep3.rows[0].oo == 3);
    CHECK(rep3.rows[0].oe == 1);
    CHECK(rep3.rows[0].eo == 0);
    CHECK(rep3.rows[0].d_lcd == 3);
    CHECK(rep3.rows[1].lcd == 4);
    CHECK(rep3.rows[1].oo == 3);
    CHECK(rep3.rows[1].oe == 0);
    CHECK(rep3.rows[1].eo == 1);
    CHECK(rep3.rows[1].d_lcd == 2);
    CHECK(rep3.all_match());

    CensusReport rep2 = census(2, f2);
    REQUIRE(rep2.rows.size() == 1);
    CHECK(rep2.rows[0].lcd == 2);  // span{10} and span{01}; span{11} is excluded
    CHECK(rep2.all_match());
}

TEST_CASE("census of GF(3)^3") {
    Field f3(3);
    CensusReport rep = census(3, f3);
    REQUIRE(rep.rows.size() == 2);
    CHECK(rep.rows[0].total == 13);
    CHECK(rep.rows[0].lcd == 9);     // 13 lines minus 4 isotropic
    CHECK(rep.rows[0].plus == 3);
    CHECK(rep.rows[0].minus == 6);
    CHECK(rep.all_match());
}

TEST_CASE("census formulas agree at unit-test scale") {
    Field f2(2);
    for (unsigned n = 2; n <= 6; ++n) CHECK(census(n, f2).all_match());
    Field f3(3);
    for (unsigned n = 2; n <= 4; ++n) CHECK(census(n, f3).all_match());
}

TEST_CASE("census serialization is stable and round-trips") {
    Field f2(2);
    CensusReport rep = census(4, f2);
    auto j = rep.to_json();
    CHECK(j["version"] == kCensusFormatVersion);
    CHECK(rep.to_json().dump(2) == j.dump(2));  // byte-stable re-serialization
    CensusReport back = CensusReport::from_json(j);
    CHECK(back.p == rep.p);
    CHECK(back.n == rep.n);
    REQUIRE(back.rows.size() == rep.rows.size());
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        CHECK(back.rows[i].k == rep.rows[i].k);
        CHECK(back.rows[i].total == rep.rows[i].total);
        CHECK(back.rows[i].lcd == rep.rows[i].lcd);
        CHECK(back.rows[i].oo == rep.rows[i].oo);
        CHECK(back.rows[i].d_lcd == rep.rows[i].d_lcd);
        CHECK(back.rows[i].witness == rep.rows[i].witness);
        CHECK(back.rows[i].formula_match() == rep.rows[i].formula_match());
    }
    CHECK(back.to_json().dump(2) == j.dump(2));

    nlohmann::ordered_json stale = j;
    stale["version"] = 999;
    CHECK_THROWS_AS(CensusReport::from_json(stale), ParseError);

    std::string csv = rep.to_csv();
    CHECK(csv.substr(0, csv.find('\n')) == "p,n,k,total,lcd,oo,oe,eo,d_lcd,formula_match");
    CHECK(census(4, f2).to_csv() == csv);  // identical inputs, identical bytes

    Field f3(3);
    CensusReport rep3 = census(3, f3);
    std::string csv3 = rep3.to_csv();
    CHECK(csv3.substr(0, csv3.find('\n')) == "p,n,k,total,lcd,plus,minus,d_lcd,formula_match");
    CensusReport back3 = CensusReport::from_json(rep3.to_json());
    CHECK(back3.rows[0].plus == rep3.rows[0].plus);
    CHECK(back3.rows[0].minus == rep3.rows[0].minus);
    CHECK(back3.to_json().dump(2) == rep3.to_json().dump(2));
}

TEST_CASE("max-distance table") {
    Field f2(2);
    auto table = dlcd_table(6, f2);
    auto lookup = [&](unsigned n, unsigned k) {
        for (const auto& e : table) {
            if (e.n == n && e.k == k) return e;
        }
        FAIL("missing entry");
        return DlcdEntry{};
    };
    CHECK(lookup(3, 1).d == 3);
    CHECK(lookup(4, 1).d == 3);  // all-ones of weight 4 is self-orthogonal
    CHECK(lookup(4, 2).d == 2);
    for (const auto& e : table) {
        CHECK(e.monotone_ok);
        if (e.d > 0) {
            LinearCode witness = LinearCode::from_text(f2, e.witness);
            CHECK(is_lcd(witness));
            CHECK(min_distance(witness) == e.d);
        }
    }
}

TEST_CASE("brute-force group orders") {
    Field f2(2);
    CHECK(brute_force_group_order(GroupKind::OrthogonalGF2, 3, f2) == 6);
    CHECK(brute_force_group_order(GroupKind::SymplecticGF2, 4, f2) == 720);
    Field f3(3);
    CHECK(brute_force_group_order(GroupKind::OrthogonalQ, 2, f3, +1) == 8);
    CHECK_THROWS_AS(brute_force_group_order(GroupKind::OrthogonalGF2, 6, f2),
                    BudgetError);  // 2^36 matrices
    CHECK_THROWS_AS(brute_force_group_order(GroupKind::SymplecticGF2, 3, f2),
                    std::invalid_argument);
    CHECK_THROWS_AS(brute_force_group_order(GroupKind::OrthogonalQ, 2, f2),
                    std::invalid_argument);
}

TEST_CASE("mass formula at hand-checkable sizes") {
    auto r21 = mass_formula_check(2, 1);
    CHECK(r21.class_count == 1);
    CHECK(r21.sum_inverse_aut == 1);  // lone class, trivial automorphisms
    CHECK(r21.rhs == 1);
    CHECK(r21.match);

    auto r31 = mass_formula_check(3, 1);
    CHECK(r31.class_count == 1);
    CHECK(r31.sum_inverse_aut == counting::BigRational(1, 2));
    CHECK(r31.match);

    auto r42 = mass_formula_check(4, 2);
    CHECK(r42.match);

    CHECK_THROWS_AS(mass_formula_check(7, 2), std::invalid_argument);
    CHECK_THROWS_AS(mass_formula_check(4, 4), std::invalid_argument);
}

}  // TEST_SUITE

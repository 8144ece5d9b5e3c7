#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "lscat/json_io.hpp"

using namespace lscat;
using nlohmann::json;

TEST_CASE("op json round trip and validation") {
    CHECK(op_from_json(op_to_json(sq(4), 2), 2) == sq(4));
    CHECK(op_from_json(op_to_json(beta_power_op(1), 3), 3) == beta_power_op(1));
    CHECK(op_from_json(json{{"kind", "beta"}}, 3) == beta_power_op(0));
    CHECK_THROWS(op_from_json(json{{"kind", "Sq"}, {"i", 2}}, 3));
    CHECK_THROWS(op_from_json(json{{"kind", "P"}, {"i", 1}}, 2));
    CHECK_THROWS(op_from_json(json{{"kind", "P"}, {"i", 0}}, 3));  // identity is not an op
}

TEST_CASE("element json round trip") {
    auto a = get(Group::F4, 2).algebra;
    Monomial m = a.unit();
    m.exps[0] = 3;
    m.exps[2] = 1;
    Element e = a.element(m);
    Element back = element_from_json(a, element_to_json(a, e));
    CHECK(back == e);
    CHECK_THROWS(element_from_json(a, json::parse(R"([{"monomial":{"nope":1},"coeff":1}])")));
}

TEST_CASE("catalog entries round trip through the bundle schema") {
    for (auto [g, p] : all_entries()) {
        CatalogEntry entry = get(g, p);
        json j = bundle_to_json(bundle_from_entry(entry));
        PresentationBundle b = bundle_from_json(j);
        CHECK(b.algebra == entry.algebra);
        CHECK(b.action_table.stored().size() == entry.action_table.stored().size());
        REQUIRE(b.coalgebra.has_value());
        CHECK(b.coalgebra->cofactors().size() == entry.loop_coalgebra.cofactors().size());
        CHECK(b.z_classes.size() == entry.z_classes.size());
        CHECK(b.differentials.size() == entry.differentials.size());
        // invariants computed from the round-tripped bundle agree
        MwgtOptions opts;
        auto rep = mwgt_lower(b.algebra, b.action_table, b.z_classes, opts);
        auto expect = compute_invariants(entry);
        CHECK(rep.cup == expect.cup);
        CHECK(rep.wgt == expect.wgt);
        CHECK(rep.mwgt_lower == expect.mwgt_lower);
    }
}

TEST_CASE("bundle files load from disk") {
    json j = bundle_to_json(bundle_from_entry(get(Group::G2, 2)));
    std::string path = "lscat_test_bundle.json";
    {
        std::ofstream out(path);
        out << j.dump();
    }
    PresentationBundle b = load_bundle_file(path);
    CHECK(b.algebra.n_generators() == 2);
    std::remove(path.c_str());
    CHECK_THROWS(load_bundle_file("does_not_exist.json"));
}

TEST_CASE("explicit unknown entries survive the round trip") {
    auto a = get(Group::F4, 2).algebra;
    ActionTable t(a);
    t.set_unknown("x23", sq(1));
    t.set("x3", sq(2), element_from_json(a, json::parse(R"([{"monomial":{"x5":1},"coeff":1}])")));
    PresentationBundle b;
    b.algebra = a;
    b.action_table = t.autofill();
    json j = bundle_to_json(b);
    PresentationBundle back = bundle_from_json(j);
    auto it = back.action_table.stored();
    int unknowns = 0;
    for (const auto& [key, val] : it)
        if (!val.has_value()) unknowns++;
    CHECK(unknowns == 1);
}

TEST_CASE("entry json includes the documentation fields") {
    json j = entry_to_json(get(Group::F4, 2));
    CHECK(j.at("group") == "F4");
    CHECK(j.contains("expectedCotor"));
    CHECK(j.contains("coverCohomology"));
    CHECK(j.contains("coalgebraTorDerived"));
    CHECK(j.at("expected").at("mwgtLower") == 8);
    CHECK(j.at("notes").size() >= 1);

    json e8 = entry_to_json(get(Group::E8, 2));
    CHECK_FALSE(e8.contains("coalgebraTorDerived"));
    CHECK(e8.at("expected").at("wgt") == 32);
}

TEST_CASE("report serializers") {
    auto entry = get(Group::E7, 3);
    auto rep = compute_invariants(entry);
    json j = invariant_report_to_json(entry.algebra, rep);
    CHECK(j.at("cup") == 9);
    CHECK(j.at("wgt") == 11);
    CHECK(j.at("mwgtLower") == 13);
    REQUIRE(j.contains("certificate"));
    CHECK(j["certificate"].at("m") == 12);
    CHECK(j["certificate"].at("valid") == true);
    CHECK(j["certificate"]["checks"].at("parity") == true);

    auto dims = cobar_homology(get(Group::G2, 2).loop_coalgebra, 12);
    json dj = dims_to_json(dims);
    CHECK(dj.at("grading") == "cotor");
    CHECK(dj.at("totals").at("3") == 1);

    auto er = verify_entry(get(Group::G2, 2), 14);
    json ej = entry_report_to_json(er);
    CHECK(ej.at("fail") == false);
}

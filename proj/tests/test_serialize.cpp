#include <doctest.h>

#include "lathom/embeddings.hpp"
#include "lathom/serialize.hpp"

using namespace lathom;

TEST_CASE("maps round trip through json") {
    auto maps = enumerate_lattice_homotheties(LatticeModel::partition(2),
                                              LatticeModel::partition(3));
    REQUIRE(!maps.empty());
    for (const auto& f : maps) {
        json j = map_to_json(f);
        HomothetyMap back = map_from_json(j);
        CHECK(back.images == f.images);
        CHECK(back.scale == f.scale);
        CHECK(same_lattice(*back.domain, *f.domain));
        CHECK(same_lattice(*back.codomain, *f.codomain));
        CHECK(map_to_json(back) == j);
    }

    json j = map_to_json(identity_map(LatticeModel::boolean(1)));
    CHECK(j["domain"]["family"] == "boolean");
    CHECK(j["images"].size() == 2);
    CHECK(j["scale"] == 1);
}

TEST_CASE("map parsing validates shape and content") {
    json good = map_to_json(identity_map(LatticeModel::boolean(1)));

    json bad = good;
    bad["images"] = json::array({json::array()});
    CHECK_THROWS_AS(map_from_json(bad), std::invalid_argument);

    bad = good;
    bad["images"].push_back(bad["images"][0]);
    CHECK_THROWS_AS(map_from_json(bad), std::invalid_argument);

    bad = good;
    bad.erase("scale");
    CHECK_THROWS_AS(map_from_json(bad), std::invalid_argument);

    bad = good;
    bad["domain"]["family"] = "mystery";
    CHECK_THROWS_AS(map_from_json(bad), std::invalid_argument);

    CHECK_THROWS_AS(map_from_json(json::array()), std::invalid_argument);
}

TEST_CASE("colorings round trip and reject bad colors") {
    Coloring chi{LatticeModel::partition(3), 2, {1, 2, 2, 1, 1}};
    json j = coloring_to_json(chi);
    CHECK(j["k"] == 2);
    Coloring back = coloring_from_json(j);
    CHECK(back.colors == chi.colors);
    CHECK(back.k == 2);
    CHECK(same_lattice(*back.lattice, *chi.lattice));

    json bad = j;
    bad["colors"][0] = 3;
    CHECK_THROWS_AS(coloring_from_json(bad), std::invalid_argument);
    bad = j;
    bad["colors"][0] = "red";
    CHECK_THROWS_AS(coloring_from_json(bad), std::invalid_argument);
    bad = j;
    bad["colors"].push_back(1);
    CHECK_THROWS_AS(coloring_from_json(bad), std::invalid_argument);
    bad = j;
    bad.erase("lattice");
    CHECK_THROWS_AS(coloring_from_json(bad), std::invalid_argument);
}

TEST_CASE("forms round trip with their invariants enforced") {
    HJForm form{3, 1, 2, {{2}}, {1, 0}};
    json j = hjform_to_json(form);
    CHECK(j == json{{"t", 3}, {"n", 1}, {"N", 2}, {"sets", {{2}}}, {"alpha", {1, 0}}});
    HJForm back = hjform_from_json(j);
    CHECK(back.sets == form.sets);
    CHECK(back.alpha == form.alpha);
    CHECK(hj_to_map(back).images == hj_to_map(form).images);

    json bad = j;
    bad["alpha"] = {1, 1};  // nonzero on the covered coordinate
    CHECK_THROWS_AS(hjform_from_json(bad), std::invalid_argument);
    bad = j;
    bad["sets"] = json::array({json::array()});
    CHECK_THROWS_AS(hjform_from_json(bad), std::invalid_argument);
    bad = j;
    bad.erase("N");
    CHECK_THROWS_AS(hjform_from_json(bad), std::invalid_argument);
}

TEST_CASE("json text is deterministic because keys are sorted") {
    auto f = partition_combine(2, 2);
    CHECK(map_to_json(f).dump() == map_to_json(f).dump());
    std::string text = map_to_json(f).dump();
    CHECK(text.find("\"codomain\"") < text.find("\"domain\""));
    CHECK(text.find("\"domain\"") < text.find("\"images\""));
    CHECK(text.find("\"images\"") < text.find("\"scale\""));
}

TEST_CASE("verification reports render their witnesses") {
    HomothetyMap broken{LatticeModel::boolean(2), LatticeModel::boolean(2), {0, 1, 1, 3}, 1};
    auto report = verify_lattice_homothety(broken);
    REQUIRE(!report.ok);
    json j = verify_report_to_json(report, broken);
    CHECK(j["ok"] == false);
    REQUIRE(!j["violations"].empty());
    CHECK(j["violations"][0].contains("condition"));
    CHECK(j["violations"][0].contains("p"));

    auto good = verify_lattice_homothety(identity_map(LatticeModel::boolean(2)));
    json ok = verify_report_to_json(good, identity_map(LatticeModel::boolean(2)));
    CHECK(ok["ok"] == true);
    CHECK(ok["violations"].empty());
}

TEST_CASE("search artifacts serialize with stable shapes") {
    auto b2 = LatticeModel::boolean(2);

    auto triples = enumerate_admissible_triples(b2, 2);
    json jt = triple_to_json(*b2, triples[0]);
    CHECK(jt.contains("S"));
    CHECK(jt.contains("p"));
    CHECK(jt.contains("p_prime"));

    Coloring constant{b2, 1, {1, 1, 1, 1}};
    auto w = find_mono_homothety(LatticeModel::boolean(1), constant, SystemId::trivial, {});
    REQUIRE(w.has_value());
    json jw = witness_to_json(*w);
    CHECK(jw["color"] == 1);
    CHECK(jw["witness"]["images"].is_array());

    auto rig = check_boolean_rigidity(1, 2, {});
    json jr = rigidity_report_to_json(rig);
    CHECK(jr["ok"] == true);
    CHECK(jr["total"] == 5);
    CHECK(jr["by_scale"]["1"] == 4);
    CHECK(jr["by_scale"]["2"] == 1);
    CHECK(jr["rejects"].empty());

    auto ax = check_system_axioms(SystemId::hj, LatticeSequence{Family::chain, 2}, 2, {});
    json ja = axioms_report_to_json(ax);
    CHECK(ja["ok"] == true);
    CHECK(ja["h2_checked"] == 20);
    CHECK(ja["member_counts"].is_array());

    auto compat = check_compatibility(chain_combine(2, 1, 1), SystemId::hj, 1, {});
    json jc = compat_report_to_json(compat);
    CHECK(jc["ok"] == true);
    CHECK(jc["c2_sections"] == 4);

    auto r = ramsey_number(LatticeSequence{Family::boolean}, SystemId::trivial, 1, 2, 4, {});
    json jram = ramsey_result_to_json(r);
    CHECK(jram["value"] == 2);
    CHECK(jram["budget_stopped_at"].is_null());
    REQUIRE(jram["rounds"].size() == 2);
    CHECK(jram["rounds"][0]["verdict"] == "fails");
    CHECK(jram["rounds"][0]["bad_coloring"]["colors"] == json::array({1, 2}));
    CHECK(jram["rounds"][1]["verdict"] == "works");

    auto lp = check_L_predicate(LatticeSequence{Family::boolean}, 2, 2, 1, 3, 1,
                                SystemId::trivial, {});
    json jl = l_predicate_result_to_json(lp, *b2);
    CHECK(jl["holds"] == false);
    CHECK(jl["certificate"]["triple"].contains("S"));
    CHECK(jl["certificate"]["coloring"]["colors"].is_array());
}

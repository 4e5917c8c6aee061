#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "lathom/embeddings.hpp"
#include "lathom/systems.hpp"

using namespace lathom;

namespace {

// all valid forms with the given shape, by direct construction
std::vector<HJForm> all_forms(int t, int n, int big_n) {
    std::vector<HJForm> out;
    std::vector<int> coords(big_n);
    for (int j = 0; j < big_n; ++j) coords[j] = j + 1;

    // choose n pairwise disjoint equal-size subsets, then every alpha vanishing
    // on their union
    std::function<void(int, int, std::vector<std::vector<int>>&)> pick_sets =
        [&](int slot, int k, std::vector<std::vector<int>>& sets) {
            if (slot == n) {
                std::vector<bool> used(big_n + 1, false);
                for (const auto& s : sets)
                    for (int j : s) used[j] = true;
                std::vector<int> free;
                for (int j = 1; j <= big_n; ++j)
                    if (!used[j]) free.push_back(j);
                // odometer over alpha values on the free coordinates
                std::vector<int> alpha(big_n, 0);
                while (true) {
                    HJForm form{t, n, big_n, sets, alpha};
                    out.push_back(form);
                    int pos = static_cast<int>(free.size()) - 1;
                    while (pos >= 0 && alpha[free[pos] - 1] == t - 1) alpha[free[pos--] - 1] = 0;
                    if (pos < 0) break;
                    ++alpha[free[pos] - 1];
                }
                return;
            }
            // k-subsets of the unused coordinates, lexicographically
            std::vector<int> avail;
            std::vector<bool> used(big_n + 1, false);
            for (const auto& s : sets)
                for (int j : s) used[j] = true;
            for (int j = 1; j <= big_n; ++j)
                if (!used[j]) avail.push_back(j);
            std::vector<int> idx(k);
            std::function<void(int, int)> comb = [&](int depth, int from) {
                if (depth == k) {
                    std::vector<int> set;
                    for (int i : idx) set.push_back(avail[i]);
                    sets.push_back(set);
                    pick_sets(slot + 1, k, sets);
                    sets.pop_back();
                    return;
                }
                for (int i = from; i <= static_cast<int>(avail.size()) - (k - depth); ++i) {
                    idx[depth] = i;
                    comb(depth + 1, i + 1);
                }
            };
            comb(0, 0);
        };

    for (int k = 1; n * k <= big_n; ++k) {
        std::vector<std::vector<int>> sets;
        pick_sets(0, k, sets);
    }
    return out;
}

bool same_form(const HJForm& a, const HJForm& b) {
    return a.t == b.t && a.domain_arity == b.domain_arity && a.codomain_arity == b.codomain_arity &&
           a.sets == b.sets && a.alpha == b.alpha;
}

} // namespace

TEST_CASE("form evaluation matches hand-computed instances") {
    SUBCASE("one slot covering both coordinates doubles the rank") {
        HJForm form{2, 1, 2, {{1, 2}}, {0, 0}};
        auto f = hj_to_map(form);
        CHECK(f.images == std::vector<ElementId>{0, 3});
        CHECK(f.scale == 2);
        CHECK(verify_lattice_homothety(f).ok);
    }
    SUBCASE("identity form gives the identity map") {
        for (auto [t, n] : {std::pair{2, 2}, {3, 2}}) {
            HJForm form;
            form.t = t;
            form.domain_arity = form.codomain_arity = n;
            for (int i = 1; i <= n; ++i) form.sets.push_back({i});
            form.alpha.assign(n, 0);
            CHECK(hj_to_map(form).images == identity_map(LatticeModel::chain(t, n)).images);
        }
    }
    SUBCASE("nonzero base point shifts the free coordinate") {
        HJForm form{3, 1, 2, {{1}}, {0, 2}};
        auto f = hj_to_map(form);
        // 0 -> (0,2), 1 -> (1,2), 2 -> (2,2) in little-endian digit order
        CHECK(f.images == std::vector<ElementId>{6, 7, 8});
        CHECK(f.scale == 1);
        CHECK(verify_lattice_homothety(f).ok);
    }
}

TEST_CASE("form invariants are enforced") {
    CHECK_THROWS_AS(hj_to_map(HJForm{2, 2, 2, {{1}, {1}}, {0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(hj_to_map(HJForm{2, 2, 3, {{1}, {2, 3}}, {0, 0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(hj_to_map(HJForm{2, 1, 2, {{1}}, {0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(hj_to_map(HJForm{2, 1, 2, {{1}}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(hj_to_map(HJForm{2, 1, 2, {{}}, {0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(hj_to_map(HJForm{2, 1, 2, {{3}}, {0, 0}}), std::invalid_argument);
}

TEST_CASE("recognition inverts evaluation on every small form") {
    long long seen = 0;
    for (int t : {2, 3})
        for (int n = 1; n <= 2; ++n)
            for (int big_n = n; big_n <= 3; ++big_n)
                for (const auto& form : all_forms(t, n, big_n)) {
                    auto f = hj_to_map(form);
                    auto r = recognize_hj(f);
                    REQUIRE(std::holds_alternative<HJForm>(r));
                    CHECK(same_form(std::get<HJForm>(r), form));
                    ++seen;
                }
    CHECK(seen > 100);  // the space is not trivial
}

TEST_CASE("recognition pins down identity and rejects non-form maps") {
    auto id = identity_map(LatticeModel::chain(3, 2));
    auto r = recognize_hj(id);
    REQUIRE(std::holds_alternative<HJForm>(r));
    CHECK(std::get<HJForm>(r).sets == std::vector<std::vector<int>>{{1}, {2}});
    CHECK(std::get<HJForm>(r).alpha == std::vector<int>{0, 0});

    // a constant map collapses the atom supports
    HomothetyMap constant{LatticeModel::chain(3, 1), LatticeModel::chain(3, 2), {0, 0, 0}, 1};
    auto bad = recognize_hj(constant);
    REQUIRE(std::holds_alternative<NotHJ>(bad));
    CHECK(std::get<NotHJ>(bad).witness_input == -1);

    HomothetyMap mismatched{LatticeModel::chain(3, 1), LatticeModel::chain(2, 2), {0, 1, 2}, 1};
    CHECK_THROWS_AS(recognize_hj(mismatched), std::invalid_argument);
    HomothetyMap nonchain{LatticeModel::partition(2), LatticeModel::partition(3), {0, 4}, 2};
    CHECK_THROWS_AS(recognize_hj(nonchain), std::invalid_argument);
}

TEST_CASE("form composition is the map composition, exhaustively at small shapes") {
    long long pairs = 0;
    for (int t : {2, 3}) {
        auto inner = all_forms(t, 1, 2);
        auto outer = all_forms(t, 2, 3);
        for (const auto& f : inner)
            for (const auto& g : outer) {
                HJForm c = compose_hj(f, g);
                auto via_forms = hj_to_map(c);
                auto via_maps = compose(hj_to_map(f), hj_to_map(g));
                CHECK(via_forms.images == via_maps.images);
                CHECK(via_forms.scale == via_maps.scale);
                CHECK(hj_scale(c) == hj_scale(f) * hj_scale(g));
                ++pairs;
            }
    }
    CHECK(pairs > 50);

    // identity absorbs
    HJForm doubling{2, 1, 2, {{1, 2}}, {0, 0}};
    HJForm id2{2, 2, 2, {{1}, {2}}, {0, 0}};
    HJForm c = compose_hj(doubling, id2);
    CHECK(c.sets == std::vector<std::vector<int>>{{1, 2}});
    CHECK(c.alpha == std::vector<int>{0, 0});

    CHECK_THROWS_AS(compose_hj(id2, doubling), std::invalid_argument);  // arity mismatch
}

TEST_CASE("membership separates the two systems") {
    auto id = identity_map(LatticeModel::chain(3, 2));
    CHECK(is_member(SystemId::trivial, id));
    CHECK(is_member(SystemId::hj, id));

    auto non = find_non_hj(3, 1, 2, {});
    REQUIRE(non.has_value());
    CHECK(verify_lattice_homothety(non->first).ok);
    CHECK(is_member(SystemId::trivial, non->first));
    CHECK_FALSE(is_member(SystemId::hj, non->first));

    // breaking the map breaks membership in both systems
    HomothetyMap broken{LatticeModel::boolean(2), LatticeModel::boolean(2), {0, 1, 1, 3}, 1};
    CHECK_FALSE(is_member(SystemId::trivial, broken));
    CHECK_FALSE(is_member(SystemId::hj, broken));

    CHECK_THROWS_AS(is_member(SystemId::hj, identity_map(LatticeModel::partition(2))),
                    std::invalid_argument);
}

TEST_CASE("system axioms hold at small bounds with pinned member counts") {
    SUBCASE("hj over two-letter chains") {
        auto rep = check_system_axioms(SystemId::hj, LatticeSequence{Family::chain, 2}, 2, {});
        CHECK(rep.ok);
        CHECK(rep.h1_ok);
        CHECK(rep.h1_failures.empty());
        CHECK(rep.h2_checked == 20);
        CHECK(rep.hj_compose_checked == 20);
        std::map<std::pair<int, int>, long long> counts;
        for (const auto& mc : rep.member_counts) counts[{mc.i, mc.j}] = mc.members;
        CHECK(counts[{1, 1}] == 1);
        CHECK(counts[{1, 2}] == 5);
        CHECK(counts[{2, 1}] == 0);  // empty member sets are legitimate
        CHECK(counts[{2, 2}] == 2);
    }
    SUBCASE("hj over three-letter chains") {
        auto rep = check_system_axioms(SystemId::hj, LatticeSequence{Family::chain, 3}, 2, {});
        CHECK(rep.ok);
        CHECK(rep.h2_checked == 26);
        std::map<std::pair<int, int>, long long> counts;
        for (const auto& mc : rep.member_counts) counts[{mc.i, mc.j}] = mc.members;
        CHECK(counts[{1, 2}] == 7);
        CHECK(counts[{2, 2}] == 2);
    }
    SUBCASE("the trivial system is closed for other families too") {
        CHECK(check_system_axioms(SystemId::trivial, LatticeSequence{Family::boolean, 2}, 2, {})
                  .ok);
        CHECK(check_system_axioms(SystemId::trivial, LatticeSequence{Family::partition, 2}, 3, {})
                  .ok);
        CHECK(check_system_axioms(SystemId::trivial, LatticeSequence{Family::division, 2}, 3, {})
                  .ok);
    }
    SUBCASE("configuration errors") {
        CHECK_THROWS_AS(
            check_system_axioms(SystemId::hj, LatticeSequence{Family::partition, 2}, 2, {}),
            std::invalid_argument);
        CHECK_THROWS_AS(
            check_system_axioms(SystemId::trivial, LatticeSequence{Family::boolean, 2}, 0, {}),
            std::invalid_argument);
    }
}

TEST_CASE("combine embeddings are compatible with the matching systems") {
    SUBCASE("two-letter chain combine under hj") {
        auto rep = check_compatibility(chain_combine(2, 1, 1), SystemId::hj, 1, {});
        CHECK(rep.ok);
        CHECK(rep.c2_ok);
        CHECK(rep.c1_ok);
        CHECK(rep.c2_sections == 4);
        REQUIRE(rep.c1_levels.size() == 1);
        CHECK(rep.c1_levels[0].candidates > 0);
        CHECK(rep.c1_levels[0].premise_passed > 0);
    }
    SUBCASE("every combine is compatible with the trivial system") {
        CHECK(check_compatibility(partition_combine(2, 2), SystemId::trivial, 2, {}).ok);
        CHECK(check_compatibility(boolean_combine(2, 2), SystemId::trivial, 2, {}).ok);
        CHECK(check_compatibility(chain_combine(3, 1, 1), SystemId::trivial, 2, {}).ok);
        CHECK(check_compatibility(division_combine(4, 9).map, SystemId::trivial, 2, {}).ok);
    }
    SUBCASE("misshapen embeddings are refused") {
        CHECK_THROWS_AS(check_compatibility(identity_map(LatticeModel::boolean(2)),
                                            SystemId::trivial, 1, {}),
                        std::invalid_argument);
        HomothetyMap broken;
        broken.domain = LatticeModel::product(LatticeModel::boolean(1), LatticeModel::boolean(1));
        broken.codomain = LatticeModel::boolean(2);
        broken.images = {0, 0, 0, 0};
        broken.scale = 1;
        CHECK_THROWS_AS(check_compatibility(broken, SystemId::trivial, 1, {}),
                        std::invalid_argument);
    }
}

TEST_CASE("boolean lattice homotheties are exactly the form maps at small sizes") {
    auto rep = check_boolean_rigidity(1, 2, {});
    CHECK(rep.ok);
    CHECK(rep.total == 5);
    CHECK(rep.rejects.empty());
    CHECK(rep.by_scale == std::map<int, long long>{{1, 4}, {2, 1}});

    auto self = check_boolean_rigidity(2, 2, {});
    CHECK(self.ok);
    CHECK(self.total == 2);
    CHECK(self.by_scale == std::map<int, long long>{{1, 2}});
}

TEST_CASE("three-letter chains separate the two systems by search") {
    auto non = find_non_hj(3, 1, 2, {});
    REQUIRE(non.has_value());
    auto& [map, why] = *non;
    CHECK(verify_lattice_homothety(map).ok);
    CHECK(std::holds_alternative<NotHJ>(recognize_hj(map)));
    CHECK_FALSE(why.reason.empty());

    CHECK_FALSE(find_non_hj(2, 1, 3, {}).has_value());
    CHECK_FALSE(find_non_hj(2, 2, 4, {}).has_value());
}

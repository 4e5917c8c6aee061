// End-to-end acceptance checks. Each criterion prints exactly one PASS/FAIL
// line and carries a wall-clock budget; the process exits 0 only if all pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lathom/driver.hpp"
#include "lathom/embeddings.hpp"

using namespace lathom;

namespace {

int failures = 0;

void run_criterion(int number, const std::string& what, double budget_seconds,
                   const std::function<void(std::string&)>& body) {
    std::string problem;
    auto start = std::chrono::steady_clock::now();
    try {
        body(problem);
    } catch (const std::exception& e) {
        problem = std::string("exception: ") + e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (problem.empty() && elapsed > budget_seconds) {
        std::ostringstream os;
        os << "took " << elapsed << "s, budget " << budget_seconds << "s";
        problem = os.str();
    }
    if (problem.empty()) {
        std::printf("PASS criterion %d: %s (%.2fs)\n", number, what.c_str(), elapsed);
    } else {
        std::printf("FAIL criterion %d: %s: %s\n", number, what.c_str(), problem.c_str());
        ++failures;
    }
    std::fflush(stdout);
}

#define NEED(cond)                                                     \
    do {                                                               \
        if (!(cond)) {                                                 \
            problem = std::string("line ") + std::to_string(__LINE__) + \
                      ": " #cond;                                      \
            return;                                                    \
        }                                                              \
    } while (0)

std::vector<LatticePtr> axiom_catalog() {
    std::vector<LatticePtr> out;
    for (int n = 1; n <= 4; ++n) out.push_back(LatticeModel::boolean(n));
    for (int t = 3; t <= 4; ++t)
        for (int n = 1; n <= 3; ++n)
            out.push_back(LatticeModel::chain(t, n));
    for (int n = 1; n <= 4; ++n) out.push_back(LatticeModel::partition(n));
    for (long long m : {12, 36, 60}) out.push_back(LatticeModel::division(m));
    out.push_back(LatticeModel::product(LatticeModel::boolean(2), LatticeModel::boolean(2)));
    return out;
}

// every lattice law plus gradedness, checked from the raw primitives
std::string exhaustive_lattice_check(const LatticePtr& lat) {
    auto n = static_cast<ElementId>(lat->size());
    auto fail = [&](const char* what, ElementId a, ElementId b, ElementId c) {
        std::ostringstream os;
        os << lat->descriptor().dump() << " " << what << " at (" << a << "," << b << "," << c
           << ")";
        return os.str();
    };
    for (ElementId a = 0; a < n; ++a) {
        if (!lat->leq(a, a)) return fail("reflexivity", a, a, a);
        if (lat->join(a, a) != a || lat->meet(a, a) != a) return fail("idempotence", a, a, a);
        if (!lat->leq(lat->bottom(), a) || !lat->leq(a, lat->top()))
            return fail("bounds", a, a, a);
    }
    for (ElementId a = 0; a < n; ++a)
        for (ElementId b = 0; b < n; ++b) {
            ElementId j = lat->join(a, b), m = lat->meet(a, b);
            if (j != lat->join(b, a) || m != lat->meet(b, a)) return fail("commutativity", a, b, 0);
            if (lat->join(a, m) != a || lat->meet(a, j) != a) return fail("absorption", a, b, 0);
            if (lat->leq(a, b) != (j == b) || lat->leq(a, b) != (m == a))
                return fail("order consistency", a, b, 0);
            if (lat->leq(a, b) && lat->leq(b, a) && a != b) return fail("antisymmetry", a, b, 0);
            if (lat->leq(a, b) && a > b) return fail("linear extension", a, b, 0);
            if (!lat->leq(a, j) || !lat->leq(b, j) || !lat->leq(m, a) || !lat->leq(m, b))
                return fail("bound laws", a, b, 0);
            if (lat->leq(a, b) && lat->rank(a) > lat->rank(b)) return fail("rank monotone", a, b, 0);
            if (lat->leq(a, b) && a != b) {
                bool covers = true;
                for (ElementId c = 0; c < n && covers; ++c)
                    if (c != a && c != b && lat->leq(a, c) && lat->leq(c, b)) covers = false;
                if (covers && lat->rank(b) != lat->rank(a) + 1)
                    return fail("graded covers", a, b, 0);
            }
        }
    for (ElementId a = 0; a < n; ++a)
        for (ElementId b = 0; b < n; ++b)
            for (ElementId c = 0; c < n; ++c) {
                if (lat->join(lat->join(a, b), c) != lat->join(a, lat->join(b, c)))
                    return fail("join associativity", a, b, c);
                if (lat->meet(lat->meet(a, b), c) != lat->meet(a, lat->meet(b, c)))
                    return fail("meet associativity", a, b, c);
                if (lat->leq(a, b) && lat->leq(b, c) && !lat->leq(a, c))
                    return fail("transitivity", a, b, c);
                if (lat->leq(a, c) && lat->leq(b, c) && !lat->leq(lat->join(a, b), c))
                    return fail("least upper bound", a, b, c);
                if (lat->leq(c, a) && lat->leq(c, b) && !lat->leq(c, lat->meet(a, b)))
                    return fail("greatest lower bound", a, b, c);
            }
    return {};
}

// independent odometer enumeration straight from the definition
long long brute_count(const LatticePtr& p, const LatticePtr& q,
                      std::set<std::pair<std::vector<ElementId>, int>>* sink) {
    auto np = static_cast<ElementId>(p->size());
    auto nq = static_cast<ElementId>(q->size());
    int span_q = q->max_rank() - q->min_rank();
    long long found = 0;
    std::vector<ElementId> img(np, 0);
    for (int d = 1; d <= std::max(span_q, 1); ++d) {
        while (true) {
            bool ok = true;
            for (ElementId a = 0; a < np && ok; ++a)
                for (ElementId b = 0; b < np && ok; ++b) {
                    if (p->leq(a, b) != q->leq(img[a], img[b])) ok = false;
                    else if (q->rank(img[b]) - q->rank(img[a]) !=
                             d * (p->rank(b) - p->rank(a)))
                        ok = false;
                    else if (q->join(img[a], img[b]) != img[p->join(a, b)]) ok = false;
                    else if (q->meet(img[a], img[b]) != img[p->meet(a, b)]) ok = false;
                }
            if (ok) {
                ++found;
                if (sink) sink->insert({img, d});
            }
            ElementId pos = np;
            while (pos > 0 && img[pos - 1] == nq - 1) img[--pos] = 0;
            if (pos == 0) break;
            ++img[pos - 1];
        }
        if (span_q == 0) break;  // only the canonical scale is meaningful
    }
    return found;
}

} // namespace

int main() {
    run_criterion(1, "lattice families satisfy every axiom exhaustively", 60.0,
                  [](std::string& problem) {
                      int checked = 0;
                      for (const auto& lat : axiom_catalog()) {
                          auto err = exhaustive_lattice_check(lat);
                          if (!err.empty()) {
                              problem = err;
                              return;
                          }
                          ++checked;
                      }
                      NEED(checked == 18);
                  });

    run_criterion(2, "combine embeddings verify as scale-one lattice homotheties", 5.0,
                  [](std::string& problem) {
                      std::vector<HomothetyMap> embeds = {
                          partition_combine(2, 2), boolean_combine(2, 2), chain_combine(3, 2, 1),
                          division_combine(4, 9).map};
                      for (const auto& f : embeds) {
                          NEED(f.scale == 1);
                          NEED(verify_lattice_homothety(f).ok);
                          std::set<ElementId> distinct(f.images.begin(), f.images.end());
                          NEED(distinct.size() == f.images.size());
                          NEED(f.images[f.domain->size() - 1] == f.codomain->top());
                      }
                  });

    run_criterion(3, "enumeration matches brute force with frozen counts", 10.0,
                  [](std::string& problem) {
                      struct Shape {
                          LatticePtr p, q;
                          long long expect;
                      };
                      std::vector<Shape> shapes = {
                          {LatticeModel::boolean(1), LatticeModel::boolean(2), 5},
                          {LatticeModel::boolean(1), LatticeModel::boolean(3), 19},
                          {LatticeModel::chain(3, 1), LatticeModel::chain(3, 2), 17},
                      };
                      for (const auto& s : shapes) {
                          std::set<std::pair<std::vector<ElementId>, int>> oracle, engine;
                          long long count = brute_count(s.p, s.q, &oracle);
                          NEED(count == s.expect);
                          for (const auto& f : enumerate_lattice_homotheties(s.p, s.q))
                              engine.insert({f.images, f.scale});
                          NEED(oracle == engine);
                      }
                  });

    run_criterion(4, "composition system axioms hold at small bounds", 60.0,
                  [](std::string& problem) {
                      auto bools = check_system_axioms(
                          SystemId::trivial, LatticeSequence{Family::boolean}, 3, {});
                      NEED(bools.ok);
                      auto hj2 = check_system_axioms(SystemId::hj,
                                                     LatticeSequence{Family::chain, 2}, 3, {});
                      NEED(hj2.ok);
                      NEED(hj2.h2_checked == 345);
                      NEED(hj2.hj_compose_checked == 345);
                      auto hj3 = check_system_axioms(SystemId::hj,
                                                     LatticeSequence{Family::chain, 3}, 2, {});
                      NEED(hj3.ok);
                      NEED(hj3.h2_checked == 26);
                      NEED(hj3.violations.empty());
                  });

    run_criterion(5, "boolean lattice homotheties are all of the special form", 120.0,
                  [](std::string& problem) {
                      std::map<std::pair<int, int>, long long> expect = {
                          {{1, 1}, 1},  {{1, 2}, 5},  {{1, 3}, 19}, {{1, 4}, 65},
                          {{1, 5}, 211}, {{2, 2}, 2},  {{2, 3}, 12}, {{2, 4}, 54},
                          {{2, 5}, 220}, {{3, 3}, 6},  {{3, 4}, 48}, {{3, 5}, 240},
                      };
                      for (int n = 1; n <= 3; ++n)
                          for (int big_n = n; big_n <= 5; ++big_n) {
                              auto rep = check_boolean_rigidity(n, big_n, {});
                              NEED(rep.ok);
                              NEED(rep.rejects.empty());
                              NEED(rep.total == expect[std::make_pair(n, big_n)]);
                          }
                  });

    run_criterion(6, "three-letter chains admit a map outside the special form", 60.0,
                  [](std::string& problem) {
                      auto non = find_non_hj(3, 2, 4, {});
                      NEED(non.has_value());
                      NEED(verify_lattice_homothety(non->first).ok);
                      NEED(std::holds_alternative<NotHJ>(recognize_hj(non->first)));
                      NEED(!non->second.reason.empty());
                  });

    run_criterion(7, "combine embeddings are compatible with their systems", 120.0,
                  [](std::string& problem) {
                      NEED(check_compatibility(chain_combine(2, 1, 1), SystemId::hj, 2, {}).ok);
                      NEED(check_compatibility(chain_combine(2, 2, 2), SystemId::hj, 2, {}).ok);
                      NEED(check_compatibility(chain_combine(3, 1, 1), SystemId::hj, 2, {}).ok);
                      NEED(check_compatibility(partition_combine(2, 2), SystemId::trivial, 2, {})
                               .ok);
                      NEED(check_compatibility(boolean_combine(2, 2), SystemId::trivial, 2, {})
                               .ok);
                      NEED(check_compatibility(chain_combine(3, 1, 1), SystemId::trivial, 2, {})
                               .ok);
                      NEED(check_compatibility(division_combine(4, 9).map, SystemId::trivial, 2,
                                               {})
                               .ok);
                  });

    run_criterion(8, "small Ramsey-type numbers match and certificates replay", 120.0,
                  [](std::string& problem) {
                      auto r1 = ramsey_number(LatticeSequence{Family::boolean},
                                              SystemId::trivial, 1, 2, 4, {});
                      NEED(r1.value == 2);
                      auto r2 = ramsey_number(LatticeSequence{Family::partition},
                                              SystemId::trivial, 2, 2, 4, {});
                      NEED(r2.value == 3);
                      auto r3 = ramsey_number(LatticeSequence{Family::boolean},
                                              SystemId::trivial, 1, 3, 4, {});
                      NEED(r3.value == 3);
                      auto r4 = ramsey_number(LatticeSequence{Family::chain, 3}, SystemId::hj, 1,
                                              2, 2, {});
                      NEED(!r4.value.has_value());
                      NEED(!r4.budget_stopped_at.has_value());
                      NEED(r4.rounds.size() == 2);
                      // replay every lower-bound certificate: both search
                      // interfaces must agree no monochromatic member exists
                      auto replays = [](const LatticeSequence& seq, int n, SystemId sys,
                                        const RamseyResult& result) {
                          for (const auto& round : result.rounds) {
                              if (round.works) continue;
                              if (!round.bad_coloring || round.failing_index < 1) return false;
                              SearchBudget budget(100000000);
                              if (exists_mono_homothety(seq.at(n), *round.bad_coloring, sys, {},
                                                        budget))
                                  return false;
                              if (find_mono_homothety(seq.at(n), *round.bad_coloring, sys, {})
                                      .has_value())
                                  return false;
                          }
                          return true;
                      };
                      NEED(replays(LatticeSequence{Family::boolean}, 1, SystemId::trivial, r1));
                      NEED(replays(LatticeSequence{Family::partition}, 2, SystemId::trivial, r2));
                      NEED(replays(LatticeSequence{Family::boolean}, 1, SystemId::trivial, r3));
                      NEED(replays(LatticeSequence{Family::chain, 3}, 1, SystemId::hj, r4));
                  });

    run_criterion(9, "random coloring searches agree with brute-force replay", 300.0,
                  [](std::string& problem) {
                      struct Config {
                          LatticeSequence seq;
                          int n, big_n, k;
                          SystemId system;
                      };
                      std::vector<Config> configs = {
                          {LatticeSequence{Family::boolean}, 1, 2, 2, SystemId::trivial},
                          {LatticeSequence{Family::boolean}, 1, 2, 3, SystemId::trivial},
                          {LatticeSequence{Family::partition}, 2, 3, 2, SystemId::trivial},
                          {LatticeSequence{Family::chain, 3}, 1, 2, 2, SystemId::hj},
                          {LatticeSequence{Family::chain, 4}, 1, 1, 4, SystemId::trivial},
                      };
                      std::mt19937 rng(424242);
                      long long nones = 0, witnesses = 0;
                      for (const auto& cfg : configs) {
                          auto domain = cfg.seq.at(cfg.n);
                          auto codomain = cfg.seq.at(cfg.big_n);
                          // brute-force member list, fixed per config
                          std::vector<HomothetyMap> members;
                          for (const auto& f : enumerate_lattice_homotheties(domain, codomain))
                              if (is_member(cfg.system, f)) members.push_back(f);
                          std::uniform_int_distribution<int> pick(1, cfg.k);
                          for (int trial = 0; trial < 200; ++trial) {
                              Coloring chi{codomain, cfg.k, {}};
                              chi.colors.resize(codomain->size());
                              for (auto& c : chi.colors) c = pick(rng);
                              auto w = find_mono_homothety(domain, chi, cfg.system, {});
                              bool brute = false;
                              for (const auto& f : members) {
                                  bool mono = true;
                                  for (ElementId x : f.images)
                                      if (chi.colors[x] != chi.colors[f.images[0]]) mono = false;
                                  if (mono) brute = true;
                              }
                              NEED(w.has_value() == brute);
                              if (!w) {
                                  ++nones;
                                  continue;
                              }
                              ++witnesses;
                              NEED(is_member(cfg.system, w->map));
                              NEED(verify_lattice_homothety(w->map).ok);
                              for (ElementId x : w->map.images)
                                  NEED(chi.colors[x] == w->color);
                          }
                      }
                      NEED(nones >= 100);
                      NEED(witnesses >= 100);
                  });

    run_criterion(10, "parallel searches reproduce single-threaded bytes", 300.0,
                   [](std::string& problem) {
                       auto desc_b1 = LatticeModel::boolean(1)->descriptor();
                       auto desc_b2 = LatticeModel::boolean(2)->descriptor();
                       auto desc_b3 = LatticeModel::boolean(3)->descriptor();
                       auto desc_c1 = LatticeModel::chain(3, 1)->descriptor();
                       auto desc_c2 = LatticeModel::chain(3, 2)->descriptor();
                       for (int round = 0; round < 2; ++round) {
                           SearchOptions one, eight;
                           one.workers = 1;
                           eight.workers = 8;
                           RamseyOptions rone, reight;
                           rone.search = one;
                           reight.search = eight;
                           std::vector<std::pair<std::string, std::string>> dumps = {
                               {driver::hom_enumerate(desc_b1, desc_b2, {}, one).dump(),
                                driver::hom_enumerate(desc_b1, desc_b2, {}, eight).dump()},
                               {driver::hom_enumerate(desc_b1, desc_b3, {}, one).dump(),
                                driver::hom_enumerate(desc_b1, desc_b3, {}, eight).dump()},
                               {driver::hom_enumerate(desc_c1, desc_c2, {}, one).dump(),
                                driver::hom_enumerate(desc_c1, desc_c2, {}, eight).dump()},
                               {driver::system_rigidity(2, 4, one).dump(),
                                driver::system_rigidity(2, 4, eight).dump()},
                               {driver::ramsey("boolean", 2, "trivial", 1, 2, 4, rone).dump(),
                                driver::ramsey("boolean", 2, "trivial", 1, 2, 4, reight).dump()},
                               {driver::ramsey("chain", 3, "hj", 1, 2, 2, rone).dump(),
                                driver::ramsey("chain", 3, "hj", 1, 2, 2, reight).dump()},
                           };
                           for (std::size_t i = 0; i < dumps.size(); ++i)
                               if (dumps[i].first != dumps[i].second) {
                                   problem = "dump " + std::to_string(i) +
                                             " differs between 1 and 8 workers";
                                   return;
                               }
                       }
                   });

    if (failures == 0) std::printf("acceptance: all 10 criteria passed\n");
    else std::printf("acceptance: %d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}

#include "lathom/ramsey.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <future>
#include <numeric>
#include <sstream>

#include "lathom/errors.hpp"

namespace lathom {

void validate_coloring(const Coloring& chi) {
    if (!chi.lattice) throw std::invalid_argument("coloring needs a lattice");
    if (chi.k < 1) throw std::invalid_argument("coloring needs k >= 1");
    if (static_cast<ElementId>(chi.colors.size()) != chi.lattice->size())
        throw std::invalid_argument("coloring length does not match the lattice size");
    for (int c : chi.colors)
        if (c < 1 || c > chi.k) throw std::invalid_argument("color value outside 1..k");
}

Coloring canonical_coloring(const Coloring& chi, std::vector<int>* perm) {
    validate_coloring(chi);
    std::vector<int> relabel(chi.k + 1, 0);
    int next = 0;
    for (int c : chi.colors)
        if (relabel[c] == 0) relabel[c] = ++next;
    for (int c = 1; c <= chi.k; ++c)
        if (relabel[c] == 0) relabel[c] = ++next;

    Coloring out;
    out.lattice = chi.lattice;
    out.k = chi.k;
    out.colors.reserve(chi.colors.size());
    for (int c : chi.colors) out.colors.push_back(relabel[c]);
    if (perm) *perm = relabel;
    return out;
}

void validate_triple(const LatticeModel& lattice, const AdmissibleTriple& triple) {
    if (triple.S.size() < 2) throw std::invalid_argument("admissible triple needs |S| >= 2");
    for (ElementId x : triple.S)
        if (x < 0 || x >= lattice.size()) throw std::invalid_argument("triple element out of range");
    if (!std::is_sorted(triple.S.begin(), triple.S.end()) ||
        std::adjacent_find(triple.S.begin(), triple.S.end()) != triple.S.end())
        throw std::invalid_argument("triple set must be sorted and duplicate-free");
    if (!std::binary_search(triple.S.begin(), triple.S.end(), triple.p) ||
        !std::binary_search(triple.S.begin(), triple.S.end(), triple.p_prime))
        throw std::invalid_argument("triple anchors must lie in S");
    if (triple.p == triple.p_prime) throw std::invalid_argument("triple anchors must differ");
    for (ElementId x : triple.S)
        if (!lattice.leq(triple.p, x))
            throw std::invalid_argument("triple anchor p must be the minimum of S");
}

std::vector<AdmissibleTriple> enumerate_admissible_triples(const LatticePtr& lattice, int s) {
    if (!lattice) throw std::invalid_argument("triple enumeration needs a lattice");
    if (s < 2) throw std::invalid_argument("triple enumeration needs s >= 2");
    std::vector<AdmissibleTriple> out;
    const ElementId n = lattice->size();
    if (s > n) return out;

    std::vector<ElementId> pick(s);
    std::function<void(int, ElementId)> rec = [&](int depth, ElementId from) {
        if (depth == s) {
            ElementId minimum = -1;
            for (ElementId m : pick) {
                bool below_all = true;
                for (ElementId x : pick)
                    if (!lattice->leq(m, x)) {
                        below_all = false;
                        break;
                    }
                if (below_all) {
                    minimum = m;
                    break;
                }
            }
            if (minimum < 0) return;
            for (ElementId x : pick)
                if (x != minimum) out.push_back({pick, minimum, x});
            return;
        }
        for (ElementId v = from; v <= n - (s - depth); ++v) {
            pick[depth] = v;
            rec(depth + 1, v + 1);
        }
    };
    rec(0, 0);
    return out;
}

bool check_anchored(const HomothetyMap& f, const AdmissibleTriple& triple, ElementId q,
                    ElementId q_prime, const Coloring& chi, SystemId system) {
    if (!f.domain || !f.codomain) throw std::invalid_argument("anchored check needs a complete map");
    validate_triple(*f.domain, triple);
    validate_coloring(chi);
    if (!same_lattice(*chi.lattice, *f.codomain))
        throw std::invalid_argument("coloring lattice must match the map codomain");
    if (q < 0 || q >= f.codomain->size() || q_prime < 0 || q_prime >= f.codomain->size())
        throw std::invalid_argument("anchor images out of range");
    if (q == q_prime || !f.codomain->leq(q, q_prime))
        throw std::invalid_argument("anchored check needs q < q'");

    if (!is_member(system, f)) return false;
    if (f.images[triple.p] != q || f.images[triple.p_prime] != q_prime) return false;
    const int base = chi.colors[q];
    for (ElementId x : triple.S) {
        ElementId fx = f.images[x];
        if (fx == q_prime) continue;
        if (chi.colors[fx] != base) return false;
    }
    return true;
}

std::optional<MonoWitness> find_mono_homothety(const LatticePtr& domain, const Coloring& chi,
                                               SystemId system, const SearchOptions& options) {
    if (!domain) throw std::invalid_argument("witness search needs a domain");
    validate_coloring(chi);
    SearchBudget budget(options.node_budget);
    std::optional<MonoWitness> best;
    for (int c = 1; c <= chi.k; ++c) {
        SearchConstraints cons;
        cons.admit = [&chi, c](ElementId, ElementId cand) { return chi.colors[cand] == c; };
        for_each_lattice_homothety(domain, chi.lattice, options, budget, cons,
                                   [&](HomothetyMap&& f) {
                                       if (system != SystemId::trivial && !is_member(system, f))
                                           return true;
                                       if (!best || map_less(f, best->map))
                                           best = MonoWitness{std::move(f), c};
                                       return true;
                                   });
    }
    return best;
}

bool exists_mono_homothety(const LatticePtr& domain, const Coloring& chi, SystemId system,
                           const SearchOptions& options, SearchBudget& budget) {
    if (!domain) throw std::invalid_argument("witness search needs a domain");
    validate_coloring(chi);
    bool found = false;
    for (int c = 1; c <= chi.k && !found; ++c) {
        SearchConstraints cons;
        cons.admit = [&chi, c](ElementId, ElementId cand) { return chi.colors[cand] == c; };
        for_each_lattice_homothety(domain, chi.lattice, options, budget, cons,
                                   [&](HomothetyMap&& f) {
                                       if (system != SystemId::trivial && !is_member(system, f))
                                           return true;
                                       found = true;
                                       return false;
                                   });
    }
    return found;
}

CanonicalColoringGen::CanonicalColoringGen(LatticePtr lattice, int k)
    : lattice_(std::move(lattice)), k_(k) {
    if (!lattice_) throw std::invalid_argument("coloring generator needs a lattice");
    if (k_ < 1) throw std::invalid_argument("coloring generator needs k >= 1");
    cur_.assign(lattice_->size(), 1);
}

bool CanonicalColoringGen::next(Coloring& out) {
    if (done_) return false;
    if (fresh_) {
        fresh_ = false;
    } else {
        // prefix_max[i] = max of cur_[0..i-1]
        const int n = static_cast<int>(cur_.size());
        std::vector<int> prefix_max(n, 0);
        for (int i = 1; i < n; ++i) prefix_max[i] = std::max(prefix_max[i - 1], cur_[i - 1]);
        int i = n - 1;
        for (; i >= 1; --i)
            if (cur_[i] < std::min(k_, prefix_max[i] + 1)) break;
        if (i < 1) {
            done_ = true;
            return false;
        }
        ++cur_[i];
        std::fill(cur_.begin() + i + 1, cur_.end(), 1);
    }
    ++yielded_;
    out.lattice = lattice_;
    out.k = k_;
    out.colors = cur_;
    return true;
}

long long count_canonical_colorings(std::size_t size, int k, long long cap) {
    if (size == 0 || k < 1) return 0;
    const __int128 lid = static_cast<__int128>(cap) + 1;
    const int blocks = static_cast<int>(std::min<std::size_t>(size, static_cast<std::size_t>(k)));
    // Stirling numbers of the second kind, saturating at cap + 1.
    std::vector<__int128> s(blocks + 1, 0);
    s[0] = 1;
    for (std::size_t step = 1; step <= size; ++step) {
        for (int j = blocks; j >= 1; --j) {
            __int128 v = static_cast<__int128>(j) * s[j] + s[j - 1];
            s[j] = v > lid ? lid : v;
        }
        s[0] = 0;  // no partition of a nonempty set into zero blocks
    }
    __int128 total = 0;
    for (int j = 1; j <= blocks; ++j) {
        total += s[j];
        if (total > lid) total = lid;
    }
    return static_cast<long long>(total);
}

std::vector<std::vector<ElementId>> coordinate_automorphisms(const LatticeModel& lattice) {
    if (lattice.family() != Family::boolean && lattice.family() != Family::chain)
        throw std::invalid_argument(
            "automorphism reduction is only available for boolean and chain lattices");
    const int n = lattice.arity();
    const int t = lattice.alphabet();
    if (n > 8) throw std::invalid_argument("automorphism reduction caps arity at 8");

    std::vector<std::int64_t> pow(n, 1);
    for (int i = 1; i < n; ++i) pow[i] = pow[i - 1] * t;

    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::vector<std::vector<ElementId>> out;
    do {
        std::vector<ElementId> map(lattice.size());
        for (ElementId a = 0; a < lattice.size(); ++a) {
            std::int64_t rest = a, img = 0;
            for (int i = 0; i < n; ++i) {
                img += (rest % t) * pow[sigma[i]];
                rest /= t;
            }
            map[a] = static_cast<ElementId>(img);
        }
        out.push_back(std::move(map));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

namespace {

bool orbit_minimal(const Coloring& chi, const std::vector<std::vector<ElementId>>& autos) {
    Coloring permuted;
    permuted.lattice = chi.lattice;
    permuted.k = chi.k;
    permuted.colors.resize(chi.colors.size());
    for (std::size_t a = 1; a < autos.size(); ++a) {
        const auto& sigma = autos[a];
        for (std::size_t x = 0; x < sigma.size(); ++x)
            permuted.colors[x] = chi.colors[sigma[x]];
        if (canonical_coloring(permuted).colors < chi.colors) return false;
    }
    return true;
}

constexpr long long kColoringBlock = 2048;

} // namespace

LPredicateResult check_L_predicate(const LatticeSequence& sequence, int n, int s, int k, int ell,
                                   int big_n, SystemId system, const RamseyOptions& options) {
    if (s < 2 || n < s) throw std::invalid_argument("predicate needs n >= s >= 2");
    if (ell < 2) throw std::invalid_argument("predicate needs ell >= 2");
    if (k < 1) throw std::invalid_argument("predicate needs k >= 1");
    LatticePtr dom = sequence.at(n);
    LatticePtr cod = sequence.at(big_n);

    auto triples = enumerate_admissible_triples(dom, s);
    LPredicateResult res;
    res.triples = static_cast<long long>(triples.size());
    res.colorings_total = count_canonical_colorings(cod->size(), k, options.max_colorings);
    if (res.colorings_total > options.max_colorings)
        throw size_limit_error("canonical coloring space exceeds the configured cap");
    const long long grand_total = res.triples * res.colorings_total;

    SearchBudget budget(options.search.node_budget);
    const ElementId nn = cod->size();
    std::vector<bool> in_s(dom->size(), false);

    try {
        for (const auto& triple : triples) {
            std::fill(in_s.begin(), in_s.end(), false);
            for (ElementId x : triple.S) in_s[x] = true;

            CanonicalColoringGen gen(cod, k);
            Coloring chi;
            while (gen.next(chi)) {
                std::vector<std::uint8_t> memo(static_cast<std::size_t>(nn) * nn, 255);
                auto feasible = [&](ElementId q, ElementId q2) -> bool {
                    std::uint8_t& slot = memo[static_cast<std::size_t>(q) * nn + q2];
                    if (slot != 255) return slot != 0;
                    SearchConstraints cons;
                    cons.pinned.assign(dom->size(), std::nullopt);
                    cons.pinned[triple.p] = q;
                    cons.pinned[triple.p_prime] = q2;
                    const int base = chi.colors[q];
                    cons.admit = [&, q2, base](ElementId x, ElementId cand) {
                        if (!in_s[x] || x == triple.p) return true;
                        return cand == q2 || chi.colors[cand] == base;
                    };
                    bool found = false;
                    for_each_lattice_homothety(dom, cod, options.search, budget, cons,
                                               [&](HomothetyMap&& f) {
                                                   if (system != SystemId::trivial &&
                                                       !is_member(system, f))
                                                       return true;
                                                   found = true;
                                                   return false;
                                               });
                    slot = found ? 1 : 0;
                    return found;
                };

                std::vector<ElementId> chain;
                std::function<bool()> extend = [&]() -> bool {
                    if (static_cast<int>(chain.size()) == ell) return true;
                    ElementId from = chain.empty() ? 0 : chain.back() + 1;
                    for (ElementId c = from; c < nn; ++c) {
                        if (!chain.empty() && (c == chain.back() || !cod->leq(chain.back(), c)))
                            continue;
                        bool ok = true;
                        for (ElementId prev : chain)
                            if (!feasible(prev, c)) {
                                ok = false;
                                break;
                            }
                        if (!ok) continue;
                        chain.push_back(c);
                        if (extend()) return true;
                        chain.pop_back();
                    }
                    return false;
                };

                if (!extend()) {
                    res.holds = false;
                    res.certificate = LPredicateResult::Certificate{triple, chi};
                    return res;
                }
                ++res.pairs_checked;
            }
        }
    } catch (const budget_error& e) {
        throw budget_error(e.what(), res.pairs_checked, grand_total);
    }
    return res;
}

RamseyResult ramsey_number(const LatticeSequence& sequence, SystemId system, int n, int k,
                           int n_max, const RamseyOptions& options) {
    if (n < 1) throw std::invalid_argument("ramsey search needs n >= 1");
    if (k < 1) throw std::invalid_argument("ramsey search needs k >= 1");
    if (n_max < n) throw std::invalid_argument("ramsey search needs n_max >= n");

    RamseyResult res;
    LatticePtr dom = sequence.at(n);
    const int workers = std::max(1, options.search.workers);

    for (int big_n = n; big_n <= n_max; ++big_n) {
        LatticePtr cod = sequence.at(big_n);
        long long cnt = count_canonical_colorings(cod->size(), k, options.max_colorings);
        if (cnt > options.max_colorings)
            throw size_limit_error("canonical coloring space exceeds the configured cap");
        std::vector<std::vector<ElementId>> autos;
        if (options.automorphism_reduction) autos = coordinate_automorphisms(*cod);

        CanonicalColoringGen gen(cod, k);
        RamseyRound round;
        round.big_n = big_n;
        bool failed = false, budget_hit = false;

        Coloring next_chi;
        bool exhausted = false;
        while (!failed && !budget_hit && !exhausted) {
            std::vector<Coloring> block;
            while (static_cast<long long>(block.size()) < kColoringBlock) {
                if (!gen.next(next_chi)) {
                    exhausted = true;
                    break;
                }
                if (options.automorphism_reduction && !orbit_minimal(next_chi, autos)) continue;
                block.push_back(next_chi);
            }
            if (block.empty()) break;

            // Verdicts must not depend on worker count: each coloring gets a
            // fresh budget and the block is scanned in generation order.
            std::vector<int> verdict(block.size(), 0);
            std::vector<std::exception_ptr> errors(block.size());
            auto run = [&](std::size_t w) {
                for (std::size_t i = w; i < block.size(); i += workers) {
                    SearchBudget budget(options.search.node_budget);
                    try {
                        verdict[i] = exists_mono_homothety(dom, block[i], system, options.search,
                                                           budget)
                                         ? 0
                                         : 1;
                    } catch (const budget_error&) {
                        verdict[i] = 2;
                    } catch (...) {
                        errors[i] = std::current_exception();
                    }
                }
            };
            if (workers == 1 || block.size() == 1) {
                run(0);
            } else {
                std::vector<std::future<void>> futs;
                futs.reserve(workers);
                for (int w = 0; w < workers; ++w)
                    futs.push_back(std::async(std::launch::async, run, static_cast<std::size_t>(w)));
                for (auto& f : futs) f.wait();
            }
            for (std::size_t i = 0; i < block.size(); ++i)
                if (errors[i]) std::rethrow_exception(errors[i]);

            for (std::size_t i = 0; i < block.size(); ++i) {
                ++round.colorings_total;
                if (verdict[i] == 1) {
                    round.failing_index = round.colorings_total;
                    round.bad_coloring = block[i];
                    failed = true;
                    break;
                }
                if (verdict[i] == 2) {
                    budget_hit = true;
                    break;
                }
            }
        }

        round.works = !failed && !budget_hit;
        res.rounds.push_back(std::move(round));
        if (budget_hit) {
            res.budget_stopped_at = big_n;
            break;
        }
        if (res.rounds.back().works) {
            res.value = big_n;
            break;
        }
    }
    return res;
}

} // namespace lathom

#include "lathom/homothety.hpp"

#include <algorithm>
#include <future>
#include <numeric>

namespace lathom {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void check_shape(const HomothetyMap& f) {
    require(f.domain && f.codomain, "homothety needs a domain and a codomain");
    require(static_cast<int>(f.images.size()) == f.domain->size(),
            "images array length " + std::to_string(f.images.size()) +
                " does not match domain size " + std::to_string(f.domain->size()));
    for (ElementId q : f.images)
        if (q < 0 || q >= f.codomain->size())
            throw std::out_of_range("image index " + std::to_string(q) + " outside codomain");
}

} // namespace

VerifyReport verify_homothety(const HomothetyMap& f) {
    check_shape(f);
    VerifyReport rep;
    const LatticeModel& P = *f.domain;
    const LatticeModel& Q = *f.codomain;
    rep.scale_underdetermined = P.rank_span() == 0;

    if (f.scale < 1) {
        rep.ok = false;
        rep.violations.push_back(
            {"scale", -1, -1, "scale factor must be a positive integer, got " + std::to_string(f.scale)});
    }

    bool emb_found = false, rank_found = false;
    for (ElementId p = 0; p < P.size() && !(emb_found && rank_found); ++p) {
        for (ElementId p2 = 0; p2 < P.size(); ++p2) {
            if (p == p2) continue;
            if (!emb_found && P.leq(p, p2) != Q.leq(f.images[p], f.images[p2])) {
                emb_found = true;
                rep.violations.push_back({"order-embedding", p, p2,
                                          P.leq(p, p2) ? "comparable pair with incomparable images"
                                                       : "incomparable pair with comparable images"});
            }
            if (!rank_found && f.scale >= 1) {
                long long got = Q.rank(f.images[p]) - Q.rank(f.images[p2]);
                long long want = static_cast<long long>(f.scale) * (P.rank(p) - P.rank(p2));
                if (got != want) {
                    rank_found = true;
                    rep.violations.push_back({"rank-affinity", p, p2,
                                              "image rank gap " + std::to_string(got) + ", expected " +
                                                  std::to_string(want) + " at scale " +
                                                  std::to_string(f.scale)});
                }
            }
            if (emb_found && rank_found) break;
        }
    }
    rep.ok = rep.violations.empty();
    return rep;
}

VerifyReport verify_lattice_homothety(const HomothetyMap& f) {
    VerifyReport rep = verify_homothety(f);
    if (!rep.ok) return rep;  // join/meet phase is not reached

    const LatticeModel& P = *f.domain;
    const LatticeModel& Q = *f.codomain;
    bool join_found = false, meet_found = false;
    for (ElementId p = 0; p < P.size() && !(join_found && meet_found); ++p) {
        for (ElementId p2 = p + 1; p2 < P.size(); ++p2) {
            if (!join_found && f.images[P.join(p, p2)] != Q.join(f.images[p], f.images[p2])) {
                join_found = true;
                rep.violations.push_back({"join", p, p2, "f(p v p') != f(p) v f(p')"});
            }
            if (!meet_found && f.images[P.meet(p, p2)] != Q.meet(f.images[p], f.images[p2])) {
                meet_found = true;
                rep.violations.push_back({"meet", p, p2, "f(p ^ p') != f(p) ^ f(p')"});
            }
            if (join_found && meet_found) break;
        }
    }
    rep.ok = rep.violations.empty();
    return rep;
}

HomothetyMap identity_map(LatticePtr lattice) {
    require(static_cast<bool>(lattice), "identity_map needs a lattice");
    HomothetyMap f;
    f.domain = lattice;
    f.codomain = std::move(lattice);
    f.images.resize(f.domain->size());
    std::iota(f.images.begin(), f.images.end(), 0);
    f.scale = 1;
    return f;
}

HomothetyMap compose(const HomothetyMap& f, const HomothetyMap& g) {
    check_shape(f);
    check_shape(g);
    require(same_lattice(*f.codomain, *g.domain),
            "compose: codomain of the first map must equal domain of the second");
    HomothetyMap h;
    h.domain = f.domain;
    h.codomain = g.codomain;
    h.images.resize(f.images.size());
    for (std::size_t p = 0; p < f.images.size(); ++p)
        h.images[p] = g.images[f.images[p]];
    h.scale = f.scale * g.scale;
    return h;
}

HomothetyMap pair_product(const HomothetyMap& f1, const HomothetyMap& f2) {
    check_shape(f1);
    check_shape(f2);
    require(same_lattice(*f1.domain, *f2.domain), "pair_product: maps must share a domain");
    HomothetyMap h;
    h.domain = f1.domain;
    h.codomain = LatticeModel::product(f1.codomain, f2.codomain);
    int s2 = f2.codomain->size();
    h.images.resize(f1.images.size());
    for (std::size_t p = 0; p < f1.images.size(); ++p)
        h.images[p] = f1.images[p] * s2 + f2.images[p];
    h.scale = f1.scale + f2.scale;
    return h;
}

HomothetyMap section_fixing_second(const HomothetyMap& embed, ElementId fixed_second) {
    check_shape(embed);
    require(embed.domain->family() == Family::product, "sections need a product domain");
    const LatticePtr& a = embed.domain->first();
    const LatticePtr& b = embed.domain->second();
    if (fixed_second < 0 || fixed_second >= b->size())
        throw std::out_of_range("fixed element outside the second factor");
    HomothetyMap f;
    f.domain = a;
    f.codomain = embed.codomain;
    f.images.resize(a->size());
    for (ElementId x = 0; x < a->size(); ++x)
        f.images[x] = embed.images[x * b->size() + fixed_second];
    f.scale = embed.scale;
    return f;
}

HomothetyMap section_fixing_first(const HomothetyMap& embed, ElementId fixed_first) {
    check_shape(embed);
    require(embed.domain->family() == Family::product, "sections need a product domain");
    const LatticePtr& a = embed.domain->first();
    const LatticePtr& b = embed.domain->second();
    if (fixed_first < 0 || fixed_first >= a->size())
        throw std::out_of_range("fixed element outside the first factor");
    HomothetyMap f;
    f.domain = b;
    f.codomain = embed.codomain;
    f.images.resize(b->size());
    for (ElementId y = 0; y < b->size(); ++y)
        f.images[y] = embed.images[fixed_first * b->size() + y];
    f.scale = embed.scale;
    return f;
}

std::optional<int> infer_scale(const LatticeModel& domain, const LatticeModel& codomain,
                               const std::vector<ElementId>& images) {
    if (static_cast<int>(images.size()) != domain.size()) return std::nullopt;
    int span = domain.rank_span();
    if (span == 0) return 1;
    int delta = codomain.rank(images[domain.top()]) - codomain.rank(images[domain.bottom()]);
    if (delta < span || delta % span != 0) return std::nullopt;
    return delta / span;
}

bool map_less(const HomothetyMap& a, const HomothetyMap& b) {
    if (a.images != b.images) return a.images < b.images;
    return a.scale < b.scale;
}

// ---- backtracking engine -----------------------------------------------------

namespace {

// Static per-(domain, codomain) data for the image assignment search.
struct EngineCtx {
    LatticePtr domain_ptr, codomain_ptr;
    const LatticeModel& P;
    const LatticeModel& Q;
    const SearchConstraints& cons;
    SearchBudget& budget;

    int m;
    std::vector<ElementId> order;  // position -> domain id, by (rank, id)
    std::vector<int> pos_of;       // domain id -> position
    // For each position j, pairs of earlier positions whose join sits at j.
    std::vector<std::vector<std::pair<int, int>>> join_checks;
    // meet position for every position pair a < b; always assigned before b.
    std::vector<int> meet_pos;

    EngineCtx(const LatticePtr& dom, const LatticePtr& cod, const SearchConstraints& constraints,
              SearchBudget& b)
        : domain_ptr(dom), codomain_ptr(cod), P(*dom), Q(*cod), cons(constraints), budget(b),
          m(P.size()) {
        if (!cons.pinned.empty() && static_cast<int>(cons.pinned.size()) != m)
            throw std::invalid_argument("pinned constraint array does not match domain size");
        order.resize(m);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](ElementId a, ElementId b) { return P.rank(a) < P.rank(b); });
        pos_of.resize(m);
        for (int j = 0; j < m; ++j) pos_of[order[j]] = j;
        join_checks.assign(m, {});
        meet_pos.assign(static_cast<std::size_t>(m) * m, 0);
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b) {
                meet_pos[static_cast<std::size_t>(a) * m + b] = pos_of[P.meet(order[a], order[b])];
                int jp = pos_of[P.join(order[a], order[b])];
                if (jp > b) join_checks[jp].emplace_back(a, b);
            }
    }
};

struct RootTask {
    int d;          // rank multiplier during the search
    int emit_scale; // declared scale of emitted maps
    int r0;         // absolute codomain rank of the image of the domain bottom
};

std::vector<RootTask> make_roots(const LatticeModel& P, const LatticeModel& Q,
                                 const SearchOptions& options) {
    std::vector<RootTask> roots;
    int span_p = P.rank_span(), span_q = Q.rank_span();
    if (span_p == 0) {
        // Any scale verifies on a single rank level; emit the canonical choice.
        int d = options.scale.value_or(1);
        if (d >= 1)
            for (int r0 = Q.min_rank(); r0 <= Q.max_rank(); ++r0)
                roots.push_back({0, d, r0});
        return roots;
    }
    for (int d = 1; d <= span_q / span_p; ++d) {
        if (options.scale && *options.scale != d) continue;
        for (int r0 = Q.min_rank(); r0 + d * span_p <= Q.max_rank(); ++r0)
            roots.push_back({d, d, r0});
    }
    return roots;
}

struct EngineRun {
    const EngineCtx& ctx;
    RootTask root;
    const std::function<bool(HomothetyMap&&)>& emit;
    std::vector<int> target_rank;
    std::vector<ElementId> img;

    EngineRun(const EngineCtx& c, RootTask r, const std::function<bool(HomothetyMap&&)>& e)
        : ctx(c), root(r), emit(e), target_rank(c.m), img(c.m, -1) {
        int base = ctx.P.rank(ctx.order[0]);
        for (int j = 0; j < ctx.m; ++j)
            target_rank[j] = root.r0 + root.d * (ctx.P.rank(ctx.order[j]) - base);
    }

    bool consistent(int j, ElementId c) const {
        ElementId ej = ctx.order[j];
        for (int a = 0; a < j; ++a) {
            ElementId e = ctx.order[a], ia = img[a];
            if (ctx.P.leq(e, ej) != ctx.Q.leq(ia, c)) return false;
            if (ctx.P.leq(ej, e) != ctx.Q.leq(c, ia)) return false;
            if (img[ctx.meet_pos[static_cast<std::size_t>(a) * ctx.m + j]] != ctx.Q.meet(ia, c))
                return false;
        }
        for (auto [a, b] : ctx.join_checks[j])
            if (ctx.Q.join(img[a], img[b]) != c) return false;
        return true;
    }

    // Returns false when the emit callback asked to stop.
    bool dfs(int j) {
        if (j == ctx.m) {
            std::vector<ElementId> images(ctx.m);
            for (int pos = 0; pos < ctx.m; ++pos) images[ctx.order[pos]] = img[pos];
            return emit(HomothetyMap{ctx.domain_ptr, ctx.codomain_ptr, std::move(images),
                                     root.emit_scale});
        }
        int tr = target_rank[j];
        if (tr < ctx.Q.min_rank() || tr > ctx.Q.max_rank()) return true;
        ElementId ej = ctx.order[j];
        std::optional<ElementId> pin;
        if (!ctx.cons.pinned.empty()) pin = ctx.cons.pinned[ej];
        for (ElementId c : ctx.Q.rank_buckets()[tr - ctx.Q.min_rank()]) {
            if (pin && *pin != c) continue;
            ctx.budget.charge();
            if (ctx.cons.admit && !ctx.cons.admit(ej, c)) continue;
            if (!consistent(j, c)) continue;
            img[j] = c;
            if (!dfs(j + 1)) return false;
        }
        return true;
    }
};

} // namespace

void for_each_lattice_homothety(const LatticePtr& domain, const LatticePtr& codomain,
                                const SearchOptions& options, SearchBudget& budget,
                                const SearchConstraints& constraints,
                                const std::function<bool(HomothetyMap&&)>& emit) {
    require(static_cast<bool>(domain) && static_cast<bool>(codomain),
            "enumeration needs a domain and a codomain");
    EngineCtx ctx(domain, codomain, constraints, budget);
    for (RootTask root : make_roots(*domain, *codomain, options)) {
        EngineRun run(ctx, root, emit);
        if (!run.dfs(0)) return;
    }
}

std::vector<HomothetyMap> enumerate_lattice_homotheties(const LatticePtr& domain,
                                                        const LatticePtr& codomain,
                                                        const SearchOptions& options,
                                                        SearchBudget& budget) {
    require(static_cast<bool>(domain) && static_cast<bool>(codomain),
            "enumeration needs a domain and a codomain");
    SearchConstraints none;
    EngineCtx ctx(domain, codomain, none, budget);

    // Work items: one per (root, image of the first element); their order fixes
    // the merge order, so results never depend on scheduling.
    struct Task {
        RootTask root;
        ElementId c0;
    };
    std::vector<Task> tasks;
    for (RootTask root : make_roots(*domain, *codomain, options)) {
        int tr = root.r0;
        for (ElementId c : codomain->rank_buckets()[tr - codomain->min_rank()])
            tasks.push_back({root, c});
    }

    std::vector<std::vector<HomothetyMap>> slots(tasks.size());
    auto run_task = [&](std::size_t i) {
        budget.charge();
        EngineRun run(ctx, tasks[i].root, [&](HomothetyMap&& f) {
            slots[i].push_back(std::move(f));
            return true;
        });
        run.img[0] = tasks[i].c0;
        run.dfs(1);
    };

    int workers = std::max(1, options.workers);
    if (workers == 1 || tasks.size() <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) run_task(i);
    } else {
        std::size_t stride = static_cast<std::size_t>(workers);
        std::vector<std::future<void>> futs;
        for (std::size_t w = 0; w < stride; ++w)
            futs.push_back(std::async(std::launch::async, [&, w]() {
                for (std::size_t i = w; i < tasks.size(); i += stride) run_task(i);
            }));
        std::exception_ptr first_error;
        for (auto& f : futs) {
            try {
                f.get();
            } catch (...) {
                if (!first_error) first_error = std::current_exception();
            }
        }
        if (first_error) std::rethrow_exception(first_error);
    }

    std::vector<HomothetyMap> out;
    for (auto& slot : slots)
        for (auto& f : slot) out.push_back(std::move(f));
    std::sort(out.begin(), out.end(), map_less);
    return out;
}

std::vector<HomothetyMap> enumerate_lattice_homotheties(const LatticePtr& domain,
                                                        const LatticePtr& codomain,
                                                        const SearchOptions& options) {
    SearchBudget budget(options.node_budget);
    return enumerate_lattice_homotheties(domain, codomain, options, budget);
}

} // namespace lathom

#include "lathom/systems.hpp"

#include <algorithm>
#include <sstream>

namespace lathom {

std::string system_name(SystemId s) {
    return s == SystemId::trivial ? "trivial" : "hj";
}

std::optional<SystemId> system_from_name(const std::string& name) {
    if (name == "trivial") return SystemId::trivial;
    if (name == "hj") return SystemId::hj;
    return std::nullopt;
}

namespace {

struct ChainView {
    int t;
    int arity;
};

std::optional<ChainView> chain_view(const LatticeModel& lattice) {
    if (lattice.family() == Family::chain || lattice.family() == Family::boolean)
        return ChainView{lattice.alphabet(), lattice.arity()};
    return std::nullopt;
}

int digit_of(std::int64_t index, int coord, int t) {
    for (int i = 0; i < coord; ++i) index /= t;
    return static_cast<int>(index % t);
}

} // namespace

void validate(const HJForm& form) {
    if (form.t < 2) throw std::invalid_argument("hj form needs t >= 2");
    if (form.domain_arity < 1) throw std::invalid_argument("hj form needs n >= 1");
    if (form.codomain_arity < 1) throw std::invalid_argument("hj form needs N >= 1");
    if (static_cast<int>(form.sets.size()) != form.domain_arity)
        throw std::invalid_argument("hj form needs one coordinate set per domain slot");
    if (static_cast<int>(form.alpha.size()) != form.codomain_arity)
        throw std::invalid_argument("hj form alpha must assign every codomain coordinate");
    for (int v : form.alpha)
        if (v < 0 || v >= form.t) throw std::invalid_argument("hj form alpha value outside alphabet");

    std::vector<bool> used(form.codomain_arity, false);
    std::size_t k = form.sets.empty() ? 0 : form.sets[0].size();
    for (const auto& set : form.sets) {
        if (set.empty()) throw std::invalid_argument("hj form sets must be nonempty");
        if (set.size() != k) throw std::invalid_argument("hj form sets must share one size");
        for (int j : set) {
            if (j < 1 || j > form.codomain_arity)
                throw std::invalid_argument("hj form set coordinate outside 1..N");
            if (used[j - 1]) throw std::invalid_argument("hj form sets must be pairwise disjoint");
            used[j - 1] = true;
            if (form.alpha[j - 1] != 0)
                throw std::invalid_argument("hj form alpha must vanish on the coordinate sets");
        }
        if (!std::is_sorted(set.begin(), set.end()))
            throw std::invalid_argument("hj form sets must be sorted");
    }
}

int hj_scale(const HJForm& form) {
    return static_cast<int>(form.sets.at(0).size());
}

HomothetyMap hj_to_map(const HJForm& form) {
    validate(form);
    HomothetyMap f;
    f.domain = LatticeModel::chain(form.t, form.domain_arity);
    f.codomain = LatticeModel::chain(form.t, form.codomain_arity);
    f.scale = hj_scale(form);

    // slot owning each codomain coordinate, -1 where alpha rules
    std::vector<int> owner(form.codomain_arity, -1);
    for (int i = 0; i < form.domain_arity; ++i)
        for (int j : form.sets[i]) owner[j - 1] = i;

    std::vector<std::int64_t> pow(form.codomain_arity, 1);
    for (int j = 1; j < form.codomain_arity; ++j) pow[j] = pow[j - 1] * form.t;

    f.images.resize(f.domain->size());
    for (ElementId a = 0; a < f.domain->size(); ++a) {
        std::int64_t img = 0;
        for (int j = 0; j < form.codomain_arity; ++j) {
            int value = owner[j] < 0 ? form.alpha[j] : digit_of(a, owner[j], form.t);
            img += value * pow[j];
        }
        f.images[a] = static_cast<ElementId>(img);
    }
    return f;
}

std::variant<HJForm, NotHJ> recognize_hj(const HomothetyMap& f) {
    if (!f.domain || !f.codomain) throw std::invalid_argument("recognition needs a complete map");
    auto dv = chain_view(*f.domain);
    auto cv = chain_view(*f.codomain);
    if (!dv || !cv)
        throw std::invalid_argument("hj recognition is defined between chain lattices");
    if (dv->t != cv->t)
        throw std::invalid_argument("hj recognition needs one alphabet on both sides");
    const int t = dv->t, n = dv->arity, big_n = cv->arity;

    // The only possible form: alpha is the image of the bottom, each set the
    // support where the image of an atom deviates from it.
    HJForm form;
    form.t = t;
    form.domain_arity = n;
    form.codomain_arity = big_n;
    form.alpha.resize(big_n);
    for (int j = 0; j < big_n; ++j) form.alpha[j] = digit_of(f.images[0], j, t);

    std::int64_t atom = 1;
    for (int i = 0; i < n; ++i, atom *= t) {
        std::vector<int> set;
        ElementId fi = f.images[static_cast<ElementId>(atom)];
        for (int j = 0; j < big_n; ++j)
            if (digit_of(fi, j, t) != form.alpha[j]) set.push_back(j + 1);
        form.sets.push_back(std::move(set));
    }

    try {
        validate(form);
    } catch (const std::invalid_argument& e) {
        return NotHJ{-1, std::string("reconstruction breaks a form invariant: ") + e.what()};
    }

    HomothetyMap expect = hj_to_map(form);
    for (ElementId a = 0; a < f.domain->size(); ++a)
        if (f.images[a] != expect.images[a])
            return NotHJ{a, "map differs from the reconstructed form at this input"};
    if (f.scale != expect.scale)
        return NotHJ{-1, "declared scale differs from the set size"};
    return form;
}

HJForm compose_hj(const HJForm& f, const HJForm& g) {
    validate(f);
    validate(g);
    if (f.t != g.t) throw std::invalid_argument("compose_hj needs one alphabet");
    if (f.codomain_arity != g.domain_arity)
        throw std::invalid_argument("compose_hj: inner arities do not match");

    HJForm h;
    h.t = f.t;
    h.domain_arity = f.domain_arity;
    h.codomain_arity = g.codomain_arity;

    // U_i collects the g-sets of every coordinate f feeds slot i into.
    for (const auto& s : f.sets) {
        std::vector<int> u;
        for (int p : s)
            for (int j : g.sets[p - 1]) u.push_back(j);
        std::sort(u.begin(), u.end());
        h.sets.push_back(std::move(u));
    }

    // gamma = phi_g(alpha_f)
    std::vector<int> owner(g.codomain_arity, -1);
    for (int p = 0; p < g.domain_arity; ++p)
        for (int j : g.sets[p]) owner[j - 1] = p;
    h.alpha.resize(g.codomain_arity);
    for (int j = 0; j < g.codomain_arity; ++j)
        h.alpha[j] = owner[j] < 0 ? g.alpha[j] : f.alpha[owner[j]];

    validate(h);
    return h;
}

bool is_member(SystemId system, const HomothetyMap& f) {
    switch (system) {
        case SystemId::trivial:
            return verify_lattice_homothety(f).ok;
        case SystemId::hj: {
            if (!f.domain || !f.codomain || !chain_view(*f.domain) || !chain_view(*f.codomain))
                throw std::invalid_argument("hj membership is defined between chain lattices");
            if (!verify_lattice_homothety(f).ok) return false;
            return std::holds_alternative<HJForm>(recognize_hj(f));
        }
    }
    return false;
}

// ---- axiom and compatibility checks ------------------------------------------

AxiomsReport check_system_axioms(SystemId system, const LatticeSequence& sequence, int bound,
                                 const SearchOptions& options) {
    if (bound < 1) throw std::invalid_argument("axiom check needs bound >= 1");
    if (system == SystemId::hj &&
        !(sequence.family == Family::chain || sequence.family == Family::boolean))
        throw std::invalid_argument("hj system lives on chain (or boolean) sequences");

    AxiomsReport rep;
    rep.system = system;
    rep.sequence = sequence;
    rep.bound = bound;

    SearchBudget budget(options.node_budget);
    std::vector<LatticePtr> a(bound + 1);
    for (int i = 1; i <= bound; ++i) a[i] = sequence.at(i);

    for (int i = 1; i <= bound; ++i)
        if (!is_member(system, identity_map(a[i]))) {
            rep.h1_ok = false;
            rep.h1_failures.push_back(i);
            rep.violations.push_back("H1: identity on A(" + std::to_string(i) + ") is not a member");
        }

    // members[i][j]
    std::vector<std::vector<std::vector<HomothetyMap>>> members(
        bound + 1, std::vector<std::vector<HomothetyMap>>(bound + 1));
    for (int i = 1; i <= bound; ++i)
        for (int j = 1; j <= bound; ++j) {
            auto all = enumerate_lattice_homotheties(a[i], a[j], options, budget);
            if (system == SystemId::trivial)
                members[i][j] = std::move(all);
            else
                for (auto& f : all)
                    if (is_member(system, f)) members[i][j].push_back(std::move(f));
            rep.member_counts.push_back({i, j, static_cast<long long>(members[i][j].size())});
        }

    for (int i = 1; i <= bound && rep.violations.empty(); ++i)
        for (int j = 1; j <= bound; ++j)
            for (int k = 1; k <= bound; ++k)
                for (const auto& f : members[i][j])
                    for (const auto& g : members[j][k]) {
                        HomothetyMap h = compose(f, g);
                        ++rep.h2_checked;
                        if (!is_member(system, h)) {
                            std::ostringstream os;
                            os << "H2: a composite A(" << i << ")->A(" << j << ")->A(" << k
                               << ") is not a member";
                            rep.violations.push_back(os.str());
                            goto done;
                        }
                        if (system == SystemId::hj) {
                            HJForm cf = compose_hj(std::get<HJForm>(recognize_hj(f)),
                                                   std::get<HJForm>(recognize_hj(g)));
                            ++rep.hj_compose_checked;
                            HomothetyMap via_forms = hj_to_map(cf);
                            if (via_forms.images != h.images || via_forms.scale != h.scale) {
                                rep.violations.push_back(
                                    "H2: compose_hj disagrees with map composition");
                                goto done;
                            }
                        }
                    }
done:
    rep.ok = rep.h1_ok && rep.violations.empty();
    return rep;
}

CompatReport check_compatibility(const HomothetyMap& embed, SystemId system, int i_bound,
                                 const SearchOptions& options) {
    if (i_bound < 1) throw std::invalid_argument("compatibility check needs i_bound >= 1");
    if (!embed.domain || embed.domain->family() != Family::product)
        throw std::invalid_argument("compatibility: the embedding domain must be a product");
    if (!verify_lattice_homothety(embed).ok)
        throw std::invalid_argument("compatibility: the embedding must be a lattice homothety");

    LatticeSequence seq = LatticeSequence::from_lattice(*embed.codomain);
    const LatticePtr& am = embed.domain->first();
    const LatticePtr& an = embed.domain->second();
    if (LatticeSequence::from_lattice(*am).descriptor() != seq.descriptor() ||
        LatticeSequence::from_lattice(*an).descriptor() != seq.descriptor())
        throw std::invalid_argument("compatibility: factors and codomain must share a sequence");

    CompatReport rep;
    rep.system = system;
    rep.i_bound = i_bound;
    SearchBudget budget(options.node_budget);

    for (ElementId q = 0; q < an->size(); ++q) {
        ++rep.c2_sections;
        if (rep.c2_ok && !is_member(system, section_fixing_second(embed, q))) {
            rep.c2_ok = false;
            rep.c2_violation = "section with second slot fixed to " + an->render_text(q) +
                               " is not a member";
        }
    }
    for (ElementId p = 0; p < am->size(); ++p) {
        ++rep.c2_sections;
        if (rep.c2_ok && !is_member(system, section_fixing_first(embed, p))) {
            rep.c2_ok = false;
            rep.c2_violation = "section with first slot fixed to " + am->render_text(p) +
                               " is not a member";
        }
    }

    for (int i = 1; i <= i_bound; ++i) {
        LatticePtr ai = seq.at(i);
        auto candidates = enumerate_lattice_homotheties(ai, embed.domain, options, budget);
        CompatReport::C1Level level{i, static_cast<long long>(candidates.size()), 0};
        for (const auto& g : candidates) {
            int s2 = an->size();
            std::vector<ElementId> img1(g.images.size()), img2(g.images.size());
            for (std::size_t x = 0; x < g.images.size(); ++x) {
                img1[x] = g.images[x] / s2;
                img2[x] = g.images[x] % s2;
            }
            auto d1 = infer_scale(*ai, *am, img1);
            auto d2 = infer_scale(*ai, *an, img2);
            if (!d1 || !d2) continue;
            HomothetyMap proj1{ai, am, std::move(img1), *d1};
            HomothetyMap proj2{ai, an, std::move(img2), *d2};
            if (!is_member(system, proj1) || !is_member(system, proj2)) continue;
            ++level.premise_passed;
            HomothetyMap through = compose(g, embed);
            if (rep.c1_ok && !is_member(system, through)) {
                rep.c1_ok = false;
                rep.c1_violation = "restricted-through-projections map at i=" + std::to_string(i) +
                                   " has a non-member composite with the embedding";
            }
        }
        rep.c1_levels.push_back(level);
    }

    rep.ok = rep.c1_ok && rep.c2_ok;
    return rep;
}

RigidityReport check_boolean_rigidity(int n, int codomain_n, const SearchOptions& options) {
    RigidityReport rep;
    rep.n = n;
    rep.codomain_n = codomain_n;
    auto maps = enumerate_lattice_homotheties(LatticeModel::chain(2, n),
                                              LatticeModel::chain(2, codomain_n), options);
    rep.total = static_cast<long long>(maps.size());
    for (auto& f : maps) {
        ++rep.by_scale[f.scale];
        if (std::holds_alternative<NotHJ>(recognize_hj(f)))
            rep.rejects.push_back(std::move(f));
    }
    rep.ok = rep.rejects.empty();
    return rep;
}

std::optional<std::pair<HomothetyMap, NotHJ>> find_non_hj(int t, int n, int codomain_n,
                                                          const SearchOptions& options) {
    SearchBudget budget(options.node_budget);
    std::optional<std::pair<HomothetyMap, NotHJ>> found;
    SearchConstraints none;
    for_each_lattice_homothety(
        LatticeModel::chain(t, n), LatticeModel::chain(t, codomain_n), options, budget, none,
        [&](HomothetyMap&& f) {
            auto r = recognize_hj(f);
            if (std::holds_alternative<NotHJ>(r)) {
                found = {std::move(f), std::get<NotHJ>(r)};
                return false;
            }
            return true;
        });
    return found;
}

} // namespace lathom

#include "lathom/driver.hpp"

#include <stdexcept>

#include "lathom/embeddings.hpp"

namespace lathom::driver {

namespace {

SystemId parse_system(const std::string& name) {
    auto s = system_from_name(name);
    if (!s) throw std::invalid_argument("unknown system: " + name);
    return *s;
}

LatticeSequence parse_sequence(const std::string& family, int t) {
    auto f = family_from_name(family);
    if (!f) throw std::invalid_argument("unknown family: " + family);
    if (*f == Family::product)
        throw std::invalid_argument("product lattices do not form a sequence");
    LatticeSequence seq;
    seq.family = *f;
    seq.alphabet = (*f == Family::chain) ? t : 2;
    if (*f == Family::chain && t < 2)
        throw std::invalid_argument("chain sequences need t >= 2");
    return seq;
}

json embed_result(const HomothetyMap& embed) {
    VerifyReport report = verify_lattice_homothety(embed);
    return json{{"embed", map_to_json(embed)},
                {"report", verify_report_to_json(report, embed)},
                {"ok", report.ok}};
}

} // namespace

json lattice_info(const json& descriptor) {
    LatticePtr lattice = LatticeModel::from_descriptor(descriptor);
    json rank_sizes = json::array();
    for (const auto& bucket : lattice->rank_buckets()) rank_sizes.push_back(bucket.size());
    return json{{"descriptor", lattice->descriptor()},
                {"size", lattice->size()},
                {"min_rank", lattice->min_rank()},
                {"max_rank", lattice->max_rank()},
                {"rank_span", lattice->rank_span()},
                {"bottom", lattice->render(lattice->bottom())},
                {"top", lattice->render(lattice->top())},
                {"rank_sizes", rank_sizes}};
}

json hom_enumerate(const json& domain_desc, const json& codomain_desc, std::optional<int> scale,
                   const SearchOptions& options) {
    LatticePtr domain = LatticeModel::from_descriptor(domain_desc);
    LatticePtr codomain = LatticeModel::from_descriptor(codomain_desc);
    SearchOptions opts = options;
    opts.scale = scale;
    auto maps = enumerate_lattice_homotheties(domain, codomain, opts);
    json list = json::array();
    for (const auto& f : maps) list.push_back(map_to_json(f));
    return json{{"domain", domain->descriptor()},
                {"codomain", codomain->descriptor()},
                {"scale_filter", scale ? json(*scale) : json(nullptr)},
                {"count", maps.size()},
                {"maps", list}};
}

json hom_verify(const json& map_json) {
    HomothetyMap f = map_from_json(map_json);
    VerifyReport report = verify_lattice_homothety(f);
    json out = verify_report_to_json(report, f);
    out["map"] = map_to_json(f);
    return out;
}

json embed_partition(int n1, int n2) { return embed_result(partition_combine(n1, n2)); }

json embed_boolean(int n1, int n2) { return embed_result(boolean_combine(n1, n2)); }

json embed_chain(int t, int n1, int n2) { return embed_result(chain_combine(t, n1, n2)); }

json embed_division(long long m, long long n) {
    DivisionCombine combine = division_combine(m, n);
    json out = embed_result(combine.map);
    out["codomain_modulus"] = combine.codomain_modulus;
    return out;
}

json system_axioms(const std::string& system, const std::string& family, int t, int bound,
                   const SearchOptions& options) {
    AxiomsReport report =
        check_system_axioms(parse_system(system), parse_sequence(family, t), bound, options);
    return axioms_report_to_json(report);
}

json system_compat(const std::string& system, const std::string& family, int t, long long m,
                   long long n, int i_bound, const SearchOptions& options) {
    auto f = family_from_name(family);
    if (!f) throw std::invalid_argument("unknown family: " + family);
    HomothetyMap embed;
    switch (*f) {
        case Family::boolean:
            embed = boolean_combine(static_cast<int>(m), static_cast<int>(n));
            break;
        case Family::chain:
            embed = chain_combine(t, static_cast<int>(m), static_cast<int>(n));
            break;
        case Family::partition:
            embed = partition_combine(static_cast<int>(m), static_cast<int>(n));
            break;
        case Family::division:
            embed = division_combine(m, n).map;
            break;
        case Family::product:
            throw std::invalid_argument("no combine is defined for product families");
    }
    CompatReport report = check_compatibility(embed, parse_system(system), i_bound, options);
    json out = compat_report_to_json(report);
    out["embed"] = map_to_json(embed);
    return out;
}

json system_rigidity(int n, int codomain_n, const SearchOptions& options) {
    return rigidity_report_to_json(check_boolean_rigidity(n, codomain_n, options));
}

json system_counterexample(int t, int n, int codomain_n, const SearchOptions& options) {
    auto found = find_non_hj(t, n, codomain_n, options);
    if (!found) return json{{"found", false}, {"t", t}, {"n", n}, {"codomain_n", codomain_n}};
    const auto& [map, why] = *found;
    return json{{"found", true},
                {"t", t},
                {"n", n},
                {"codomain_n", codomain_n},
                {"map", map_to_json(map)},
                {"witness_input",
                 why.witness_input >= 0 ? map.domain->render(why.witness_input) : json(nullptr)},
                {"reason", why.reason}};
}

json mono_search(const json& coloring_json, const std::string& system, int n,
                 const SearchOptions& options) {
    Coloring chi = coloring_from_json(coloring_json);
    LatticeSequence seq = LatticeSequence::from_lattice(*chi.lattice);
    LatticePtr domain = seq.at(n);
    auto witness = find_mono_homothety(domain, chi, parse_system(system), options);
    if (!witness) return json{{"verdict", "none"}};
    json out = witness_to_json(*witness);
    out["verdict"] = "witness";
    return out;
}

json l_predicate(const std::string& family, int t, int n, int s, int k, int ell, int big_n,
                 const std::string& system, const RamseyOptions& options) {
    LatticeSequence seq = parse_sequence(family, t);
    LPredicateResult result =
        check_L_predicate(seq, n, s, k, ell, big_n, parse_system(system), options);
    return l_predicate_result_to_json(result, *seq.at(n));
}

json ramsey(const std::string& family, int t, const std::string& system, int n, int k, int n_max,
            const RamseyOptions& options) {
    LatticeSequence seq = parse_sequence(family, t);
    RamseyResult result = ramsey_number(seq, parse_system(system), n, k, n_max, options);
    json out = ramsey_result_to_json(result);
    out["sequence"] = seq.descriptor();
    out["system"] = system_name(parse_system(system));
    out["n"] = n;
    out["k"] = k;
    out["n_max"] = n_max;
    return out;
}

} // namespace lathom::driver

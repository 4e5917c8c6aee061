#include "lathom/serialize.hpp"

#include <stdexcept>

namespace lathom {

namespace {

json render_or_null(const LatticeModel& lattice, ElementId a) {
    if (a < 0) return nullptr;
    return lattice.render(a);
}

// Missing keys and type mismatches surface as invalid_argument like every
// other malformed input, not as library-specific exception types.
template <typename F>
auto parse_guard(const char* what, F&& body) {
    try {
        return body();
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string(what) + ": " + e.what());
    }
}

} // namespace

json map_to_json(const HomothetyMap& f) {
    if (!f.domain || !f.codomain) throw std::invalid_argument("serialization needs a complete map");
    json images = json::array();
    for (ElementId a = 0; a < f.domain->size(); ++a)
        images.push_back(f.codomain->render(f.images.at(a)));
    return json{{"domain", f.domain->descriptor()},
                {"codomain", f.codomain->descriptor()},
                {"images", images},
                {"scale", f.scale}};
}

HomothetyMap map_from_json(const json& j) {
    return parse_guard("malformed map", [&] {
        HomothetyMap f;
        f.domain = LatticeModel::from_descriptor(j.at("domain"));
        f.codomain = LatticeModel::from_descriptor(j.at("codomain"));
        const json& images = j.at("images");
        if (!images.is_array() || static_cast<ElementId>(images.size()) != f.domain->size())
            throw std::invalid_argument(
                "map images must list one codomain element per domain element");
        f.images.reserve(images.size());
        for (const json& e : images) f.images.push_back(f.codomain->parse_element(e));
        f.scale = j.at("scale").get<int>();
        return f;
    });
}

json coloring_to_json(const Coloring& chi) {
    validate_coloring(chi);
    return json{{"lattice", chi.lattice->descriptor()}, {"k", chi.k}, {"colors", chi.colors}};
}

Coloring coloring_from_json(const json& j) {
    return parse_guard("malformed coloring", [&] {
        Coloring chi;
        chi.lattice = LatticeModel::from_descriptor(j.at("lattice"));
        chi.k = j.at("k").get<int>();
        const json& colors = j.at("colors");
        if (!colors.is_array())
            throw std::invalid_argument("coloring colors must be an array");
        for (const json& c : colors) {
            if (!c.is_number_integer())
                throw std::invalid_argument("color values must be integers");
            chi.colors.push_back(c.get<int>());
        }
        validate_coloring(chi);
        return chi;
    });
}

json hjform_to_json(const HJForm& form) {
    return json{{"t", form.t},
                {"n", form.domain_arity},
                {"N", form.codomain_arity},
                {"sets", form.sets},
                {"alpha", form.alpha}};
}

HJForm hjform_from_json(const json& j) {
    return parse_guard("malformed form", [&] {
        HJForm form;
        form.t = j.at("t").get<int>();
        form.domain_arity = j.at("n").get<int>();
        form.codomain_arity = j.at("N").get<int>();
        form.sets = j.at("sets").get<std::vector<std::vector<int>>>();
        form.alpha = j.at("alpha").get<std::vector<int>>();
        validate(form);
        return form;
    });
}

json verify_report_to_json(const VerifyReport& report, const HomothetyMap& f) {
    json violations = json::array();
    for (const auto& v : report.violations)
        violations.push_back(json{{"condition", v.condition},
                                  {"p", render_or_null(*f.domain, v.p)},
                                  {"p2", render_or_null(*f.domain, v.p2)},
                                  {"detail", v.detail}});
    return json{{"ok", report.ok},
                {"scale_underdetermined", report.scale_underdetermined},
                {"violations", violations}};
}

json triple_to_json(const LatticeModel& lattice, const AdmissibleTriple& triple) {
    json s = json::array();
    for (ElementId x : triple.S) s.push_back(lattice.render(x));
    return json{{"S", s},
                {"p", lattice.render(triple.p)},
                {"p_prime", lattice.render(triple.p_prime)}};
}

json witness_to_json(const MonoWitness& witness) {
    return json{{"witness", map_to_json(witness.map)}, {"color", witness.color}};
}

json axioms_report_to_json(const AxiomsReport& report) {
    json counts = json::array();
    for (const auto& mc : report.member_counts)
        counts.push_back(json{{"i", mc.i}, {"j", mc.j}, {"members", mc.members}});
    return json{{"system", system_name(report.system)},
                {"sequence", report.sequence.descriptor()},
                {"bound", report.bound},
                {"h1_ok", report.h1_ok},
                {"h1_failures", report.h1_failures},
                {"member_counts", counts},
                {"h2_checked", report.h2_checked},
                {"hj_compose_checked", report.hj_compose_checked},
                {"violations", report.violations},
                {"ok", report.ok}};
}

json compat_report_to_json(const CompatReport& report) {
    json levels = json::array();
    for (const auto& lvl : report.c1_levels)
        levels.push_back(json{{"i", lvl.i},
                              {"candidates", lvl.candidates},
                              {"premise_passed", lvl.premise_passed}});
    return json{{"system", system_name(report.system)},
                {"i_bound", report.i_bound},
                {"c2_ok", report.c2_ok},
                {"c2_sections", report.c2_sections},
                {"c2_violation", report.c2_violation},
                {"c1_levels", levels},
                {"c1_ok", report.c1_ok},
                {"c1_violation", report.c1_violation},
                {"ok", report.ok}};
}

json rigidity_report_to_json(const RigidityReport& report) {
    json by_scale = json::object();
    for (const auto& [scale, count] : report.by_scale) by_scale[std::to_string(scale)] = count;
    json rejects = json::array();
    for (const auto& f : report.rejects) rejects.push_back(map_to_json(f));
    return json{{"n", report.n},
                {"codomain_n", report.codomain_n},
                {"total", report.total},
                {"by_scale", by_scale},
                {"rejects", rejects},
                {"ok", report.ok}};
}

json ramsey_result_to_json(const RamseyResult& result) {
    json rounds = json::array();
    for (const auto& round : result.rounds) {
        json r{{"N", round.big_n}, {"colorings_total", round.colorings_total}};
        if (round.works) {
            r["verdict"] = "works";
        } else if (round.bad_coloring) {
            r["verdict"] = "fails";
            r["failing_index"] = round.failing_index;
            r["bad_coloring"] = coloring_to_json(*round.bad_coloring);
        } else {
            r["verdict"] = "budget";
        }
        rounds.push_back(std::move(r));
    }
    json out{{"rounds", rounds}};
    out["value"] = result.value ? json(*result.value) : json(nullptr);
    out["budget_stopped_at"] =
        result.budget_stopped_at ? json(*result.budget_stopped_at) : json(nullptr);
    return out;
}

json l_predicate_result_to_json(const LPredicateResult& result, const LatticeModel& domain) {
    json out{{"holds", result.holds},
             {"triples", result.triples},
             {"colorings_total", result.colorings_total},
             {"pairs_checked", result.pairs_checked}};
    if (result.certificate) {
        out["certificate"] = json{{"triple", triple_to_json(domain, result.certificate->triple)},
                                  {"coloring", coloring_to_json(result.certificate->coloring)}};
    } else {
        out["certificate"] = nullptr;
    }
    return out;
}

} // namespace lathom

// lathom: build finite graded lattices, verify and enumerate lattice
// homotheties, check homothety systems, and run exhaustive coloring searches.
//
// Exit codes: 0 pass/verified/found, 1 violation-or-none, 2 budget or config
// error. Structured output (--format json) is byte-stable across runs and
// worker counts.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lathom/driver.hpp"
#include "lathom/errors.hpp"

namespace {

using lathom::json;

struct Globals {
    int workers = 1;
    long long budget = 100000000;
    std::string format = "human";
};

lathom::SearchOptions search_opts(const Globals& g) {
    lathom::SearchOptions o;
    o.workers = g.workers;
    o.node_budget = g.budget;
    return o;
}

json make_descriptor(const std::string& family, int t, long long n) {
    json params;
    if (family == "chain")
        params = json{{"t", t}, {"n", n}};
    else
        params = json{{"n", n}};
    return json{{"family", family}, {"params", params}};
}

json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("malformed " + what + ": " + e.what());
    }
}

json read_json_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return parse_json_text(buf.str(), "json on stdin");
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str(), "file " + path);
}

std::string one_line(const json& j) { return j.dump(); }

void print_human(const std::string& kind, const json& out) {
    std::ostream& os = std::cout;
    if (kind == "lattice-info") {
        os << out["descriptor"]["family"].get<std::string>() << " lattice: " << out["size"]
           << " elements, ranks " << out["min_rank"] << ".." << out["max_rank"] << "\n"
           << "bottom " << one_line(out["bottom"]) << ", top " << one_line(out["top"]) << "\n"
           << "elements per rank: " << one_line(out["rank_sizes"]) << "\n";
    } else if (kind == "hom-enumerate") {
        os << out["count"] << " lattice homotheties\n";
        for (const json& m : out["maps"])
            os << "  images " << one_line(m["images"]) << " scale " << m["scale"] << "\n";
    } else if (kind == "hom-verify" || kind == "embed") {
        const json& rep = kind == "embed" ? out["report"] : out;
        if (out["ok"].get<bool>()) {
            os << "ok";
            if (kind == "embed") os << ": embedding with scale " << out["embed"]["scale"];
            if (rep["scale_underdetermined"].get<bool>()) os << " (scale under-determined)";
            os << "\n";
            if (out.contains("codomain_modulus"))
                os << "codomain modulus " << out["codomain_modulus"] << "\n";
        } else {
            for (const json& v : rep["violations"])
                os << "violation [" << v["condition"].get<std::string>() << "] at p="
                   << one_line(v["p"]) << " p'=" << one_line(v["p2"]) << ": "
                   << v["detail"].get<std::string>() << "\n";
        }
    } else if (kind == "axioms") {
        os << "H1 " << (out["h1_ok"].get<bool>() ? "ok" : "violated") << "; H2 checked "
           << out["h2_checked"] << " composites";
        if (out["hj_compose_checked"].get<long long>() > 0)
            os << " (" << out["hj_compose_checked"] << " cross-checked against form composition)";
        os << "\n";
        for (const json& mc : out["member_counts"])
            os << "  members A(" << mc["i"] << ")->A(" << mc["j"] << "): " << mc["members"] << "\n";
        for (const json& v : out["violations"]) os << "violation: " << v.get<std::string>() << "\n";
        os << (out["ok"].get<bool>() ? "pass" : "fail") << "\n";
    } else if (kind == "compat") {
        os << "C2 " << (out["c2_ok"].get<bool>() ? "ok" : "violated") << " over "
           << out["c2_sections"] << " sections\n";
        if (!out["c2_ok"].get<bool>()) os << "  " << out["c2_violation"].get<std::string>() << "\n";
        for (const json& lvl : out["c1_levels"])
            os << "C1 level i=" << lvl["i"] << ": " << lvl["candidates"] << " candidates, "
               << lvl["premise_passed"] << " passed the premise\n";
        if (!out["c1_ok"].get<bool>()) os << "  " << out["c1_violation"].get<std::string>() << "\n";
        os << (out["ok"].get<bool>() ? "pass" : "fail") << "\n";
    } else if (kind == "rigidity") {
        os << out["total"] << " lattice homotheties, by scale " << one_line(out["by_scale"])
           << "\n";
        if (out["ok"].get<bool>())
            os << "all recognized as type HJ\n";
        else
            os << out["rejects"].size() << " maps rejected by the recognizer\n";
    } else if (kind == "counterexample") {
        if (out["found"].get<bool>()) {
            os << "found a lattice homothety that is not of type HJ\n"
               << "  images " << one_line(out["map"]["images"]) << " scale " << out["map"]["scale"]
               << "\n  " << out["reason"].get<std::string>();
            if (!out["witness_input"].is_null())
                os << " (input " << one_line(out["witness_input"]) << ")";
            os << "\n";
        } else {
            os << "none found\n";
        }
    } else if (kind == "mono-search") {
        if (out["verdict"] == "witness")
            os << "witness: images " << one_line(out["witness"]["images"]) << " scale "
               << out["witness"]["scale"] << " color " << out["color"] << "\n";
        else
            os << "none\n";
    } else if (kind == "l-predicate") {
        if (out["holds"].get<bool>()) {
            os << "holds (" << out["triples"] << " triples x " << out["colorings_total"]
               << " canonical colorings)\n";
        } else {
            os << "fails\n  triple S=" << one_line(out["certificate"]["triple"]["S"]) << " p="
               << one_line(out["certificate"]["triple"]["p"]) << " p'="
               << one_line(out["certificate"]["triple"]["p_prime"]) << "\n  coloring "
               << one_line(out["certificate"]["coloring"]["colors"]) << "\n";
        }
    } else if (kind == "ramsey") {
        for (const json& r : out["rounds"]) {
            os << "N=" << r["N"] << ": " << r["verdict"].get<std::string>() << " ("
               << r["colorings_total"] << " canonical colorings examined";
            if (r["verdict"] == "fails") os << ", bad coloring at index " << r["failing_index"];
            os << ")\n";
            if (r["verdict"] == "fails")
                os << "  " << one_line(r["bad_coloring"]["colors"]) << "\n";
        }
        if (!out["value"].is_null())
            os << "value: " << out["value"] << "\n";
        else if (!out["budget_stopped_at"].is_null())
            os << "budget exhausted at N=" << out["budget_stopped_at"]
               << "; value >= " << out["budget_stopped_at"] << "\n";
        else
            os << "no value up to N=" << out["n_max"] << "\n";
    } else {
        os << out.dump(2) << "\n";
    }
}

void emit(const Globals& g, const std::string& kind, const json& out) {
    if (g.format == "json")
        std::cout << out.dump(2) << "\n";
    else
        print_human(kind, out);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite graded lattices, lattice homotheties, and exhaustive coloring searches"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "lathom 0.1.0");

    Globals g;
    app.add_option("--workers", g.workers, "worker threads for enumerations and coloring scans")
        ->check(CLI::Range(1, 256));
    app.add_option("--budget", g.budget, "search node budget")->check(CLI::PositiveNumber);
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"human", "json"}));

    int exit_code = 0;

    // lattice info
    auto* lattice_cmd = app.add_subcommand("lattice", "inspect lattices");
    lattice_cmd->fallthrough();
    auto* info = lattice_cmd->add_subcommand("info", "size, ranks, and rank profile");
    info->fallthrough();
    std::string info_family = "boolean", info_desc;
    long long info_n = 1;
    int info_t = 2;
    info->add_option("--family", info_family, "boolean|chain|partition|division");
    info->add_option("--n", info_n, "ground size / arity / modulus");
    info->add_option("--t", info_t, "chain alphabet size");
    info->add_option("--descriptor", info_desc, "full lattice descriptor as json");
    info->callback([&] {
        json desc = info_desc.empty() ? make_descriptor(info_family, info_t, info_n)
                                      : parse_json_text(info_desc, "descriptor");
        emit(g, "lattice-info", lathom::driver::lattice_info(desc));
    });

    // hom enumerate | verify
    auto* hom = app.add_subcommand("hom", "lattice homothety operations");
    hom->fallthrough();
    auto* henum = hom->add_subcommand("enumerate", "list all lattice homotheties");
    henum->fallthrough();
    std::string he_dom, he_cod;
    int he_scale = 0;
    henum->add_option("--domain", he_dom, "domain descriptor as json")->required();
    henum->add_option("--codomain", he_cod, "codomain descriptor as json")->required();
    henum->add_option("--scale", he_scale, "only maps with this scale factor");
    henum->callback([&] {
        std::optional<int> scale;
        if (he_scale > 0) scale = he_scale;
        emit(g, "hom-enumerate",
             lathom::driver::hom_enumerate(parse_json_text(he_dom, "domain descriptor"),
                                           parse_json_text(he_cod, "codomain descriptor"), scale,
                                           search_opts(g)));
    });

    auto* hverify = hom->add_subcommand("verify", "check the homothety conditions on a map");
    hverify->fallthrough();
    std::string hv_file;
    hverify->add_option("file", hv_file, "map json file (- for stdin)")->required();
    hverify->callback([&] {
        json out = lathom::driver::hom_verify(read_json_file(hv_file));
        emit(g, "hom-verify", out);
        exit_code = out["ok"].get<bool>() ? 0 : 1;
    });

    // embed <family>
    auto* embed = app.add_subcommand("embed", "product embeddings into a larger member");
    embed->fallthrough();
    int em_n1 = 1, em_n2 = 1, em_t = 2;
    long long em_m = 2, em_n = 3;
    for (const char* fam : {"partition", "boolean", "chain", "division"}) {
        auto* sub = embed->add_subcommand(fam, std::string("combine two ") + fam + " lattices");
        sub->fallthrough();
        if (std::string(fam) == "division") {
            sub->add_option("--m", em_m, "first modulus")->required();
            sub->add_option("--n", em_n, "second modulus")->required();
        } else {
            sub->add_option("--n1", em_n1, "first size parameter")->required();
            sub->add_option("--n2", em_n2, "second size parameter")->required();
            if (std::string(fam) == "chain") sub->add_option("--t", em_t, "alphabet size");
        }
        std::string name = fam;
        sub->callback([&, name] {
            json out;
            if (name == "partition")
                out = lathom::driver::embed_partition(em_n1, em_n2);
            else if (name == "boolean")
                out = lathom::driver::embed_boolean(em_n1, em_n2);
            else if (name == "chain")
                out = lathom::driver::embed_chain(em_t, em_n1, em_n2);
            else
                out = lathom::driver::embed_division(em_m, em_n);
            emit(g, "embed", out);
            exit_code = out["ok"].get<bool>() ? 0 : 1;
        });
    }

    // system axioms | compat | rigidity | counterexample
    auto* system = app.add_subcommand("system", "homothety system checks");
    system->fallthrough();
    std::string sy_system = "trivial", sy_family = "boolean";
    int sy_t = 2, sy_bound = 2, sy_m = 1, sy_n = 1, sy_ibound = 1;
    int sy_rn = 1, sy_rbign = 2;
    int sy_ct = 3, sy_cn = 2, sy_cbign = 4;

    auto* axioms = system->add_subcommand("axioms", "identity and composition closure");
    axioms->fallthrough();
    axioms->add_option("--system", sy_system, "trivial|hj");
    axioms->add_option("--family", sy_family, "lattice family of the sequence");
    axioms->add_option("--t", sy_t, "chain alphabet size");
    axioms->add_option("--bound", sy_bound, "largest arity checked");
    axioms->callback([&] {
        json out = lathom::driver::system_axioms(sy_system, sy_family, sy_t, sy_bound,
                                                 search_opts(g));
        emit(g, "axioms", out);
        exit_code = out["ok"].get<bool>() ? 0 : 1;
    });

    auto* compat = system->add_subcommand("compat", "compatibility of a combine embedding");
    compat->fallthrough();
    compat->add_option("--system", sy_system, "trivial|hj");
    compat->add_option("--family", sy_family, "lattice family of the combine");
    compat->add_option("--t", sy_t, "chain alphabet size");
    compat->add_option("--m", sy_m, "first factor parameter");
    compat->add_option("--n", sy_n, "second factor parameter");
    compat->add_option("--i-bound", sy_ibound, "largest arity for the composite condition");
    compat->callback([&] {
        json out = lathom::driver::system_compat(sy_system, sy_family, sy_t, sy_m, sy_n, sy_ibound,
                                                 search_opts(g));
        emit(g, "compat", out);
        exit_code = out["ok"].get<bool>() ? 0 : 1;
    });

    auto* rigidity = system->add_subcommand("rigidity",
                                            "all boolean lattice homotheties are of type HJ");
    rigidity->fallthrough();
    rigidity->add_option("--n", sy_rn, "domain arity");
    rigidity->add_option("--N", sy_rbign, "codomain arity");
    rigidity->callback([&] {
        json out = lathom::driver::system_rigidity(sy_rn, sy_rbign, search_opts(g));
        emit(g, "rigidity", out);
        exit_code = out["ok"].get<bool>() ? 0 : 1;
    });

    auto* counter = system->add_subcommand(
        "counterexample", "search for a chain lattice homothety that is not of type HJ");
    counter->fallthrough();
    counter->add_option("--t", sy_ct, "alphabet size");
    counter->add_option("--n", sy_cn, "domain arity");
    counter->add_option("--N", sy_cbign, "codomain arity");
    counter->callback([&] {
        json out = lathom::driver::system_counterexample(sy_ct, sy_cn, sy_cbign, search_opts(g));
        emit(g, "counterexample", out);
        exit_code = out["found"].get<bool>() ? 0 : 1;
    });

    // mono-search
    auto* mono = app.add_subcommand("mono-search",
                                    "smallest monochromatic restricted homothety for a coloring");
    mono->fallthrough();
    std::string mo_file, mo_system = "trivial";
    int mo_n = 1;
    mono->add_option("coloring", mo_file, "coloring json file (- for stdin)")->required();
    mono->add_option("--system", mo_system, "trivial|hj");
    mono->add_option("--n", mo_n, "domain arity");
    mono->callback([&] {
        json out = lathom::driver::mono_search(read_json_file(mo_file), mo_system, mo_n,
                                               search_opts(g));
        emit(g, "mono-search", out);
        exit_code = out["verdict"] == "witness" ? 0 : 1;
    });

    // l-predicate
    auto* lpred = app.add_subcommand("l-predicate",
                                     "anchored-chain condition over all triples and colorings");
    lpred->fallthrough();
    std::string lp_family = "boolean", lp_system = "trivial";
    int lp_t = 2, lp_n = 2, lp_s = 2, lp_k = 1, lp_ell = 2, lp_bign = 2;
    long long lp_maxcol = 1LL << 30;
    lpred->add_option("--family", lp_family, "lattice family of the sequence");
    lpred->add_option("--t", lp_t, "chain alphabet size");
    lpred->add_option("--n", lp_n, "domain arity");
    lpred->add_option("--s", lp_s, "triple size");
    lpred->add_option("--k", lp_k, "number of colors");
    lpred->add_option("--l", lp_ell, "chain length");
    lpred->add_option("--N", lp_bign, "codomain arity");
    lpred->add_option("--system", lp_system, "trivial|hj");
    lpred->add_option("--max-colorings", lp_maxcol, "cap on the canonical coloring space");
    lpred->callback([&] {
        lathom::RamseyOptions opts;
        opts.search = search_opts(g);
        opts.max_colorings = lp_maxcol;
        json out = lathom::driver::l_predicate(lp_family, lp_t, lp_n, lp_s, lp_k, lp_ell, lp_bign,
                                               lp_system, opts);
        emit(g, "l-predicate", out);
        exit_code = out["holds"].get<bool>() ? 0 : 1;
    });

    // ramsey
    auto* ramsey = app.add_subcommand("ramsey",
                                      "smallest N whose colorings all admit a monochromatic map");
    ramsey->fallthrough();
    std::string ra_family = "boolean", ra_system = "trivial";
    int ra_t = 2, ra_n = 1, ra_k = 2, ra_nmax = 3;
    long long ra_maxcol = 1LL << 30;
    bool ra_autos = false;
    ramsey->add_option("--family", ra_family, "lattice family of the sequence");
    ramsey->add_option("--t", ra_t, "chain alphabet size");
    ramsey->add_option("--system", ra_system, "trivial|hj");
    ramsey->add_option("--n", ra_n, "domain arity");
    ramsey->add_option("--k", ra_k, "number of colors");
    ramsey->add_option("--nmax", ra_nmax, "largest N examined");
    ramsey->add_option("--max-colorings", ra_maxcol, "cap on the canonical coloring space");
    ramsey->add_flag("--automorphisms", ra_autos,
                     "prune colorings by coordinate permutations (boolean/chain only)");
    ramsey->callback([&] {
        lathom::RamseyOptions opts;
        opts.search = search_opts(g);
        opts.max_colorings = ra_maxcol;
        opts.automorphism_reduction = ra_autos;
        json out = lathom::driver::ramsey(ra_family, ra_t, ra_system, ra_n, ra_k, ra_nmax, opts);
        emit(g, "ramsey", out);
        if (!out["budget_stopped_at"].is_null())
            exit_code = 2;
        else
            exit_code = out["value"].is_null() ? 1 : 0;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const lathom::budget_error& e) {
        std::cerr << "budget error: " << e.what();
        if (e.covered() >= 0) {
            std::cerr << " (covered " << e.covered();
            if (e.total() >= 0) std::cerr << " of " << e.total();
            std::cerr << ")";
        }
        std::cerr << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

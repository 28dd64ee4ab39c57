// Command-line front end. One verb per construction: validate, concepts,
// classify, rep, morphism <sub>, example fig1, verify-suite.
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fcad/chains.hpp"
#include "fcad/concepts.hpp"
#include "fcad/json_io.hpp"
#include "fcad/morphisms.hpp"
#include "fcad/representation.hpp"
#include "fcad/subclasses.hpp"
#include "fcad/suite.hpp"

namespace {

using namespace fcad;

int exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::Validation: return 1;
        case ErrorKind::InvalidInput: return 2;
        case ErrorKind::SizeLimit: return 3;
    }
    return 2;
}

void emit(const json& j) { std::cout << dump_json(j); }

json index_array(const IndexSet& s) {
    json a = json::array();
    s.for_each([&](int i) { a.push_back(i); });
    return a;
}

json condition_json(const ConditionResult& c) {
    json j;
    j["pass"] = c.pass;
    if (!c.pass) j["counterexample"] = c.counterexample;
    return j;
}

json axiom_json(const AxiomResult& a) {
    json j;
    j["pass"] = a.pass;
    if (!a.pass) j["counterexample"] = a.counterexample;
    return j;
}

std::string parent_dir(const std::string& path) {
    std::filesystem::path p(path);
    auto d = p.parent_path();
    return d.empty() ? std::string(".") : d.string();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail_input("cannot open '" + path + "' for writing");
    out << text;
}

AttrSet parse_index_set(const std::string& text) {
    AttrSet s;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        std::string tok = text.substr(pos, next - pos);
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
            s.set(v);
        } catch (const std::exception&) {
            fail_input("cannot read '" + tok + "' as an attribute index");
        }
        pos = next + 1;
    }
    return s;
}

AcfContext load_acf(const std::string& path) {
    json doc = read_json_file(path);
    AcfDocument d = acf_document_from_json(doc);
    AcfBuildResult r = build_acf(d.context, d.kernel, d.selection);
    if (!r.ok()) fail_validation(path + ": " + r.failure_summary());
    return r.value();
}

int cmd_validate(const std::string& path, bool as_json) {
    json doc = read_json_file(path);
    AcfDocument d = acf_document_from_json(doc);
    AcfBuildResult r = build_acf(d.context, d.kernel, d.selection);
    if (as_json) {
        json j;
        j["ok"] = r.ok();
        if (!r.error.empty()) j["error"] = r.error;
        json k;
        k["covered"] = r.kernel_report.covered;
        if (!r.kernel_report.covered) k["missing"] = r.kernel_report.missing_key;
        k["contractive"] = axiom_json(r.kernel_report.contractive);
        k["idempotent"] = axiom_json(r.kernel_report.idempotent);
        k["monotone"] = axiom_json(r.kernel_report.monotone);
        j["kernel"] = std::move(k);
        json c;
        c["pass"] = r.ca1_report.pass;
        if (!r.ca1_report.pass) c["detail"] = r.ca1_report.detail;
        j["selection"] = std::move(c);
        emit(j);
    } else {
        std::cout << r.kernel_report.to_string() << r.ca1_report.to_string();
        if (!r.error.empty()) std::cout << "error: " << r.error << "\n";
        std::cout << (r.ok() ? "valid\n" : "invalid\n");
    }
    return r.ok() ? 0 : 1;
}

int cmd_concepts(const std::string& path, bool as_json, const std::string& dot_path) {
    AcfContext acf = load_acf(path);
    ConceptPoset cp = enumerate_concepts(acf);
    const auto& names = acf.context().attributes();
    if (!dot_path.empty()) write_text_file(dot_path, cp.to_dot());
    if (as_json) {
        json j;
        j["count"] = cp.size();
        json cs = json::array();
        for (int i = 0; i < cp.size(); ++i) {
            json c;
            c["attrs"] = index_array(cp.concept_at(i).attrs);
            json w = json::array();
            for (int m : cp.concept_at(i).witnesses) w.push_back(m);
            c["witnesses"] = std::move(w);
            cs.push_back(std::move(c));
        }
        j["concepts"] = std::move(cs);
        emit(j);
    } else {
        for (int i = 0; i < cp.size(); ++i)
            std::cout << cp.concept_at(i).attrs.to_string(names) << "\n";
        std::cout << "count: " << cp.size() << "\n";
    }
    return 0;
}

json semantic_json(const DomainClassification& d) {
    json j;
    j["dcpo"] = d.is_dcpo;
    j["continuous"] = d.is_continuous;
    j["algebraic"] = d.is_algebraic;
    j["pointed"] = d.is_pointed;
    j["topped"] = d.has_top;
    j["bounded_complete"] = d.is_bounded_complete;
    j["semilattice"] = d.is_semilattice;
    j["waybelow_multiplicative"] = d.waybelow_multiplicative;
    j["lattice"] = d.is_lattice;
    j["complete_lattice"] = d.is_complete_lattice;
    return j;
}

int cmd_classify(const std::string& path, bool as_json) {
    AcfContext acf = load_acf(path);
    SubclassReport r = classify_acf(acf);
    if (as_json) {
        json j;
        j["ad"] = condition_json(r.ad);
        j["pointed"] = condition_json(r.pointed);
        j["topped"] = condition_json(r.topped);
        j["bc"] = condition_json(r.bc);
        j["ss1"] = condition_json(r.ss.ss1);
        j["ss2"] = condition_json(r.ss.ss2);
        j["semantic"] = semantic_json(r.semantic);
        emit(j);
    } else {
        std::cout << r.to_string();
    }
    return 0;
}

int cmd_rep(const std::string& path, bool as_json, const std::string& out_path) {
    FinitePoset p = poset_from_json(read_json_file(path));
    RepContext rc = rep(p);
    RoundtripReport rt = verify_roundtrip(rc);
    RoundtripReport br = verify_rep_brackets(rc);
    json doc = acf_to_json(*rc.acf);
    if (as_json) {
        json j;
        j["context"] = std::move(doc);
        json v;
        v["roundtrip"] = rt.ok;
        if (!rt.ok) v["roundtrip_detail"] = rt.detail;
        v["brackets"] = br.ok;
        if (!br.ok) v["brackets_detail"] = br.detail;
        j["verification"] = std::move(v);
        if (!out_path.empty()) write_json_file(out_path, j["context"]);
        emit(j);
    } else {
        if (out_path.empty())
            emit(doc);
        else
            write_json_file(out_path, doc);
        std::cout << "roundtrip: " << (rt.ok ? "ok" : "FAIL " + rt.detail) << "\n";
        std::cout << "brackets: " << (br.ok ? "ok" : "FAIL " + br.detail) << "\n";
    }
    return rt.ok && br.ok ? 0 : 1;
}

int cmd_morphism_validate(const std::string& path, bool as_json) {
    FMorphism h = morphism_from_json(read_json_file(path), parent_dir(path));
    MorphismReport r = validate(h);
    if (as_json) {
        json j;
        j["ar1"] = condition_json(r.ar1);
        j["ar2"] = condition_json(r.ar2);
        j["ar3"] = condition_json(r.ar3);
        j["ar4"] = condition_json(r.ar4);
        j["ar5"] = condition_json(r.ar5);
        j["consistent"] = condition_json(r.consistent);
        j["sampled"] = r.sampled;
        j["pass"] = r.pass();
        emit(j);
    } else {
        std::cout << r.to_string();
    }
    return r.pass() ? 0 : 1;
}

int cmd_morphism_apply(const std::string& path, const std::string& attrs, bool as_json) {
    FMorphism h = morphism_from_json(read_json_file(path), parent_dir(path));
    AttrSet x = parse_index_set(attrs);
    AttrSet y = apply(h, x);
    if (as_json) {
        json j;
        j["input"] = index_array(x);
        j["image"] = index_array(y);
        emit(j);
    } else {
        std::cout << "input: " << x.to_string(h.source().context().attributes()) << "\n";
        std::cout << "image: " << y.to_string(h.target().context().attributes()) << "\n";
    }
    return 0;
}

int cmd_morphism_to_fn(const std::string& path, bool as_json) {
    FMorphism h = morphism_from_json(read_json_file(path), parent_dir(path));
    ConceptFunction f = to_function(h);
    if (as_json) {
        json j;
        json m = json::array();
        for (int v : f.map) m.push_back(v);
        j["map"] = std::move(m);
        emit(j);
    } else {
        const auto& sn = h.source().context().attributes();
        const auto& tn = h.target().context().attributes();
        for (int i = 0; i < f.source->size(); ++i)
            std::cout << f.source->concept_at(i).attrs.to_string(sn) << " -> "
                      << f.target->concept_at(f(i)).attrs.to_string(tn) << "\n";
    }
    return 0;
}

int cmd_morphism_from_fn(const std::string& path, const std::string& out_path) {
    json doc = read_json_file(path);
    std::string base = parent_dir(path);
    auto src = acf_ref_from_json(doc.contains("source") ? doc["source"] : json(), base, "source");
    auto dst = acf_ref_from_json(doc.contains("target") ? doc["target"] : json(), base, "target");
    if (!doc.contains("map") || !doc["map"].is_array()) fail_input("missing 'map' array");
    std::vector<int> map;
    for (const auto& v : doc["map"]) {
        if (!v.is_number_integer()) fail_input("'map' entries must be integers");
        map.push_back(v.get<int>());
    }
    ConceptFunction f{std::make_shared<ConceptPoset>(enumerate_concepts(src)),
                      std::make_shared<ConceptPoset>(enumerate_concepts(dst)), std::move(map)};
    FMorphism h = from_function(f);
    json out = morphism_to_json(h);
    if (out_path.empty())
        emit(out);
    else
        write_json_file(out_path, out);
    return 0;
}

int cmd_morphism_compose(const std::string& outer, const std::string& inner,
                         const std::string& out_path) {
    FMorphism h2 = morphism_from_json(read_json_file(outer), parent_dir(outer));
    FMorphism h1 = morphism_from_json(read_json_file(inner), parent_dir(inner));
    FMorphism h = compose(h2, h1);
    json out = morphism_to_json(h);
    if (out_path.empty())
        emit(out);
    else
        write_json_file(out_path, out);
    return 0;
}

json gap_json(const ChainGapReport& g) {
    json j;
    j["family"] = g.family == ChainFamily::L1 ? "L1" : "L2";
    j["depth"] = g.depth;
    j["witnesses_ok"] = g.witnesses_ok;
    j["truncation_closed"] = g.truncation_closed;
    j["closure_exceeds"] = g.closure_exceeds;
    j["sampled"] = g.sampled;
    j["pass"] = g.pass();
    return j;
}

json discontinuity_json(const DiscontinuityReport& d) {
    json j;
    j["waydown_b_is_bot"] = d.waydown_b_is_bot;
    j["join_of_waydown_b_misses_b"] = d.join_of_waydown_b_misses_b;
    j["l1_chain_compact"] = d.l1_chain_compact;
    j["l1_b_top_not_compact"] = d.l1_b_top_not_compact;
    j["l2_all_compact_but_top1"] = d.l2_all_compact_but_top1;
    j["l2_top1_approximates_top"] = d.l2_top1_approximates_top;
    j["closed_form_matches_oracle"] = d.closed_form_matches_oracle;
    j["pass"] = d.pass();
    return j;
}

int cmd_example_fig1(const std::string& family, int depth, bool as_json) {
    ChainFamily f;
    if (family == "L1")
        f = ChainFamily::L1;
    else if (family == "L2")
        f = ChainFamily::L2;
    else
        fail_input("family must be L1 or L2");
    ChainGapReport gap = verify_chain_gap(f, depth);
    DiscontinuityReport disc = l1_discontinuity_witness();
    if (as_json) {
        json j;
        j["gap"] = gap_json(gap);
        j["discontinuity"] = discontinuity_json(disc);
        emit(j);
    } else {
        std::cout << gap.to_string() << disc.to_string();
    }
    return gap.pass() && disc.pass() ? 0 : 1;
}

BracketMutation parse_mutation(const std::string& name) {
    if (name == "none") return BracketMutation::None;
    if (name == "skip-kernel") return BracketMutation::SkipKernel;
    if (name == "shrink-kernel") return BracketMutation::ShrinkKernel;
    fail_input("mutation must be none, skip-kernel or shrink-kernel");
}

int cmd_suite(const SuiteConfig& cfg, bool as_json) {
    SuiteReport report = run_suite(cfg);
    if (as_json)
        emit(report.to_json());
    else
        std::cout << report.to_text();
    return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"attribute continuous formal context toolkit"};
    app.require_subcommand(1);

    bool as_json = false;
    std::string dot_path;
    std::uint64_t seed = 1;
    int depth = 32;
    app.add_flag("--json", as_json, "machine-readable output");
    app.add_option("--dot", dot_path, "write a DOT export of the concept poset");
    app.add_option("--seed", seed, "random seed");
    app.add_option("--depth", depth, "chain truncation depth");

    std::string in_path, in_path2, out_path, attrs, family = "L1";

    auto* validate_cmd = app.add_subcommand("validate", "check a context document");
    validate_cmd->add_option("file", in_path, "context JSON document")->required();
    validate_cmd->fallthrough();

    auto* concepts_cmd = app.add_subcommand("concepts", "enumerate the concepts of a context");
    concepts_cmd->add_option("file", in_path, "context JSON document")->required();
    concepts_cmd->fallthrough();

    auto* classify_cmd = app.add_subcommand("classify", "subclass conditions and order classification");
    classify_cmd->add_option("file", in_path, "context JSON document")->required();
    classify_cmd->fallthrough();

    auto* rep_cmd = app.add_subcommand("rep", "build the representing context of a poset");
    rep_cmd->add_option("file", in_path, "poset JSON document")->required();
    rep_cmd->add_option("-o,--output", out_path, "write the context document here");
    rep_cmd->fallthrough();

    auto* morphism_cmd = app.add_subcommand("morphism", "morphism operations");
    morphism_cmd->require_subcommand(1);
    morphism_cmd->fallthrough();

    auto* m_validate = morphism_cmd->add_subcommand("validate", "check the morphism conditions");
    m_validate->add_option("file", in_path, "morphism JSON document")->required();
    m_validate->fallthrough();

    auto* m_apply = morphism_cmd->add_subcommand("apply", "image of an attribute set");
    m_apply->add_option("file", in_path, "morphism JSON document")->required();
    m_apply->add_option("attrs", attrs, "comma-separated attribute indices");
    m_apply->fallthrough();

    auto* m_to_fn = morphism_cmd->add_subcommand("to-fn", "induced function on concepts");
    m_to_fn->add_option("file", in_path, "morphism JSON document")->required();
    m_to_fn->fallthrough();

    auto* m_from_fn = morphism_cmd->add_subcommand("from-fn", "morphism from a concept function");
    m_from_fn->add_option("file", in_path, "function JSON document")->required();
    m_from_fn->add_option("-o,--output", out_path, "write the morphism document here");
    m_from_fn->fallthrough();

    auto* m_compose = morphism_cmd->add_subcommand("compose", "compose two morphisms");
    m_compose->add_option("outer", in_path, "morphism applied second")->required();
    m_compose->add_option("inner", in_path2, "morphism applied first")->required();
    m_compose->add_option("-o,--output", out_path, "write the composite here");
    m_compose->fallthrough();

    auto* example_cmd = app.add_subcommand("example", "built-in evidence runs");
    example_cmd->require_subcommand(1);
    example_cmd->fallthrough();
    auto* fig1_cmd = example_cmd->add_subcommand("fig1", "chain-with-side-point evidence");
    fig1_cmd->add_option("--family", family, "L1 or L2");
    fig1_cmd->fallthrough();

    SuiteConfig cfg;
    std::vector<std::string> checks;
    std::string mutate = "none";
    auto* suite_cmd = app.add_subcommand("verify-suite", "run the property-check suite");
    suite_cmd->add_option("--count", cfg.count, "random instances per check");
    suite_cmd->add_option("--max-attrs", cfg.max_attrs, "attribute bound");
    suite_cmd->add_option("--max-objects", cfg.max_objects, "object bound");
    suite_cmd->add_option("--max-poset", cfg.max_poset, "poset size bound");
    suite_cmd->add_option("--checks", checks, "subset of checks to run")->delimiter(',');
    suite_cmd->add_option("--mutate", mutate, "bracket corruption: none, skip-kernel, shrink-kernel");
    suite_cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int r = app.exit(e);
        return r == 0 ? 0 : 2;
    }

    try {
        if (*validate_cmd) return cmd_validate(in_path, as_json);
        if (*concepts_cmd) return cmd_concepts(in_path, as_json, dot_path);
        if (*classify_cmd) return cmd_classify(in_path, as_json);
        if (*rep_cmd) return cmd_rep(in_path, as_json, out_path);
        if (*m_validate) return cmd_morphism_validate(in_path, as_json);
        if (*m_apply) return cmd_morphism_apply(in_path, attrs, as_json);
        if (*m_to_fn) return cmd_morphism_to_fn(in_path, as_json);
        if (*m_from_fn) return cmd_morphism_from_fn(in_path, out_path);
        if (*m_compose) return cmd_morphism_compose(in_path, in_path2, out_path);
        if (*fig1_cmd) return cmd_example_fig1(family, depth, as_json);
        if (*suite_cmd) {
            cfg.seed = seed;
            cfg.depth = depth;
            if (!checks.empty()) cfg.checks = checks;
            cfg.mutate = parse_mutation(mutate);
            return cmd_suite(cfg, as_json);
        }
    } catch (const fcad::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    }
    return 2;
}

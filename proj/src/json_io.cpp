#include "fcad/json_io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

namespace fcad {

namespace {

const json& need(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) fail_input(std::string("missing field '") + key + "'");
    return *it;
}

std::vector<std::string> string_list(const json& j, const char* what) {
    if (!j.is_array()) fail_input(std::string(what) + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& e : j) {
        if (!e.is_string()) fail_input(std::string(what) + " must be an array of strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

IndexSet index_set(const json& j, const char* what) {
    if (!j.is_array()) fail_input(std::string(what) + " must be an array of indices");
    IndexSet s;
    for (const auto& e : j) {
        if (!e.is_number_integer() || e.get<long long>() < 0)
            fail_input(std::string(what) + " must hold nonnegative integers");
        s.set(e.get<int>());
    }
    return s;
}

json index_array(const IndexSet& s) {
    json a = json::array();
    s.for_each([&](int i) { a.push_back(i); });
    return a;
}

std::vector<std::pair<int, int>> pair_list(const json& j, const char* what) {
    if (!j.is_array()) fail_input(std::string(what) + " must be an array of index pairs");
    std::vector<std::pair<int, int>> out;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            fail_input(std::string(what) + " entries must be [index, index] pairs");
        out.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return out;
}

json pair_array(const std::vector<std::pair<int, int>>& v) {
    json a = json::array();
    for (auto [x, y] : v) a.push_back(json::array({x, y}));
    return a;
}

}  // namespace

json context_to_json(const FormalContext& ctx) {
    json j;
    j["objects"] = ctx.objects();
    j["attributes"] = ctx.attributes();
    j["incidence"] = pair_array(ctx.incidence_pairs());
    return j;
}

FormalContext context_from_json(const json& j) {
    if (!j.is_object()) fail_input("context document must be a JSON object");
    return FormalContext::make(string_list(need(j, "objects"), "objects"),
                               string_list(need(j, "attributes"), "attributes"),
                               pair_list(need(j, "incidence"), "incidence"));
}

AcfDocument acf_document_from_json(const json& j) {
    AcfDocument d;
    d.context = context_from_json(j);

    const json& k = need(j, "kernel");
    std::string type = need(k, "type").is_string() ? k["type"].get<std::string>() : "";
    if (type == "identity") {
        d.kernel = KernelOperator::identity();
    } else if (type == "table") {
        std::unordered_map<IndexSet, IndexSet, IndexSetHash> table;
        const json& entries = need(k, "entries");
        if (!entries.is_array()) fail_input("kernel entries must be an array");
        for (const auto& e : entries)
            table[index_set(need(e, "closed"), "kernel closed set")] =
                index_set(need(e, "image"), "kernel image");
        d.kernel = KernelOperator::from_table(std::move(table));
    } else {
        fail_input("kernel type must be 'identity' or 'table'");
    }

    const json& sel = need(j, "selection");
    if (!sel.is_array()) fail_input("selection must be an array of index lists");
    std::vector<AttrSet> members;
    for (const auto& m : sel) members.push_back(index_set(m, "selection member"));
    d.selection = Selection::make(std::move(members));
    return d;
}

json acf_to_json(const FormalContext& ctx, const KernelOperator& tau, const Selection& sel) {
    json j = context_to_json(ctx);
    json k;
    if (tau.kind() == KernelOperator::Kind::Identity) {
        k["type"] = "identity";
    } else {
        k["type"] = "table";
        // deterministic order: sort keys canonically
        std::vector<const IndexSet*> keys;
        for (const auto& [c, i] : tau.table()) keys.push_back(&c);
        std::sort(keys.begin(), keys.end(),
                  [](const IndexSet* a, const IndexSet* b) { return *a < *b; });
        json entries = json::array();
        for (const IndexSet* c : keys) {
            json e;
            e["closed"] = index_array(*c);
            e["image"] = index_array(tau.table().at(*c));
            entries.push_back(std::move(e));
        }
        k["entries"] = std::move(entries);
    }
    j["kernel"] = std::move(k);
    json members = json::array();
    for (const AttrSet& m : sel.members()) members.push_back(index_array(m));
    j["selection"] = std::move(members);
    return j;
}

json acf_to_json(const AcfContext& acf) {
    return acf_to_json(acf.context(), acf.kernel(), acf.selection());
}

json poset_to_json(const FinitePoset& p) {
    json j;
    j["elements"] = p.elements();
    j["covers"] = pair_array(p.cover_pairs());
    return j;
}

FinitePoset poset_from_json(const json& j) {
    if (!j.is_object()) fail_input("poset document must be a JSON object");
    std::vector<std::string> elements = string_list(need(j, "elements"), "elements");
    bool has_leq = j.contains("leq");
    bool has_covers = j.contains("covers");
    if (has_leq == has_covers) fail_input("poset document needs exactly one of 'leq' or 'covers'");
    if (has_leq) return FinitePoset::from_leq_pairs(std::move(elements), pair_list(j["leq"], "leq"));
    return FinitePoset::from_covers(std::move(elements), pair_list(j["covers"], "covers"));
}

json morphism_to_json(const FMorphism& h) {
    json j;
    j["source"] = acf_to_json(h.source());
    j["target"] = acf_to_json(h.target());
    j["pairs"] = pair_array(h.pairs());
    return j;
}

std::shared_ptr<const AcfContext> acf_ref_from_json(const json& j, const std::string& base_dir,
                                                    const char* what) {
    json doc;
    if (j.is_string()) {
        std::filesystem::path p(j.get<std::string>());
        if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
        doc = read_json_file(p.string());
    } else if (j.is_object()) {
        doc = j;
    } else {
        fail_input(std::string(what) + " must be an inline document or a file path");
    }
    AcfDocument d = acf_document_from_json(doc);
    AcfBuildResult r = build_acf(d.context, d.kernel, d.selection);
    if (!r.ok()) fail_validation(std::string(what) + " context invalid: " + r.failure_summary());
    return std::make_shared<AcfContext>(r.value());
}

FMorphism morphism_from_json(const json& j, const std::string& base_dir) {
    if (!j.is_object()) fail_input("morphism document must be a JSON object");
    auto src = acf_ref_from_json(need(j, "source"), base_dir, "source");
    auto dst = acf_ref_from_json(need(j, "target"), base_dir, "target");
    std::vector<AttrSet> img(static_cast<std::size_t>(src->selection().size()));
    for (auto [f, x] : pair_list(need(j, "pairs"), "pairs")) {
        if (f < 0 || f >= src->selection().size())
            fail_input("pair mentions selection member " + std::to_string(f) +
                       " outside the source selection");
        if (x < 0 || x >= dst->context().attribute_count())
            fail_input("pair mentions attribute " + std::to_string(x) + " outside the target");
        img[static_cast<std::size_t>(f)].set(x);
    }
    return FMorphism(std::move(src), std::move(dst), std::move(img));
}

json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail_input("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        fail_input("cannot parse " + path + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail_input("cannot write " + path);
    out << dump_json(j);
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace fcad

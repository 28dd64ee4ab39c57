#pragma once

#include <string>

#include <json.hpp>

#include "fcad/kernel.hpp"
#include "fcad/morphisms.hpp"
#include "fcad/poset.hpp"

namespace fcad {

// Insertion-ordered documents keep the output byte-stable.
using json = nlohmann::ordered_json;

// Plain context: objects, attributes, incidence pairs [object, attribute].
json context_to_json(const FormalContext& ctx);
FormalContext context_from_json(const json& j);

// Full document: context fields plus kernel and selection. Indices are
// 0-based and sets are serialized sorted ascending.
struct AcfDocument {
    FormalContext context;
    KernelOperator kernel;
    Selection selection;
};

AcfDocument acf_document_from_json(const json& j);
json acf_to_json(const AcfContext& acf);
json acf_to_json(const FormalContext& ctx, const KernelOperator& tau, const Selection& sel);

// Poset: elements plus either the full order as `leq` pairs or a `covers`
// list (closed transitively on load). Writing emits covers.
json poset_to_json(const FinitePoset& p);
FinitePoset poset_from_json(const json& j);

// A context reference: an inline document or a file path string resolved
// against base_dir. Builds and validates; Validation if the build fails.
std::shared_ptr<const AcfContext> acf_ref_from_json(const json& j,
                                                    const std::string& base_dir = ".",
                                                    const char* what = "context");

// Morphism: source and target contexts (inline documents or file path
// strings resolved against base_dir) plus [member, attribute] pairs.
json morphism_to_json(const FMorphism& h);
FMorphism morphism_from_json(const json& j, const std::string& base_dir = ".");

// File plumbing; parse problems are InvalidInput.
json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);
std::string dump_json(const json& j);  // two-space indent, trailing newline

}  // namespace fcad

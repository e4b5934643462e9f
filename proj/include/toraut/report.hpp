#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "toraut/automorphism.hpp"
#include "toraut/class_group.hpp"
#include "toraut/cone.hpp"
#include "toraut/surface.hpp"

namespace toraut {

struct AnalyzeOptions {
    bool reduce = false;
    std::size_t cap = kDefaultCap;
    unsigned jobs = 1;
    bool verbose = false;
    bool force_surface = false;
};

struct ParsedInput {
    std::size_t lattice_rank = 0;
    std::vector<IntVec> rays;
    bool rays_are_dual = false;
    bool reduce = false;
};

// Parse the JSON input document:
//   {"lattice_rank": n, "rays": [[...], ...],
//    "rays_are_dual": bool?, "reduce": bool?}
ParsedInput parse_input(const std::string& json_text);

// 2D duality: generators of σ∨ to the rays of σ (rotate each generator
// onto the boundary of the dual half-planes). Exactly two independent
// generators are required.
std::vector<IntVec> dual_rays_to_primal(std::size_t n, const std::vector<IntVec>& dual);

struct SurfaceSection {
    SurfaceNormalForm form;
    SurfaceVerdict verdict;
    std::optional<bool> operator_check; // only in the non-connected case
    bool agrees_with_general = false;
};

// Everything the CLI reports for one cone. JSON key order is canonical
// (the insertion order of to_json); schema_version tracks the layout.
struct AnalysisReport {
    static constexpr int schema_version = 1;

    std::size_t lattice_rank = 0;
    std::vector<IntVec> rays; // normalized
    ConeValidationReport validation;
    std::optional<DegenerateSplit> split;
    ClassGroup group;
    std::vector<ClassElement> ray_classes;
    std::vector<std::vector<std::size_t>> blocks;
    Verdict verdict;
    std::optional<ComponentGroup> comp_group; // absent for degenerate input
    std::optional<RemarkIdentity> remark;
    std::optional<NeutralComponentSummary> neutral;
    std::optional<SurfaceSection> surface;
    bool verbose = false;
    std::vector<AdmissiblePermutation> admissible;  // verbose only
    std::vector<Permutation> class_admissible;      // verbose only
    double analyze_ms = 0.0;

    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
    int exit_code() const;
};

AnalysisReport analyze(const ParsedInput& in, const AnalyzeOptions& opt);

int exit_code_for(Connectedness s);

} // namespace toraut

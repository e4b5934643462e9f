#pragma once

#include <string>
#include <vector>

#include "toraut/report.hpp"

namespace toraut {

// Built-in corpus: affine-space-<n>, ex1..ex5, torus-<n>. Each case
// carries the expected invariants; run_example analyzes the cone and
// checks them, returning the failures (empty = pass).
struct ExampleResult {
    std::string name;
    AnalysisReport report;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

std::vector<std::string> example_names(); // the "all" set

bool is_example_name(const std::string& name);

ExampleResult run_example(const std::string& name, const AnalyzeOptions& opt = {});

} // namespace toraut

// toraut: connectedness of Aut(X) for an affine toric variety X, from the
// rays of its cone. See README.md for the input format and exit codes.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "toraut/errors.hpp"
#include "toraut/examples.hpp"
#include "toraut/report.hpp"

namespace {

constexpr int kExitInputError = 2;
constexpr int kExitCapExceeded = 3;
constexpr int kExitInternalError = 1;
constexpr int kExitAssertionFailed = 1;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw toraut::input_error("cannot open input file \"" + path + "\"");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void emit_error(const std::string& kind, const std::string& message, bool json_mode) {
    if (json_mode) {
        nlohmann::ordered_json j;
        j["schema_version"] = toraut::AnalysisReport::schema_version;
        j["error"] = {{"kind", kind}, {"message", message}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cerr << "error (" << kind << "): " << message << "\n";
    }
}

int run_analyze(const std::string& path, const toraut::AnalyzeOptions& opt, bool json_mode) {
    const toraut::ParsedInput in = toraut::parse_input(read_input(path));
    const toraut::AnalysisReport rep = toraut::analyze(in, opt);
    if (json_mode)
        std::cout << rep.to_json().dump(2) << "\n";
    else
        std::cout << rep.to_text();
    return rep.exit_code();
}

int run_examples(const std::string& name, const toraut::AnalyzeOptions& opt, bool json_mode) {
    std::vector<std::string> names;
    if (name == "all")
        names = toraut::example_names();
    else if (toraut::is_example_name(name))
        names = {name};
    else
        throw toraut::input_error("unknown example \"" + name + "\"");

    bool all_passed = true;
    nlohmann::ordered_json results = nlohmann::ordered_json::array();
    for (const std::string& n : names) {
        const toraut::ExampleResult res = toraut::run_example(n, opt);
        all_passed = all_passed && res.passed();
        if (json_mode) {
            nlohmann::ordered_json r;
            r["name"] = res.name;
            r["passed"] = res.passed();
            r["failures"] = res.failures;
            r["report"] = res.report.to_json();
            results.push_back(r);
        } else {
            std::cout << (res.passed() ? "PASS " : "FAIL ") << res.name << ": "
                      << toraut::to_string(res.report.verdict.status);
            if (res.report.comp_group)
                std::cout << ", component group " << res.report.comp_group->name;
            std::cout << "\n";
            for (const std::string& f : res.failures) std::cout << "      " << f << "\n";
        }
    }
    if (json_mode) {
        nlohmann::ordered_json j;
        j["schema_version"] = toraut::AnalysisReport::schema_version;
        j["all_passed"] = all_passed;
        j["results"] = results;
        std::cout << j.dump(2) << "\n";
    }
    return all_passed ? 0 : kExitAssertionFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"connectedness and component group of Aut(X) for affine toric varieties"};
    app.require_subcommand(1);

    toraut::AnalyzeOptions opt;
    std::string format = "text";
    std::string input_path;
    std::string example_name;

    CLI::App* analyze = app.add_subcommand("analyze", "analyze a cone from a JSON file ('-' = stdin)");
    analyze->add_option("input", input_path, "input file")->required();
    analyze->add_flag("--reduce", opt.reduce, "drop non-extreme generators instead of rejecting");
    analyze->add_option("--cap", opt.cap, "ray-count cap for permutation enumeration");
    analyze->add_option("--jobs", opt.jobs, "worker threads for the permutation scan");
    analyze->add_flag("--verbose", opt.verbose, "include both criteria's intermediate data");
    analyze->add_flag("--surface", opt.force_surface, "require the 2D surface normal-form path");
    analyze->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* examples = app.add_subcommand("examples", "run the built-in example corpus");
    examples->add_option("name", example_name, "example name or 'all'")->required();
    examples->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    examples->add_flag("--verbose", opt.verbose, "include both criteria's intermediate data");

    CLI11_PARSE(app, argc, argv);
    const bool json_mode = format == "json";

    try {
        if (app.got_subcommand(analyze)) return run_analyze(input_path, opt, json_mode);
        return run_examples(example_name, opt, json_mode);
    } catch (const toraut::cap_exceeded& e) {
        emit_error("cap_exceeded", e.what(), json_mode);
        return kExitCapExceeded;
    } catch (const toraut::input_error& e) {
        emit_error("input_error", e.what(), json_mode);
        return kExitInputError;
    } catch (const std::exception& e) {
        emit_error("internal_error", e.what(), json_mode);
        return kExitInternalError;
    }
}

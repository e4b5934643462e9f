#include "toraut/examples.hpp"

#include <sstream>

#include "toraut/errors.hpp"

namespace toraut {

namespace {

IntVec iv(std::initializer_list<long long> xs) {
    IntVec v;
    for (long long x : xs) v.emplace_back(x);
    return v;
}

struct Check {
    std::vector<std::string>& failures;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

bool parse_suffix(const std::string& name, const std::string& prefix, std::size_t& k) {
    if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return false;
    const std::string tail = name.substr(prefix.size());
    if (tail.empty() || tail.size() > 2) return false;
    for (char c : tail)
        if (c < '0' || c > '9') return false;
    k = static_cast<std::size_t>(std::stoul(tail));
    return k >= 1 && k <= 12;
}

ParsedInput example_input(const std::string& name) {
    ParsedInput in;
    std::size_t k = 0;
    if (parse_suffix(name, "affine-space-", k)) {
        in.lattice_rank = k;
        for (std::size_t i = 0; i < k; ++i) {
            IntVec e(k, Int(0));
            e[i] = 1;
            in.rays.push_back(std::move(e));
        }
        return in;
    }
    if (parse_suffix(name, "torus-", k)) {
        in.lattice_rank = k;
        return in;
    }
    if (name == "ex1") {
        in.lattice_rank = 2;
        in.rays = {iv({0, 1}), iv({2, -1})};
        return in;
    }
    if (name == "ex2") {
        in.lattice_rank = 2;
        in.rays = {iv({0, 1}), iv({3, -2})};
        return in;
    }
    if (name == "ex3") {
        in.lattice_rank = 2;
        in.rays = {iv({0, 1}), iv({5, -2})};
        return in;
    }
    if (name == "ex4") {
        in.lattice_rank = 3;
        in.rays = {iv({1, -1, 0}), iv({1, 0, -1}), iv({0, 1, 0}), iv({0, 0, 1})};
        return in;
    }
    if (name == "ex5") {
        in.lattice_rank = 3;
        in.rays = {iv({2, 0, 1}), iv({0, 2, 1}), iv({0, 0, 1})};
        return in;
    }
    throw input_error("unknown example \"" + name + "\"");
}

std::string torsion_text(const ClassGroup& g) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < g.torsion().size(); ++i)
        os << (i ? "," : "") << g.torsion()[i];
    os << "]";
    return os.str();
}

void check_class_group(Check& c, const AnalysisReport& r, std::size_t free_rank,
                       const std::vector<Int>& torsion) {
    c.expect(r.group.free_rank() == free_rank,
             "free rank " + std::to_string(r.group.free_rank()) + ", expected " +
                 std::to_string(free_rank));
    c.expect(r.group.torsion() == torsion, "torsion " + torsion_text(r.group));
}

void check_surface(Check& c, const AnalysisReport& r, long long a, long long b) {
    if (!r.surface) {
        c.failures.push_back("surface section missing");
        return;
    }
    c.expect(r.surface->form.a == a && r.surface->form.b == b, "surface normal form mismatch");
    c.expect(r.surface->agrees_with_general, "surface verdict disagrees with general pipeline");
}

} // namespace

std::vector<std::string> example_names() {
    return {"affine-space-1", "affine-space-2", "affine-space-3", "affine-space-4",
            "ex1",            "ex2",            "ex3",            "ex4",
            "ex5",            "torus-1",        "torus-2",        "torus-3"};
}

bool is_example_name(const std::string& name) {
    std::size_t k = 0;
    if (parse_suffix(name, "affine-space-", k) || parse_suffix(name, "torus-", k)) return true;
    return name == "ex1" || name == "ex2" || name == "ex3" || name == "ex4" || name == "ex5";
}

ExampleResult run_example(const std::string& name, const AnalyzeOptions& opt) {
    ExampleResult res;
    res.name = name;
    res.report = analyze(example_input(name), opt);
    const AnalysisReport& r = res.report;
    Check c{res.failures};

    std::size_t k = 0;
    if (parse_suffix(name, "affine-space-", k)) {
        c.expect(r.verdict.status == Connectedness::Connected, "expected Connected");
        check_class_group(c, r, 0, {});
        c.expect(r.comp_group && r.comp_group->order == 1, "expected trivial component group");
        c.expect(r.blocks.size() == 1 && r.blocks[0].size() == k, "expected one zero-class block");
        return res;
    }
    if (parse_suffix(name, "torus-", k)) {
        c.expect(r.verdict.status == Connectedness::NotConnectedDegenerate,
                 "expected NotConnectedDegenerate");
        c.expect(r.split && r.split->q == k, "expected torus factor of dimension " +
                                                 std::to_string(k));
        c.expect(r.split && r.split->reduced.n == 0, "expected zero reduced cone");
        c.expect(!r.comp_group, "component group must not be computed for degenerate input");
        return res;
    }

    auto classes_are = [&](const std::vector<std::vector<long long>>& want_torsion,
                           const std::vector<std::vector<long long>>& want_free) {
        if (r.ray_classes.size() != want_torsion.size()) return false;
        for (std::size_t i = 0; i < r.ray_classes.size(); ++i) {
            const ClassElement& e = r.ray_classes[i];
            if (e.torsion_part.size() != want_torsion[i].size()) return false;
            for (std::size_t j = 0; j < want_torsion[i].size(); ++j)
                if (e.torsion_part[j] != want_torsion[i][j]) return false;
            if (e.free_part.size() != want_free[i].size()) return false;
            for (std::size_t j = 0; j < want_free[i].size(); ++j)
                if (e.free_part[j] != want_free[i][j]) return false;
        }
        return true;
    };

    if (name == "ex1") {
        c.expect(r.verdict.status == Connectedness::Connected, "expected Connected");
        check_class_group(c, r, 0, {Int(2)});
        c.expect(classes_are({{1}, {1}}, {{}, {}}), "expected classes (1,1) in Z/2");
        c.expect(r.comp_group && r.comp_group->order == 1, "expected trivial component group");
        check_surface(c, r, 1, 2);
    } else if (name == "ex2") {
        c.expect(r.verdict.status == Connectedness::NotConnected, "expected NotConnected");
        check_class_group(c, r, 0, {Int(3)});
        c.expect(classes_are({{2}, {1}}, {{}, {}}), "expected classes (2,1) in Z/3");
        c.expect(r.comp_group && r.comp_group->order == 2 && r.comp_group->name == "Z/2",
                 "expected component group Z/2");
        check_surface(c, r, 2, 3);
        c.expect(r.surface && r.surface->operator_check && *r.surface->operator_check,
                 "expected the ray-swap operator to verify");
    } else if (name == "ex3") {
        c.expect(r.verdict.status == Connectedness::Connected, "expected Connected");
        check_class_group(c, r, 0, {Int(5)});
        c.expect(r.comp_group && r.comp_group->order == 1, "expected trivial component group");
        check_surface(c, r, 2, 5);
    } else if (name == "ex4") {
        c.expect(r.verdict.status == Connectedness::NotConnected, "expected NotConnected");
        check_class_group(c, r, 1, {});
        c.expect(classes_are({{}, {}, {}, {}}, {{1}, {-1}, {1}, {-1}}),
                 "expected classes (1,-1,1,-1) in Z");
        c.expect(r.blocks == std::vector<std::vector<std::size_t>>{{0, 2}, {1, 3}},
                 "expected blocks {1,3},{2,4}");
        c.expect(r.comp_group && r.comp_group->order == 2 && r.comp_group->name == "Z/2",
                 "expected component group Z/2");
    } else if (name == "ex5") {
        c.expect(r.verdict.status == Connectedness::NotConnected, "expected NotConnected");
        check_class_group(c, r, 0, {Int(2), Int(2)});
        // The three ray classes are the three nonzero elements of
        // (Z/2)^2, i.e. nonzero and pairwise distinct.
        bool all_nonzero = true, distinct = true;
        for (std::size_t i = 0; i < r.ray_classes.size(); ++i) {
            if (r.ray_classes[i].is_zero()) all_nonzero = false;
            for (std::size_t j = i + 1; j < r.ray_classes.size(); ++j)
                if (r.ray_classes[i] == r.ray_classes[j]) distinct = false;
        }
        c.expect(r.ray_classes.size() == 3 && all_nonzero && distinct,
                 "expected the three nonzero classes of (Z/2)^2");
        c.expect(r.comp_group && r.comp_group->order == 6 && !r.comp_group->abelian &&
                     r.comp_group->name == "S3",
                 "expected component group S3");
        // r! bound attained for r = 3.
        c.expect(r.comp_group && r.comp_group->order == 6 && r.rays.size() == 3,
                 "expected the r! bound to be attained");
        c.expect(r.remark && r.remark->equal && r.remark->lhs == 6,
                 "expected remark identity 6 = 6");
    }
    return res;
}

} // namespace toraut

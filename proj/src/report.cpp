#include "toraut/report.hpp"

#include <chrono>
#include <limits>
#include <sstream>

#include "toraut/errors.hpp"
#include "toraut/hermite.hpp"

namespace toraut {

namespace {

using json = nlohmann::ordered_json;

json int_to_json(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return static_cast<std::int64_t>(v);
    return v.str();
}

json vec_to_json(const IntVec& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(int_to_json(x));
    return a;
}

json rays_to_json(const std::vector<IntVec>& rays) {
    json a = json::array();
    for (const IntVec& r : rays) a.push_back(vec_to_json(r));
    return a;
}

json matrix_to_json(const IntMatrix& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vec_to_json(m.row(i)));
    return a;
}

json class_to_json(const ClassElement& e) {
    json o;
    o["free"] = vec_to_json(e.free_part);
    o["torsion"] = vec_to_json(e.torsion_part);
    return o;
}

json tau_to_json(const Permutation& tau) {
    json a = json::array();
    for (std::size_t x : tau) a.push_back(x + 1); // 1-based in reports
    return a;
}

std::string class_to_text(const ClassElement& e) {
    if (e.free_part.empty() && e.torsion_part.empty()) return "0";
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (const Int& x : e.free_part) {
        os << (first ? "" : ",") << x;
        first = false;
    }
    for (const Int& x : e.torsion_part) {
        os << (first ? "" : ",") << x;
        first = false;
    }
    os << ")";
    return os.str();
}

std::string vec_to_text(const IntVec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

Int json_to_int(const json& j, const char* what) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    if (j.is_string()) return Int(j.get<std::string>()); // big integers as strings
    throw input_error(std::string(what) + " must be an integer");
}

} // namespace

ParsedInput parse_input(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw input_error("input must be a JSON object");

    ParsedInput in;
    if (!doc.contains("lattice_rank") || !doc["lattice_rank"].is_number_integer() ||
        doc["lattice_rank"].get<std::int64_t>() < 0)
        throw input_error("\"lattice_rank\" must be a nonnegative integer");
    in.lattice_rank = doc["lattice_rank"].get<std::size_t>();

    if (!doc.contains("rays") || !doc["rays"].is_array())
        throw input_error("\"rays\" must be an array of integer vectors");
    for (const json& row : doc["rays"]) {
        if (!row.is_array() || row.size() != in.lattice_rank)
            throw input_error("every ray must be an array of length \"lattice_rank\"");
        IntVec v;
        for (const json& x : row) v.push_back(json_to_int(x, "ray entry"));
        in.rays.push_back(std::move(v));
    }

    if (doc.contains("rays_are_dual")) {
        if (!doc["rays_are_dual"].is_boolean())
            throw input_error("\"rays_are_dual\" must be a boolean");
        in.rays_are_dual = doc["rays_are_dual"].get<bool>();
    }
    if (doc.contains("reduce")) {
        if (!doc["reduce"].is_boolean()) throw input_error("\"reduce\" must be a boolean");
        in.reduce = doc["reduce"].get<bool>();
    }
    if (in.rays_are_dual && in.lattice_rank != 2)
        throw input_error("\"rays_are_dual\" is supported for lattice rank 2 only");
    return in;
}

std::vector<IntVec> dual_rays_to_primal(std::size_t n, const std::vector<IntVec>& dual) {
    if (n != 2) throw input_error("dual-ray input is supported for lattice rank 2 only");
    if (dual.size() != 2)
        throw input_error("dual-ray input requires exactly two generators of the dual cone");
    IntVec u1 = dual[0], u2 = dual[1];
    const Int det = u1[0] * u2[1] - u1[1] * u2[0];
    if (det == 0) throw input_error("dual-cone generators must be linearly independent");
    if (det < 0) std::swap(u1, u2);
    // sigma = { v : <v,u> >= 0 for u in sigma_dual }; its rays are the
    // generators rotated onto the two boundary lines.
    return {IntVec{-u1[1], u1[0]}, IntVec{u2[1], -u2[0]}};
}

AnalysisReport analyze(const ParsedInput& in, const AnalyzeOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();

    AnalysisReport rep;
    rep.verbose = opt.verbose;

    const std::vector<IntVec> rays =
        in.rays_are_dual ? dual_rays_to_primal(in.lattice_rank, in.rays) : in.rays;
    const bool reduce = opt.reduce || in.reduce;
    BuildResult built = build_cone(in.lattice_rank, rays, reduce);
    const Cone& cone = built.cone;

    rep.lattice_rank = cone.n;
    rep.rays = cone.rays;
    rep.validation = built.report;

    auto cg = class_group(cone);
    rep.group = std::move(cg.first);
    rep.ray_classes = std::move(cg.second);
    rep.blocks = class_blocks(cone);

    if (!built.report.full_dimensional) {
        rep.split = split_degenerate(cone);
        rep.verdict = connectedness_verdict(cone, opt.cap, opt.jobs);
        rep.analyze_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        return rep;
    }

    rep.verdict = connectedness_verdict(cone, opt.cap, opt.jobs);
    rep.comp_group = component_group(cone, opt.cap);
    rep.remark = remark_order_identity(cone, opt.cap, opt.jobs);
    rep.neutral = neutral_component_summary(cone);

    const bool surface_applicable = cone.n == 2 && cone.ray_count() == 2;
    if (opt.force_surface && !surface_applicable)
        throw input_error("--surface requires a full-dimensional 2D cone with two rays");
    if (surface_applicable) {
        SurfaceSection s;
        s.form = surface_normal_form(cone);
        s.verdict = surface_verdict(s.form);
        if (s.verdict.status == Connectedness::NotConnected)
            s.operator_check = remark_operator_check(s.form);
        s.agrees_with_general = s.verdict.status == rep.verdict.status;
        rep.surface = std::move(s);
    }

    if (opt.verbose) {
        rep.admissible = admissible_permutations(cone, opt.cap, opt.jobs);
        rep.class_admissible = class_admissible_permutations(cone, rep.group, opt.cap);
    }

    rep.analyze_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

nlohmann::ordered_json AnalysisReport::to_json() const {
    json j;
    j["schema_version"] = schema_version;

    j["input"] = {{"lattice_rank", lattice_rank}, {"rays", rays_to_json(rays)}};

    json rejected = json::array();
    for (const RejectedRay& r : validation.rejected_rays)
        rejected.push_back({{"ray", vec_to_json(r.ray)}, {"reason", r.reason}});
    j["validation"] = {{"pointed", validation.pointed},
                       {"full_dimensional", validation.full_dimensional},
                       {"rank", validation.rank},
                       {"rejected_rays", rejected}};

    if (split) {
        j["degenerate_split"] = {{"q", split->q},
                                 {"reduced_rank", split->reduced.n},
                                 {"reduced_rays", rays_to_json(split->reduced.rays)}};
    } else {
        j["degenerate_split"] = nullptr;
    }

    json torsion = json::array();
    for (const Int& d : group.torsion()) torsion.push_back(int_to_json(d));
    json ray_cls = json::array();
    for (const ClassElement& e : ray_classes) ray_cls.push_back(class_to_json(e));
    j["class_group"] = {{"free_rank", group.free_rank()},
                        {"torsion", torsion},
                        {"ray_classes", ray_cls}};

    json blocks_json = json::array();
    for (const auto& block : blocks) {
        json b = json::array();
        for (std::size_t i : block) b.push_back(i + 1);
        blocks_json.push_back(b);
    }
    j["blocks"] = blocks_json;

    json verdict_json;
    verdict_json["status"] = to_string(verdict.status);
    if (verdict.witness) {
        json moved = json::array();
        for (std::size_t i : verdict.witness->moved) moved.push_back(i + 1);
        verdict_json["witness"] = {{"tau", tau_to_json(verdict.witness->perm.tau)},
                                   {"linear_map", matrix_to_json(verdict.witness->perm.witness)},
                                   {"moved_rays", moved}};
    } else {
        verdict_json["witness"] = nullptr;
    }
    verdict_json["neutral_component_note"] = verdict.neutral_component_note;
    j["verdict"] = verdict_json;

    if (comp_group) {
        json elements = json::array();
        for (const InducedClassAutomorphism& e : comp_group->elements) {
            json images = json::array();
            for (const ClassElement& c : e.images) images.push_back(class_to_json(c));
            elements.push_back({{"tau", tau_to_json(e.tau)}, {"images", images}});
        }
        j["component_group"] = {{"computed", true},
                                {"order", comp_group->order},
                                {"abelian", comp_group->abelian},
                                {"name", comp_group->name},
                                {"element_orders", comp_group->element_orders},
                                {"elements", elements},
                                {"table", comp_group->table}};
    } else {
        j["component_group"] = {
            {"computed", false},
            {"note", "not computed for degenerate input (the component group may be infinite)"}};
    }

    if (remark) {
        j["remark_check"] = {{"lhs", remark->lhs},
                             {"rhs", remark->rhs},
                             {"equal", remark->equal},
                             {"admissible_order", remark->admissible_order},
                             {"kernel_order", remark->kernel_order}};
    } else {
        j["remark_check"] = nullptr;
    }

    if (surface) {
        json s;
        s["a"] = int_to_json(surface->form.a);
        s["b"] = int_to_json(surface->form.b);
        s["basis_change"] = matrix_to_json(surface->form.basis_change);
        s["verdict"] = to_string(surface->verdict.status);
        s["component_group_order"] = surface->verdict.component_group_order;
        s["class_d1"] = int_to_json(surface->verdict.class_d1);
        s["class_d2"] = int_to_json(surface->verdict.class_d2);
        s["operator_check"] =
            surface->operator_check ? json(*surface->operator_check) : json(nullptr);
        s["agrees_with_general"] = surface->agrees_with_general;
        j["surface"] = s;
    } else {
        j["surface"] = nullptr;
    }

    if (verbose) {
        json adm = json::array();
        for (const AdmissiblePermutation& ap : admissible)
            adm.push_back({{"tau", tau_to_json(ap.tau)}, {"linear_map", matrix_to_json(ap.witness)}});
        json cls = json::array();
        for (const Permutation& tau : class_admissible) cls.push_back(tau_to_json(tau));
        json neutral_json = nullptr;
        if (neutral) {
            json blocks_detail = json::array();
            for (const NeutralComponentBlock& b : neutral->blocks) {
                json idx = json::array();
                for (std::size_t i : b.indices) idx.push_back(i + 1);
                blocks_detail.push_back({{"rays", idx},
                                         {"degree", class_to_json(b.degree)},
                                         {"gl_rank", b.indices.size()},
                                         {"translations", b.zero_degree}});
            }
            json grading = json::array();
            for (const ClassElement& e : neutral->grading) grading.push_back(class_to_json(e));
            neutral_json = {{"statement", neutral->kernel_statement},
                            {"blocks", blocks_detail},
                            {"cox_grading", grading}};
        }
        j["criteria_detail"] = {{"admissible", adm}, {"class_admissible", cls}};
        j["neutral_component"] = neutral_json;
    }

    j["timings"] = {{"analyze_ms", analyze_ms}};
    return j;
}

std::string AnalysisReport::to_text() const {
    std::ostringstream os;
    auto line = [&os](const std::string& k, const std::string& v) {
        os << k;
        for (std::size_t i = k.size(); i < 22; ++i) os << ' ';
        os << v << "\n";
    };

    line("verdict", to_string(verdict.status));
    line("lattice_rank", std::to_string(lattice_rank));
    {
        std::ostringstream rs;
        for (std::size_t i = 0; i < rays.size(); ++i) rs << (i ? " " : "") << vec_to_text(rays[i]);
        line("rays", rays.empty() ? "(none)" : rs.str());
    }
    line("pointed", validation.pointed ? "yes" : "no");
    line("full_dimensional", validation.full_dimensional ? "yes" : "no");
    line("rank", std::to_string(validation.rank));
    for (const RejectedRay& r : validation.rejected_rays)
        line("warning", vec_to_text(r.ray) + ": " + r.reason);
    if (split) {
        line("torus_factor_dim", std::to_string(split->q));
        std::ostringstream rs;
        for (std::size_t i = 0; i < split->reduced.rays.size(); ++i)
            rs << (i ? " " : "") << vec_to_text(split->reduced.rays[i]);
        line("reduced_rays", split->reduced.rays.empty() ? "(none)" : rs.str());
    }

    {
        std::ostringstream gs;
        if (group.is_trivial()) {
            gs << "trivial";
        } else {
            bool first = true;
            for (std::size_t i = 0; i < group.free_rank(); ++i) {
                gs << (first ? "" : " + ") << "Z";
                first = false;
            }
            for (const Int& d : group.torsion()) {
                gs << (first ? "" : " + ") << "Z/" << d;
                first = false;
            }
        }
        line("class_group", gs.str());
    }
    {
        std::ostringstream cs;
        for (std::size_t i = 0; i < ray_classes.size(); ++i)
            cs << (i ? " " : "") << "[D" << i + 1 << "]=" << class_to_text(ray_classes[i]);
        line("ray_classes", ray_classes.empty() ? "(none)" : cs.str());
    }
    {
        std::ostringstream bs;
        for (std::size_t k = 0; k < blocks.size(); ++k) {
            bs << (k ? " " : "") << "{";
            for (std::size_t i = 0; i < blocks[k].size(); ++i)
                bs << (i ? "," : "") << blocks[k][i] + 1;
            bs << "}";
        }
        line("blocks", blocks.empty() ? "(none)" : bs.str());
    }

    if (verdict.witness) {
        std::ostringstream ws;
        ws << "tau=(";
        for (std::size_t i = 0; i < verdict.witness->perm.tau.size(); ++i)
            ws << (i ? "," : "") << verdict.witness->perm.tau[i] + 1;
        ws << ") L=" << verdict.witness->perm.witness.to_string();
        line("witness", ws.str());
    }
    line("neutral_component", verdict.neutral_component_note);

    if (comp_group) {
        line("component_group", "order " + std::to_string(comp_group->order) + ", " +
                                    (comp_group->abelian ? "abelian" : "nonabelian") + ", " +
                                    comp_group->name);
    } else {
        line("component_group", "not computed for degenerate input (may be infinite)");
    }
    if (remark)
        line("remark_check", "lhs=" + std::to_string(remark->lhs) +
                                 " rhs=" + std::to_string(remark->rhs) +
                                 " equal=" + (remark->equal ? "yes" : "no"));
    if (surface) {
        std::ostringstream ss;
        ss << "(a,b)=(" << surface->form.a << "," << surface->form.b << ") verdict="
           << to_string(surface->verdict.status)
           << " component_group_order=" << surface->verdict.component_group_order;
        if (surface->operator_check)
            ss << " operator_check=" << (*surface->operator_check ? "ok" : "FAILED");
        ss << " agrees_with_general=" << (surface->agrees_with_general ? "yes" : "no");
        line("surface", ss.str());
    }
    if (verbose) {
        std::ostringstream as;
        for (std::size_t k = 0; k < admissible.size(); ++k) {
            as << (k ? " " : "") << "(";
            for (std::size_t i = 0; i < admissible[k].tau.size(); ++i)
                as << (i ? "," : "") << admissible[k].tau[i] + 1;
            as << ")";
        }
        line("admissible_taus", admissible.empty() ? "(none)" : as.str());
        std::ostringstream csv;
        for (std::size_t k = 0; k < class_admissible.size(); ++k) {
            csv << (k ? " " : "") << "(";
            for (std::size_t i = 0; i < class_admissible[k].size(); ++i)
                csv << (i ? "," : "") << class_admissible[k][i] + 1;
            csv << ")";
        }
        line("class_admissible", class_admissible.empty() ? "(none)" : csv.str());
    }
    return os.str();
}

int exit_code_for(Connectedness s) {
    switch (s) {
        case Connectedness::Connected: return 0;
        case Connectedness::NotConnected: return 10;
        case Connectedness::NotConnectedDegenerate: return 11;
    }
    return 1;
}

int AnalysisReport::exit_code() const { return exit_code_for(verdict.status); }

} // namespace toraut

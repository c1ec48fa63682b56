#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "folcup/fixtures.hpp"
#include "folcup/io.hpp"
#include "folcup/parallel.hpp"
#include "folcup/relative.hpp"

using namespace folcup;
using nlohmann::json;

namespace {

struct RunConfig {
    std::string input;   // empty or "-" = stdin
    std::string output;  // empty = none, "-" = stdout
    int threads = 0;
    unsigned long long seed = 0;  // reserved for randomized property runs
    int verbosity = 1;
};

std::filesystem::path input_base_dir(const RunConfig& cfg)
{
    if (cfg.input.empty() || cfg.input == "-")
        return std::filesystem::current_path();
    return std::filesystem::path(cfg.input).parent_path();
}

json read_input(const RunConfig& cfg)
{
    if (cfg.input.empty() || cfg.input == "-") {
        json j;
        try {
            std::cin >> j;
        } catch (const json::exception& e) {
            throw Error(std::string("malformed JSON on stdin: ") + e.what());
        }
        return j;
    }
    return io::load_json_file(cfg.input);
}

void write_artifact(const RunConfig& cfg, const json& j)
{
    if (cfg.output.empty())
        return;
    if (cfg.output == "-") {
        std::cout << io::canonical_dump(j);
        return;
    }
    std::ofstream out(cfg.output);
    if (!out)
        throw Error("cannot write " + cfg.output);
    out << io::canonical_dump(j);
}

int fail_with_error(const char* kind, const std::string& message, int code)
{
    json err;
    err["error"]["kind"] = kind;
    err["error"]["message"] = message;
    std::cout << io::canonical_dump(err);
    std::cerr << "error: " << message << "\n";
    return code;
}

void print_report(const ValidationReport& report)
{
    if (report.ok()) {
        std::cout << "valid\n";
        return;
    }
    std::cout << report.violations.size() << " violation(s):\n";
    for (const auto& v : report.violations)
        std::cout << "  " << v.to_string() << "\n";
}

int cmd_gen(const RunConfig& cfg, const std::string& kind, int base_subdiv, int fiber_subdiv,
            int torus_rank, const std::string& phi_u_first, const std::string& phi_u_second)
{
    if (kind != "custom" && kind != "hopf_model") {
        if (base_subdiv < 3 || fiber_subdiv < 3)
            return fail_with_error("usage", "circle subdivision counts must be at least 3", 2);
        if (torus_rank < 1)
            return fail_with_error("usage", "torus rank must be positive", 2);
    }
    json artifact;
    if (kind == "hopf_model") {
        auto m = fixtures::hopf_model();
        artifact = io::model_to_json(m.mc, &m.ps);
    } else if (kind == "torus_bundle" || kind == "product_bundle") {
        auto m = fixtures::torus_bundle(base_subdiv, fiber_subdiv);
        artifact = io::model_to_json(m.mc, &m.ps);
    } else if (kind == "point_foliation") {
        auto m = fixtures::point_foliation_torus(torus_rank, base_subdiv);
        artifact = io::model_to_json(m.mc, &m.ps);
    } else if (kind == "torus_cover") {
        CoverData c = fixtures::torus_cover(base_subdiv, fiber_subdiv,
                                            rational_from_string(phi_u_first),
                                            rational_from_string(phi_u_second));
        artifact = io::cover_to_json(c);
    } else if (kind == "custom") {
        json j = read_input(cfg);
        if (io::looks_like_cover(j))
            artifact = io::cover_to_json(io::cover_from_json(j, input_base_dir(cfg)));
        else {
            auto m = io::model_from_json(j);
            artifact = io::model_to_json(m.mc, m.ps ? &*m.ps : nullptr);
        }
    } else {
        throw Error("unknown fixture kind '" + kind + "'");
    }

    // fixture generators never emit invalid data
    if (io::looks_like_cover(artifact)) {
        CoverData c = io::cover_from_json(artifact);
        ValidationReport report = validate_cover(c);
        if (!report.ok())
            throw Error("generated cover failed validation: " + report.to_string());
    } else {
        auto m = io::model_from_json(artifact);
        ValidationReport report = validate(m.mc, m.ps ? &*m.ps : nullptr);
        if (!report.ok())
            throw Error("generated model failed validation: " + report.to_string());
    }

    if (cfg.output.empty())
        std::cout << io::canonical_dump(artifact);
    else
        write_artifact(cfg, artifact);
    return 0;
}

int cmd_validate(const RunConfig& cfg)
{
    json j = read_input(cfg);
    ValidationReport report;
    if (io::looks_like_cover(j)) {
        CoverData c = io::cover_from_json(j, input_base_dir(cfg));
        report = validate_cover(c);
    } else {
        auto m = io::model_from_json(j);
        report = validate(m.mc, m.ps ? &*m.ps : nullptr);
    }
    print_report(report);
    write_artifact(cfg, io::report_to_json(report));
    return report.ok() ? 0 : 1;
}

int cmd_pages(const RunConfig& cfg, int max_r, bool with_reps)
{
    json j = read_input(cfg);
    auto m = io::model_from_json(j);
    ValidationReport report = validate(m.mc);
    if (!report.ok())
        return fail_with_error("validation", "input model is invalid:\n" + report.to_string(), 1);
    if (max_r < 0)
        max_r = m.mc.P() + 2;

    SpectralSequence ss(m.mc);
    if (cfg.verbosity > 0) {
        for (int r = 0; r <= max_r; ++r) {
            const Page& page = ss.page(r);
            std::cout << "E_" << r << ":";
            bool any = false;
            for (const auto& [a, d] : page.dims()) {
                std::cout << "  " << folcup::to_string(a) << "=" << d;
                any = true;
            }
            if (!any)
                std::cout << "  0";
            std::cout << "\n";
        }
        std::cout << "stabilized at r = " << ss.stabilization_r() << "\n";
    }
    write_artifact(cfg, io::pages_to_json(m.mc, max_r, with_reps));
    return 0;
}

int cmd_bounds(const RunConfig& cfg)
{
    json j = read_input(cfg);
    auto m = io::model_from_json(j);
    if (!m.ps)
        return fail_with_error("schema", "bounds require a product structure", 2);
    ValidationReport report = validate(m.mc, &*m.ps);
    if (!report.ok())
        return fail_with_error("validation", "input model is invalid:\n" + report.to_string(), 1);

    BoundReport r = bound_report(m.mc, *m.ps);
    if (cfg.verbosity > 0) {
        auto row = [](const char* name, const BoundEntry& e) {
            std::cout << "  " << name << std::string(12 - std::string(name).size(), ' ')
                      << e.certificate.value << "   " << e.applies_to << "\n";
        };
        std::cout << "cup-length lower bounds (l.c.p. counts factors; 0 = all products vanish):\n";
        row("basic", r.basic);
        row("derham", r.derham);
        row("e2", r.e2);
        row("tangential", r.tangential);
    }
    write_artifact(cfg, io::bound_report_to_json(r));
    return 0;
}

int cmd_mv_check(const RunConfig& cfg)
{
    json j = read_input(cfg);
    if (!io::looks_like_cover(j))
        return fail_with_error("schema", "mv-check expects cover data", 2);
    CoverData c = io::cover_from_json(j, input_base_dir(cfg));

    ValidationReport cover_report = validate_cover(c);
    ValidationReport e1_report, id_report;
    if (cover_report.ok()) {
        MayerVietoris mv(c);
        e1_report = mv.e1_exactness();
        id_report = mv.identity_checks();
    }

    std::cout << "cover data:        " << (cover_report.ok() ? "ok" : "FAILED") << "\n";
    std::cout << "E_1 exactness:     " << (cover_report.ok() && e1_report.ok() ? "ok" : "FAILED")
              << "\n";
    std::cout << "defect identities: " << (cover_report.ok() && id_report.ok() ? "ok" : "FAILED")
              << "\n";
    ValidationReport all = cover_report;
    all.merge(e1_report);
    all.merge(id_report);
    if (!all.ok())
        print_report(all);

    json out;
    out["cover"] = io::report_to_json(cover_report);
    out["e1_exactness"] = io::report_to_json(e1_report);
    out["identities"] = io::report_to_json(id_report);
    write_artifact(cfg, out);
    return all.ok() ? 0 : 1;
}

bool parse_class_spec(const std::string& s, Bidegree& pq, int& index)
{
    int p, q, i;
    if (std::sscanf(s.c_str(), "%d,%d,%d", &p, &q, &i) != 3)
        return false;
    pq = {p, q};
    index = i;
    return true;
}

int cmd_relative_cup(const RunConfig& cfg, const std::string& u_spec, const std::string& v_spec)
{
    json j = read_input(cfg);
    if (!io::looks_like_cover(j))
        return fail_with_error("schema", "relative-cup expects cover data", 2);
    CoverData c = io::cover_from_json(j, input_base_dir(cfg));
    ValidationReport cover_report = validate_cover(c);
    if (!cover_report.ok())
        return fail_with_error("validation", "cover is invalid:\n" + cover_report.to_string(), 1);

    Bidegree upq, vpq;
    int ui, vi;
    if (!parse_class_spec(u_spec, upq, ui) || !parse_class_spec(v_spec, vpq, vi))
        return fail_with_error("schema", "class selectors must be \"p,q,index\"", 2);

    MayerVietoris mv(c);
    const RelativePage& rel_u = mv.relative(CoverSet::U);
    const RelativePage& rel_v = mv.relative(CoverSet::V);
    auto pick = [](const RelativePage& rel, Bidegree pq, int i, const char* side) {
        auto it = rel.e2.find(pq);
        if (it == rel.e2.end() || i < 0 || i >= it->second.dim())
            throw Error(std::string("no basis class ") + std::to_string(i) + " in E_2^" +
                        folcup::to_string(pq) + "(M," + side + ")");
        const QVector& rep = it->second.reps()[static_cast<std::size_t>(i)];
        RelClass x;
        x.pq = pq;
        x.mu = QVector(rep.begin(), rep.begin() + rel.m_dim(pq));
        x.alpha = QVector(rep.begin() + rel.m_dim(pq), rep.end());
        x.page = 2;
        return x;
    };
    RelClass x = pick(rel_u, upq, ui, "U");
    RelClass y = pick(rel_v, vpq, vi, "V");
    RelativeCupResult prod = relative_cup(mv, x, y);

    // compatibility: the image in E_2(M) against the product of the factors' images
    E1Class mprod = mv.product(CoverSet::M, {upq, x.mu}, {vpq, y.mu});
    auto e2m = e2_cells(mv.terms(CoverSet::M));
    auto cell = e2m.find(mprod.pq);
    QVector expected = cell == e2m.end() ? QVector{} : cell->second.project(mprod.coords);
    const bool compatible = prod.image_in_e2_m == expected;

    std::cout << "product class at " << folcup::to_string(prod.pair.pq) << " in E_2(M, U∪V)\n";
    std::cout << "δ-cocycle:           ok\n";
    std::cout << "class in E_2(M,M):   " << (is_zero(prod.e2_class) ? "0" : "nonzero") << "\n";
    std::cout << "compatible with the absolute product: " << (compatible ? "yes" : "NO") << "\n";

    json out;
    out["pq"] = json::array({prod.pair.pq.p, prod.pair.pq.q});
    json mu = json::array(), alpha = json::array(), e2cls = json::array();
    for (const auto& v : prod.pair.mu)
        mu.push_back(rational_to_string(v));
    for (const auto& v : prod.pair.alpha)
        alpha.push_back(rational_to_string(v));
    for (const auto& v : prod.e2_class)
        e2cls.push_back(rational_to_string(v));
    out["mu"] = std::move(mu);
    out["alpha"] = std::move(alpha);
    out["class_in_e2_pair"] = std::move(e2cls);
    out["compatible_with_absolute_product"] = compatible;
    write_artifact(cfg, out);
    return compatible ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact spectral-sequence engine for bigraded foliation models"};
    app.require_subcommand(1);
    app.fallthrough();  // global -i/-o may follow the subcommand

    RunConfig cfg;
    app.add_option("-i,--input", cfg.input, "input JSON path (default: stdin)");
    app.add_option("-o,--output", cfg.output, "write the JSON artifact here ('-' for stdout)");
    app.add_option("--threads", cfg.threads, "worker threads (default: FOLCUP_THREADS or 1)");
    app.add_option("--seed", cfg.seed, "seed for randomized property runs (reserved)");
    app.add_option("-v,--verbosity", cfg.verbosity, "0 = quiet, 1 = normal");

    std::string kind, phi_u_first = "1/2", phi_u_second = "1/2";
    int base_subdiv = 3, fiber_subdiv = 3, torus_rank = 1, max_r = -1;
    bool with_reps = false;
    std::string u_spec, v_spec;

    CLI::App* gen = app.add_subcommand("gen", "emit a fixture model or cover");
    gen->add_option("--kind", kind,
                    "point_foliation | product_bundle | hopf_model | torus_bundle | "
                    "torus_cover | custom")
        ->required();
    gen->add_option("--base-subdiv", base_subdiv, "base circle subdivision (≥ 3)");
    gen->add_option("--fiber-subdiv", fiber_subdiv, "fiber circle subdivision (≥ 3)");
    gen->add_option("--torus-rank", torus_rank, "rank for point_foliation tori");
    gen->add_option("--phi-u-first", phi_u_first, "φ_U at the first cut vertex (torus_cover)");
    gen->add_option("--phi-u-second", phi_u_second, "φ_U at the second cut vertex (torus_cover)");

    CLI::App* validate_cmd = app.add_subcommand("validate", "check a model or cover");
    CLI::App* pages_cmd = app.add_subcommand("pages", "compute spectral sequence pages");
    pages_cmd->add_option("--max-r", max_r, "last page to emit (default: P+2)");
    pages_cmd->add_flag("--reps", with_reps, "include class representatives in the JSON");
    CLI::App* bounds_cmd = app.add_subcommand("bounds", "cup-length lower bound report");
    CLI::App* mv_cmd = app.add_subcommand("mv-check", "Mayer-Vietoris checks for a cover");
    CLI::App* cup_cmd = app.add_subcommand("relative-cup", "relative cup product of two classes");
    cup_cmd->add_option("--u-class", u_spec, "\"p,q,index\" in E_2(M,U)")->required();
    cup_cmd->add_option("--v-class", v_spec, "\"p,q,index\" in E_2(M,V)")->required();

    CLI11_PARSE(app, argc, argv);
    if (cfg.threads > 0)
        set_thread_count(cfg.threads);

    try {
        if (gen->parsed())
            return cmd_gen(cfg, kind, base_subdiv, fiber_subdiv, torus_rank, phi_u_first,
                           phi_u_second);
        if (validate_cmd->parsed())
            return cmd_validate(cfg);
        if (pages_cmd->parsed())
            return cmd_pages(cfg, max_r, with_reps);
        if (bounds_cmd->parsed())
            return cmd_bounds(cfg);
        if (mv_cmd->parsed())
            return cmd_mv_check(cfg);
        if (cup_cmd->parsed())
            return cmd_relative_cup(cfg, u_spec, v_spec);
    } catch (const Error& e) {
        bool schema = std::string(e.what()).rfind("schema", 0) == 0 ||
                      std::string(e.what()).find("malformed") != std::string::npos;
        return fail_with_error(schema ? "schema" : "internal", e.what(), schema ? 2 : 1);
    }
    return 0;
}

#include "folcup/io.hpp"

#include <fstream>

namespace folcup::io {

using nlohmann::json;

namespace {

json scalar(const Rational& r)
{
    return rational_to_string(r);
}

Rational scalar_from(const json& j, const char* where)
{
    if (!j.is_string())
        throw Error(std::string("schema: ") + where + ": scalar must be a string \"a/b\"");
    return rational_from_string(j.get<std::string>());
}

json matrix_entries(const SparseMatrix& m)
{
    json out = json::array();
    for (const auto& [key, v] : m.entries())
        out.push_back(json::array({key.first, key.second, scalar(v)}));
    return out;
}

SparseMatrix matrix_from_entries(int rows, int cols, const json& j, const char* where)
{
    SparseMatrix m(rows, cols);
    if (!j.is_array())
        throw Error(std::string("schema: ") + where + ": entries must be an array");
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw Error(std::string("schema: ") + where + ": entry must be [row, col, \"a/b\"]");
        int r = e[0].get<int>(), c = e[1].get<int>();
        if (r < 0 || r >= rows || c < 0 || c >= cols)
            throw Error(std::string("schema: ") + where + ": entry index out of range");
        m.set(r, c, scalar_from(e[2], where));
    }
    return m;
}

json blockmap_to_json(const BlockMap& b)
{
    json out = json::array();
    for (const auto& [a, m] : b.blocks) {
        json blk;
        blk["p"] = a.p;
        blk["q"] = a.q;
        blk["entries"] = matrix_entries(m);
        out.push_back(std::move(blk));
    }
    return out;
}

BlockMap blockmap_from_json(const json& j, const MultiComplex& src, const MultiComplex& dst,
                            const char* where)
{
    BlockMap out;
    if (!j.is_array())
        throw Error(std::string("schema: ") + where + ": block map must be an array");
    for (const auto& blk : j) {
        Bidegree a{blk.at("p").get<int>(), blk.at("q").get<int>()};
        int rows = dst.in_box(a) ? dst.dim(a) : 0;
        int cols = src.in_box(a) ? src.dim(a) : 0;
        SparseMatrix m = matrix_from_entries(rows, cols, blk.at("entries"), where);
        if (!m.is_zero())
            out.blocks.emplace(a, std::move(m));
    }
    return out;
}

}  // namespace

json model_to_json(const MultiComplex& mc, const ProductStructure* ps)
{
    json j;
    j["schema_version"] = kSchemaVersion;
    j["P"] = mc.P();
    j["Q"] = mc.Q();
    json dims = json::array();
    for (const auto& [a, n] : mc.dims())
        dims.push_back(json::array({a.p, a.q, n}));
    j["dims"] = std::move(dims);

    json diff = json::array();
    for (const auto& [k, blocks] : mc.diff()) {
        for (const auto& [a, m] : blocks) {
            json blk;
            blk["k"] = k;
            blk["p"] = a.p;
            blk["q"] = a.q;
            blk["entries"] = matrix_entries(m);
            diff.push_back(std::move(blk));
        }
    }
    j["diff"] = std::move(diff);

    if (ps) {
        json prod;
        json unit = json::array();
        for (const auto& v : ps->unit())
            unit.push_back(scalar(v));
        prod["unit"] = std::move(unit);
        json blocks = json::array();
        for (const auto& [key, table] : ps->blocks()) {
            json blk;
            blk["p"] = key.first.p;
            blk["q"] = key.first.q;
            blk["r"] = key.second.p;
            blk["s"] = key.second.q;
            json entries = json::array();
            for (const auto& [ij, value] : table)
                for (std::size_t t = 0; t < value.size(); ++t)
                    if (value[t] != 0)
                        entries.push_back(json::array(
                            {ij.first, ij.second, static_cast<int>(t), scalar(value[t])}));
            blk["entries"] = std::move(entries);
            blocks.push_back(std::move(blk));
        }
        prod["blocks"] = std::move(blocks);
        j["product"] = std::move(prod);
    }

    bool any_labels = false;
    json labels = json::array();
    for (const auto& [a, n] : mc.dims()) {
        (void)n;
        if (const auto* names = mc.labels(a)) {
            any_labels = true;
            json row;
            row["p"] = a.p;
            row["q"] = a.q;
            row["names"] = *names;
            labels.push_back(std::move(row));
        }
    }
    if (any_labels)
        j["labels"] = std::move(labels);
    return j;
}

LoadedModel model_from_json(const json& j)
{
    if (!j.is_object())
        throw Error("schema: model must be a JSON object");
    if (!j.contains("P") || !j.contains("Q") || !j.contains("dims"))
        throw Error("schema: model requires P, Q and dims");
    LoadedModel out;
    out.mc = MultiComplex(j.at("P").get<int>(), j.at("Q").get<int>());
    for (const auto& d : j.at("dims")) {
        if (!d.is_array() || d.size() != 3)
            throw Error("schema: dims entries must be [p, q, n]");
        out.mc.set_dim({d[0].get<int>(), d[1].get<int>()}, d[2].get<int>());
    }
    if (j.contains("diff")) {
        for (const auto& blk : j.at("diff")) {
            int k = blk.at("k").get<int>();
            Bidegree a{blk.at("p").get<int>(), blk.at("q").get<int>()};
            if (!out.mc.in_box(a) || !out.mc.in_box(diff_target(a, k)))
                throw Error("schema: diff block at " + folcup::to_string(a) + " with k=" +
                            std::to_string(k) + " maps outside the box");
            SparseMatrix m = matrix_from_entries(out.mc.dim(diff_target(a, k)), out.mc.dim(a),
                                                 blk.at("entries"), "diff");
            out.mc.set_block(k, a, std::move(m));
        }
    }
    if (j.contains("labels")) {
        for (const auto& row : j.at("labels")) {
            Bidegree a{row.at("p").get<int>(), row.at("q").get<int>()};
            out.mc.set_labels(a, row.at("names").get<std::vector<std::string>>());
        }
    }
    if (j.contains("product")) {
        const json& prod = j.at("product");
        ProductStructure ps;
        QVector unit;
        for (const auto& v : prod.at("unit"))
            unit.push_back(scalar_from(v, "product.unit"));
        if (static_cast<int>(unit.size()) != out.mc.dim({0, 0}))
            throw Error("schema: product unit length must equal dim(0,0)");
        ps.set_unit(std::move(unit));
        if (prod.contains("blocks")) {
            for (const auto& blk : prod.at("blocks")) {
                Bidegree a{blk.at("p").get<int>(), blk.at("q").get<int>()};
                Bidegree b{blk.at("r").get<int>(), blk.at("s").get<int>()};
                if (!out.mc.in_box(a + b))
                    throw Error("schema: product block at " + folcup::to_string(a) + "x" +
                                folcup::to_string(b) + " lands outside the box");
                std::map<std::pair<int, int>, QVector> acc;
                for (const auto& e : blk.at("entries")) {
                    if (!e.is_array() || e.size() != 4)
                        throw Error("schema: product entries must be [i, j, t, \"a/b\"]");
                    int i = e[0].get<int>(), jj = e[1].get<int>(), t = e[2].get<int>();
                    if (t < 0 || t >= out.mc.dim(a + b))
                        throw Error("schema: product entry target index out of range");
                    auto& vec = acc.try_emplace({i, jj}, zero_vector(out.mc.dim(a + b)))
                                    .first->second;
                    vec[static_cast<std::size_t>(t)] = scalar_from(e[3], "product");
                }
                for (auto& [ij, vec] : acc)
                    ps.set_pair(out.mc, a, ij.first, b, ij.second, std::move(vec));
            }
        }
        out.ps = std::move(ps);
    }
    return out;
}

bool looks_like_cover(const json& j)
{
    return j.is_object() && j.contains("UV") && j.contains("restrictions");
}

json cover_to_json(const CoverData& c)
{
    json j;
    j["schema_version"] = kSchemaVersion;
    j["type"] = "cover";
    j["M"] = model_to_json(c.M, &c.psM);
    j["U"] = model_to_json(c.U, &c.psU);
    j["V"] = model_to_json(c.V, &c.psV);
    j["UV"] = model_to_json(c.UV, &c.psUV);
    json rest;
    rest["M_U"] = blockmap_to_json(c.rho_MU);
    rest["M_V"] = blockmap_to_json(c.rho_MV);
    rest["U_UV"] = blockmap_to_json(c.rho_UUV);
    rest["V_UV"] = blockmap_to_json(c.rho_VUV);
    j["restrictions"] = std::move(rest);
    json parts;
    parts["e_U"] = blockmap_to_json(c.e_U);
    parts["e_V"] = blockmap_to_json(c.e_V);
    j["partitions"] = std::move(parts);
    return j;
}

CoverData cover_from_json(const json& j, const std::filesystem::path& base_dir)
{
    if (!looks_like_cover(j))
        throw Error("schema: cover requires M, U, V, UV, restrictions and partitions");

    auto load_part = [&](const char* key) -> LoadedModel {
        const json& part = j.at(key);
        if (part.is_object() && part.contains("path")) {
            std::filesystem::path p = part.at("path").get<std::string>();
            if (p.is_relative())
                p = base_dir / p;
            return model_from_json(load_json_file(p));
        }
        return model_from_json(part);
    };

    CoverData c;
    LoadedModel m = load_part("M"), u = load_part("U"), v = load_part("V"), uv = load_part("UV");
    auto need_ps = [](LoadedModel& lm, const char* key) {
        if (!lm.ps)
            throw Error(std::string("schema: cover complex ") + key +
                        " requires a product structure");
    };
    need_ps(m, "M");
    need_ps(u, "U");
    need_ps(v, "V");
    need_ps(uv, "UV");
    c.M = std::move(m.mc);
    c.psM = std::move(*m.ps);
    c.U = std::move(u.mc);
    c.psU = std::move(*u.ps);
    c.V = std::move(v.mc);
    c.psV = std::move(*v.ps);
    c.UV = std::move(uv.mc);
    c.psUV = std::move(*uv.ps);

    const json& rest = j.at("restrictions");
    c.rho_MU = blockmap_from_json(rest.at("M_U"), c.M, c.U, "restrictions.M_U");
    c.rho_MV = blockmap_from_json(rest.at("M_V"), c.M, c.V, "restrictions.M_V");
    c.rho_UUV = blockmap_from_json(rest.at("U_UV"), c.U, c.UV, "restrictions.U_UV");
    c.rho_VUV = blockmap_from_json(rest.at("V_UV"), c.V, c.UV, "restrictions.V_UV");
    const json& parts = j.at("partitions");
    c.e_U = blockmap_from_json(parts.at("e_U"), c.UV, c.U, "partitions.e_U");
    c.e_V = blockmap_from_json(parts.at("e_V"), c.UV, c.V, "partitions.e_V");
    return c;
}

json report_to_json(const ValidationReport& r)
{
    json out;
    out["valid"] = r.ok();
    json vs = json::array();
    for (const auto& v : r.violations) {
        json item;
        item["check"] = v.check;
        if (v.at.p >= 0) {
            item["p"] = v.at.p;
            item["q"] = v.at.q;
        }
        if (v.index >= 0)
            item["basis_index"] = v.index;
        item["detail"] = v.detail;
        vs.push_back(std::move(item));
    }
    out["violations"] = std::move(vs);
    return out;
}

json certificate_to_json(const CupLengthCertificate& c)
{
    json out;
    out["slice"] = c.slice_name;
    out["value"] = c.value;
    out["convention"] = c.convention;
    json span = json::array();
    for (const auto& [k, d] : c.span_dims)
        span.push_back(json::array({k, d}));
    out["span_dims"] = std::move(span);
    if (c.value > 0) {
        json factors = json::array();
        for (const auto& f : c.witness_factors) {
            json item;
            item["grade"] = f.grade;
            item["p"] = f.cell.p;
            item["q"] = f.cell.q;
            item["label"] = f.label;
            json coords = json::array();
            for (const auto& v : f.coords)
                coords.push_back(scalar(v));
            item["coords"] = std::move(coords);
            json rep = json::array();
            for (const auto& v : f.representative)
                rep.push_back(scalar(v));
            item["representative"] = std::move(rep);
            factors.push_back(std::move(item));
        }
        out["witness_factors"] = std::move(factors);
        json prod = json::array();
        for (const auto& v : c.witness_product.coords)
            prod.push_back(scalar(v));
        out["witness_product"] = std::move(prod);
        out["witness_grade"] = c.witness_product.grade;
    }
    return out;
}

json bound_report_to_json(const BoundReport& r)
{
    json out;
    out["schema_version"] = kSchemaVersion;
    out["convention"] = r.convention;
    auto entry = [](const BoundEntry& e) {
        json item;
        item["value"] = e.certificate.value;
        item["applies_to"] = e.applies_to;
        item["certificate"] = certificate_to_json(e.certificate);
        return item;
    };
    out["basic"] = entry(r.basic);
    out["derham"] = entry(r.derham);
    out["e2"] = entry(r.e2);
    out["tangential"] = entry(r.tangential);
    return out;
}

json pages_to_json(const MultiComplex& mc, int max_r, bool with_reps)
{
    SpectralSequence ss(mc);
    json out;
    out["schema_version"] = kSchemaVersion;
    json pages = json::array();
    for (int r = 0; r <= max_r; ++r) {
        const Page& page = ss.page(r);
        json jp;
        jp["r"] = r;
        json cells = json::array();
        for (const auto& [a, cell] : page.cells) {
            if (cell.dim() == 0)
                continue;
            json jc;
            jc["p"] = a.p;
            jc["q"] = a.q;
            jc["dim"] = cell.dim();
            jc["d_entries"] = matrix_entries(page.d_at(a));
            if (with_reps) {
                json reps = json::array();
                for (const auto& rep : cell.reps()) {
                    json jr = json::array();
                    for (const auto& v : rep)
                        jr.push_back(scalar(v));
                    reps.push_back(std::move(jr));
                }
                jc["representatives"] = std::move(reps);
            }
            cells.push_back(std::move(jc));
        }
        jp["cells"] = std::move(cells);
        pages.push_back(std::move(jp));
    }
    out["pages"] = std::move(pages);
    out["stabilized_at"] = ss.stabilization_r();
    return out;
}

std::string canonical_dump(const json& j)
{
    return j.dump(2) + "\n";
}

json load_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error("malformed JSON in " + path.string() + ": " + e.what());
    }
    return j;
}

}  // namespace folcup::io

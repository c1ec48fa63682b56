#ifndef FOLCUP_IO_HPP
#define FOLCUP_IO_HPP

#include <filesystem>
#include <optional>

#include <json.hpp>

#include "folcup/bounds.hpp"
#include "folcup/cover.hpp"
#include "folcup/pages.hpp"

namespace folcup::io {

inline constexpr int kSchemaVersion = 1;

struct LoadedModel {
    MultiComplex mc;
    std::optional<ProductStructure> ps;
};

/* Multicomplex schema (scalars are decimal strings "a/b"):
 * { "schema_version": 1, "P": int, "Q": int, "dims": [[p,q,n],...],
 *   "diff": [{"k","p","q","entries":[[row,col,"a/b"],...]},...],
 *   "product": {"unit":["a/b",...],
 *               "blocks":[{"p","q","r","s","entries":[[i,j,t,"a/b"],...]},...]},
 *   "labels": [{"p","q","names":[...]},...] }            (product, labels optional) */
nlohmann::json model_to_json(const MultiComplex& mc, const ProductStructure* ps = nullptr);
LoadedModel model_from_json(const nlohmann::json& j);

/* Cover schema: the four models inline or by file reference ({"path": "..."}),
 * restrictions and partitions as per-bidegree block lists. */
nlohmann::json cover_to_json(const CoverData& c);
CoverData cover_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir = {});

bool looks_like_cover(const nlohmann::json& j);

nlohmann::json report_to_json(const ValidationReport& r);
nlohmann::json certificate_to_json(const CupLengthCertificate& c);
nlohmann::json bound_report_to_json(const BoundReport& r);
nlohmann::json pages_to_json(const MultiComplex& mc, int max_r, bool with_reps);

/// Stable two-space indented dump; object keys are already sorted by nlohmann.
std::string canonical_dump(const nlohmann::json& j);

nlohmann::json load_json_file(const std::filesystem::path& path);

}  // namespace folcup::io

#endif

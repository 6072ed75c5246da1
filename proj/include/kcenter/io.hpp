#pragma once

// JSON instance and report files, CSV flattening.
//
// Instance file:
//   {"dimension": 2,
//    "points": [[0, 0], [1, 0]],
//    "gauge": {"kind": "euclidean"}}
//
// Gauge objects: {"kind":"euclidean"} | {"kind":"lp","p":3.0} | {"kind":"linf"} |
//   {"kind":"box","radii":[...]} | {"kind":"interval","a":-1.0,"b":1.0} |
//   {"kind":"halfspaces","normals":[[...],...]}
//
// All point and center indices in reports are 1-based.

#include "kcenter/k_center.hpp"
#include "kcenter/qualitative.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace kcenter::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

/// Throws Error(ParseError) on schema problems; validation errors (duplicate
/// points, unbounded gauges, ...) keep their own codes.
GaugeDescriptor gauge_from_json(const Json& j);
Json gauge_to_json(const GaugeDescriptor& descriptor);

Instance instance_from_json(const Json& j);
Json instance_to_json(const Instance& inst);
Instance load_instance(const std::filesystem::path& path);

/// Reads JSON from a file; ParseError if unreadable or malformed.
Json read_json_file(const std::filesystem::path& path);

/// Accepts an inline JSON array of centers or a path to a file holding one.
CenterConfiguration centers_from_text(const std::string& text, int dimension);
CenterConfiguration centers_from_json(const Json& j, int dimension);
Json centers_to_json(const CenterConfiguration& x);

Json vector_to_json(const Vector& v);
Json index_sets_to_json(const std::vector<IndexSet>& sets);

Json to_json(const SolveReport& report);
SolveReport solve_report_from_json(const Json& j);
Json to_json(const OneCenterResult& result);
Json to_json(const LocalCertificate& cert);
Json to_json(const CompactnessVerdict& verdict);
Json to_json(const ProbeOutcome& probe);
Json to_json(const TwoCenterBound& bound);
Json to_json(const ClusteringView& view);

/// Report envelope: {"report", "tool_version", "instance", "seed",
/// "elapsed_ms", ...body}. `elapsed_ms` is null unless timing is requested so
/// that identical runs produce identical bytes.
Json make_report(const std::string& kind, const std::string& instance_id,
                 std::optional<std::uint64_t> seed, std::optional<double> elapsed_ms,
                 const Json& body);

std::string dump(const Json& j);

/// Writes through a temporary file in the same directory and renames it.
void write_atomic(const std::filesystem::path& path, const std::string& contents);

/// One row per report. Columns: instance, report, k, method, value, gap,
/// verdict, then every other scalar field seen in any report (sorted).
/// Missing fields are left blank.
std::string emit_csv(const std::vector<Json>& reports);

}  // namespace kcenter::io

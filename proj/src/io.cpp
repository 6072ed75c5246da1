#include "kcenter/io.hpp"

#include "kcenter/error.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace kcenter::io {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) parse_fail("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) parse_fail(std::string("missing field \"") + key + "\"");
  return *it;
}

double number(const Json& j, const std::string& what) {
  if (!j.is_number()) parse_fail(what + " must be a number");
  return j.get<double>();
}

Vector vector_from_json(const Json& j, const std::string& what) {
  if (!j.is_array()) parse_fail(what + " must be an array of numbers");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t c = 0; c < j.size(); ++c) v[static_cast<Eigen::Index>(c)] = number(j[c], what);
  return v;
}

std::vector<Vector> vectors_from_json(const Json& j, const std::string& what) {
  if (!j.is_array()) parse_fail(what + " must be an array of arrays");
  std::vector<Vector> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(vector_from_json(j[i], what + "[" + std::to_string(i + 1) + "]"));
  }
  return out;
}

Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

std::string csv_cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    return quoted + "\"";
  }
  return v.dump();
}

}  // namespace

GaugeDescriptor gauge_from_json(const Json& j) {
  const Json& kind_field = field(j, "kind");
  if (!kind_field.is_string()) parse_fail("gauge kind must be a string");
  const auto kind = kind_field.get<std::string>();
  if (kind == "euclidean") return shape::Euclidean{};
  if (kind == "linf") return shape::LInf{};
  if (kind == "lp") return shape::Lp{number(field(j, "p"), "p")};
  if (kind == "box") return shape::Box{vector_from_json(field(j, "radii"), "radii")};
  if (kind == "interval") {
    return shape::Interval{number(field(j, "a"), "a"), number(field(j, "b"), "b")};
  }
  if (kind == "halfspaces") return shape::Halfspaces{vectors_from_json(field(j, "normals"), "normals")};
  parse_fail("unknown gauge kind \"" + kind + "\"");
}

Json gauge_to_json(const GaugeDescriptor& descriptor) {
  Json j;
  j["kind"] = std::string(kind_name(descriptor));
  if (const auto* lp = std::get_if<shape::Lp>(&descriptor)) j["p"] = lp->p;
  if (const auto* box = std::get_if<shape::Box>(&descriptor)) j["radii"] = vector_to_json(box->radii);
  if (const auto* iv = std::get_if<shape::Interval>(&descriptor)) {
    j["a"] = iv->a;
    j["b"] = iv->b;
  }
  if (const auto* hs = std::get_if<shape::Halfspaces>(&descriptor)) {
    Json normals = Json::array();
    for (const auto& u : hs->normals) normals.push_back(vector_to_json(u));
    j["normals"] = normals;
  }
  return j;
}

Instance instance_from_json(const Json& j) {
  const Json& dim = field(j, "dimension");
  if (!dim.is_number_integer()) parse_fail("dimension must be an integer");
  const int d = dim.get<int>();
  auto points = vectors_from_json(field(j, "points"), "points");
  GaugeDescriptor descriptor = gauge_from_json(field(j, "gauge"));
  return Instance(validate_gauge(std::move(descriptor), d), std::move(points));
}

Json instance_to_json(const Instance& inst) {
  Json j;
  j["dimension"] = inst.dimension();
  Json pts = Json::array();
  for (const auto& p : inst.points()) pts.push_back(vector_to_json(p));
  j["points"] = pts;
  j["gauge"] = gauge_to_json(inst.gauge().descriptor());
  return j;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    parse_fail(path.string() + ": " + e.what());
  }
}

Instance load_instance(const std::filesystem::path& path) {
  return instance_from_json(read_json_file(path));
}

CenterConfiguration centers_from_json(const Json& j, int dimension) {
  CenterConfiguration x;
  x.centers = vectors_from_json(j, "centers");
  if (x.centers.empty()) parse_fail("at least one center is required");
  for (std::size_t l = 0; l < x.size(); ++l) {
    if (x[l].size() != dimension) {
      throw Error(ErrorCode::DimensionMismatch,
                  "center " + std::to_string(l + 1) + " does not have dimension " + std::to_string(dimension));
    }
  }
  return x;
}

CenterConfiguration centers_from_text(const std::string& text, int dimension) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    try {
      return centers_from_json(Json::parse(text), dimension);
    } catch (const nlohmann::json::exception& e) {
      parse_fail(std::string("centers: ") + e.what());
    }
  }
  return centers_from_json(read_json_file(text), dimension);
}

Json vector_to_json(const Vector& v) {
  Json j = Json::array();
  for (Eigen::Index c = 0; c < v.size(); ++c) j.push_back(v[c]);
  return j;
}

Json centers_to_json(const CenterConfiguration& x) {
  Json j = Json::array();
  for (const auto& c : x.centers) j.push_back(vector_to_json(c));
  return j;
}

Json index_sets_to_json(const std::vector<IndexSet>& sets) {
  Json j = Json::array();
  for (const auto& s : sets) {
    Json block = Json::array();
    for (std::size_t i : s) block.push_back(i + 1);
    j.push_back(block);
  }
  return j;
}

Json to_json(const SolveReport& r) {
  Json j;
  j["k"] = r.centers.size();
  j["method"] = std::string(to_string(r.method));
  j["value"] = r.value;
  j["accuracy"] = r.accuracy;
  j["iterations"] = r.iterations;
  j["centers"] = centers_to_json(r.centers);
  j["partition"] = r.partition ? index_sets_to_json(*r.partition) : Json(nullptr);
  Json trace = Json::array();
  for (double v : r.trace) trace.push_back(v);
  j["trace"] = trace;
  return j;
}

SolveReport solve_report_from_json(const Json& j) {
  SolveReport r;
  const auto method = field(j, "method").get<std::string>();
  if (method == "exact_partition") {
    r.method = SolveMethod::ExactPartition;
  } else if (method == "alternating") {
    r.method = SolveMethod::Alternating;
  } else if (method == "multi_start") {
    r.method = SolveMethod::MultiStart;
  } else {
    parse_fail("unknown method " + method);
  }
  r.value = number(field(j, "value"), "value");
  r.accuracy = number(field(j, "accuracy"), "accuracy");
  r.iterations = field(j, "iterations").get<long>();
  r.centers.centers = vectors_from_json(field(j, "centers"), "centers");
  if (const auto& p = field(j, "partition"); !p.is_null()) {
    std::vector<IndexSet> blocks;
    for (const auto& b : p) {
      IndexSet s;
      for (const auto& i : b) s.push_back(i.get<std::size_t>() - 1);
      blocks.push_back(s);
    }
    r.partition = blocks;
  }
  for (const auto& v : field(j, "trace")) r.trace.push_back(v.get<double>());
  if (const auto it = j.find("seed"); it != j.end() && !it->is_null()) {
    r.seed = it->get<std::uint64_t>();
  }
  return r;
}

Json to_json(const OneCenterResult& r) {
  Json j;
  j["center"] = vector_to_json(r.center);
  j["radius"] = r.radius;
  j["method"] = std::string(to_string(r.method));
  j["accuracy"] = r.accuracy;
  j["converged"] = r.converged;
  j["iterations"] = r.iterations;
  return j;
}

Json to_json(const LocalCertificate& c) {
  Json j;
  j["verdict"] = std::string(to_string(c.verdict));
  j["singleton_ok"] = c.singleton_ok;
  j["recenter_ok"] = c.recenter_ok;
  j["value"] = c.value;
  j["margin"] = number_or_null(c.margin);
  j["stability_radius"] = number_or_null(c.stability_radius);
  Json per = Json::array();
  for (std::size_t l = 0; l < c.per_center.size(); ++l) {
    Json item;
    item["center"] = l + 1;
    item["attractive"] = c.per_center[l].attractive;
    item["one_center_gap"] = c.per_center[l].one_center_gap;
    per.push_back(item);
  }
  j["per_center"] = per;
  return j;
}

Json to_json(const CompactnessVerdict& v) {
  Json j;
  j["k"] = v.k;
  j["verdict"] = std::string(to_string(v.verdict));
  j["v_k"] = v.v_k;
  j["v_km1"] = v.v_km1;
  j["gap"] = v.gap;
  j["tolerance"] = v.tolerance;
  return j;
}

Json to_json(const ProbeOutcome& p) {
  Json j;
  j["verdict"] = p.improvement_found ? "improvement_found" : "no_improvement";
  j["value"] = p.base_value;
  j["best_value"] = p.best_value;
  j["witness"] = p.witness ? centers_to_json(*p.witness) : Json(nullptr);
  j["sample_index"] = p.sample_index >= 0 ? Json(p.sample_index + 1) : Json(nullptr);
  return j;
}

Json to_json(const TwoCenterBound& b) {
  Json j;
  j["r1"] = b.r1;
  j["epsilon_bar"] = b.epsilon_bar;
  j["bound"] = b.bound;
  j["value"] = b.achieved;
  j["gap"] = b.r1 - b.bound;
  j["one_center"] = vector_to_json(b.one_center);
  j["witness_w"] = vector_to_json(b.witness);
  j["centers"] = centers_to_json(b.centers);
  return j;
}

Json to_json(const ClusteringView& view) {
  Json j;
  j["tie_tolerance"] = view.tie_tolerance;
  j["attraction"] = index_sets_to_json(view.attraction);
  j["natural_blocks"] = index_sets_to_json(view.natural_blocks);
  j["active_sets"] = index_sets_to_json(view.active);
  return j;
}

Json make_report(const std::string& kind, const std::string& instance_id,
                 std::optional<std::uint64_t> seed, std::optional<double> elapsed_ms,
                 const Json& body) {
  Json j;
  j["report"] = kind;
  j["tool_version"] = kToolVersion;
  j["instance"] = instance_id;
  j["seed"] = seed ? Json(*seed) : Json(nullptr);
  j["elapsed_ms"] = elapsed_ms ? Json(*elapsed_ms) : Json(nullptr);
  for (const auto& [key, value] : body.items()) j[key] = value;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_atomic(const std::filesystem::path& path, const std::string& contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::InvalidParameter, "cannot write " + tmp.string());
    out << contents;
    if (!out) throw Error(ErrorCode::InvalidParameter, "write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string emit_csv(const std::vector<Json>& reports) {
  const std::vector<std::string> leading = {"instance", "report", "k", "method", "value", "gap", "verdict"};
  std::set<std::string> extra;
  for (const auto& r : reports) {
    for (const auto& [key, value] : r.items()) {
      if (value.is_structured()) continue;
      if (std::find(leading.begin(), leading.end(), key) == leading.end()) extra.insert(key);
    }
  }
  std::vector<std::string> columns = leading;
  columns.insert(columns.end(), extra.begin(), extra.end());

  std::ostringstream out;
  for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << columns[c];
  out << "\n";
  for (const auto& r : reports) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c) out << ",";
      const auto it = r.find(columns[c]);
      if (it != r.end() && !it->is_structured()) out << csv_cell(*it);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace kcenter::io

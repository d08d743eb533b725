// Versioned JSON reports: code parameters, provenance, distance witnesses,
// bound checks, and timing. Serialization is deterministic for identical
// contents; every derived number carries a method tag
// (rank-formula | theorem-formula | enumeration | bound-only).
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "hgp/css.hpp"
#include "hgp/version.hpp"

namespace hgp {

inline constexpr int kReportSchemaVersion = 1;

// The column order every serialized h_x / h_z and witness bitstring uses.
inline constexpr const char* kIndexConventionNote =
    "vertices (x,y) -> x*|V2|+y; E_L edge (a,b) -> a*|E2|+b; "
    "E_R edge (b,a) -> |V1|*|E2| + b*|E1|+a; qubit columns are E_L then E_R";

struct ConstructionInfo {
  std::string kind;  // e.g. "toric", "hgp", "hgp-single", "explicit-css"
  std::string spec;  // human-readable parameter echo
  std::optional<std::uint64_t> seed;
  std::string index_convention = kIndexConventionNote;
};

struct Report {
  ConstructionInfo construction;
  CodeParams params;
  std::optional<std::size_t> dimension_formula;  // closed-form K, when available
  std::optional<BoundReport> bounds;
  std::map<std::string, double> timing;  // phase -> seconds; zeroed in deterministic mode
};

namespace detail {

inline nlohmann::ordered_json distance_to_json(const DistanceResult& d) {
  nlohmann::ordered_json j;
  switch (d.kind) {
    case DistanceKind::kExact:
      j["status"] = "exact";
      j["value"] = d.weight;
      j["method"] = "enumeration";
      break;
    case DistanceKind::kLowerBoundOnly:
      j["status"] = "lower-bound";
      j["value"] = d.weight;  // all weights <= value are exhausted
      j["method"] = "bound-only";
      break;
    case DistanceKind::kInfinite:
      j["status"] = "infinite";
      j["method"] = "enumeration";
      break;
  }
  j["candidates_examined"] = d.candidates_examined;
  return j;
}

inline DistanceResult distance_from_json(const nlohmann::ordered_json& j) {
  DistanceResult d;
  const std::string status = j.at("status").get<std::string>();
  if (status == "exact") {
    d.kind = DistanceKind::kExact;
    d.weight = j.at("value").get<std::size_t>();
  } else if (status == "lower-bound") {
    d.kind = DistanceKind::kLowerBoundOnly;
    d.weight = j.at("value").get<std::size_t>();
  } else if (status == "infinite") {
    d.kind = DistanceKind::kInfinite;
  } else {
    throw std::invalid_argument("report: unknown distance status \"" + status + "\"");
  }
  d.candidates_examined = j.at("candidates_examined").get<std::size_t>();
  return d;
}

inline nlohmann::ordered_json histogram_to_json(const WeightHistogram& h) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [weight, count] : h) j[std::to_string(weight)] = count;
  return j;
}

inline WeightHistogram histogram_from_json(const nlohmann::ordered_json& j) {
  WeightHistogram h;
  for (const auto& [key, value] : j.items()) {
    h[static_cast<std::size_t>(std::stoull(key))] = value.get<std::size_t>();
  }
  return h;
}

}  // namespace detail

inline std::string to_json(const Report& report, int indent = 2) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["tool"] = {{"name", "hgp"}, {"version", kVersionString}};

  ordered_json construction;
  construction["kind"] = report.construction.kind;
  construction["spec"] = report.construction.spec;
  if (report.construction.seed) construction["seed"] = *report.construction.seed;
  construction["index_convention"] = report.construction.index_convention;
  j["construction"] = construction;

  const CodeParams& p = report.params;
  ordered_json params;
  params["n"] = p.n;
  params["k"] = {{"value", p.k}, {"method", "rank-formula"}};
  params["d"] = detail::distance_to_json(p.d);
  params["d_x"] = detail::distance_to_json(p.d_x);
  params["d_z"] = detail::distance_to_json(p.d_z);
  params["row_weights_x"] = detail::histogram_to_json(p.row_weights_x);
  params["row_weights_z"] = detail::histogram_to_json(p.row_weights_z);
  params["col_weights_x"] = detail::histogram_to_json(p.col_weights_x);
  params["col_weights_z"] = detail::histogram_to_json(p.col_weights_z);
  j["params"] = params;

  ordered_json witnesses = ordered_json::object();
  for (const auto& [name, d] : {std::pair<const char*, const DistanceResult*>{"d", &p.d},
                                {"d_x", &p.d_x},
                                {"d_z", &p.d_z}}) {
    if (d->exact()) witnesses[name] = d->witness.to_string();
  }
  j["witnesses"] = witnesses;

  if (report.dimension_formula) {
    j["dimension_formula"] = {{"value", *report.dimension_formula},
                              {"method", "theorem-formula"}};
  }

  if (report.bounds) {
    const BoundReport& b = *report.bounds;
    ordered_json bounds;
    bounds["d1"] = detail::distance_to_json(b.d1);
    bounds["d2"] = detail::distance_to_json(b.d2);
    bounds["d1_t"] = detail::distance_to_json(b.d1_t);
    bounds["d2_t"] = detail::distance_to_json(b.d2_t);
    bounds["lower"] = {{"holds", b.lower_holds}, {"conclusive", b.lower_conclusive}};
    bounds["upper1"] = {{"applicable", b.upper1_applicable},
                        {"holds", b.upper1_holds},
                        {"conclusive", b.upper1_conclusive}};
    bounds["upper2"] = {{"applicable", b.upper2_applicable},
                        {"holds", b.upper2_holds},
                        {"conclusive", b.upper2_conclusive}};
    bounds["note"] = b.note;
    j["bounds"] = bounds;
  }

  ordered_json timing = ordered_json::object();
  for (const auto& [phase, seconds] : report.timing) timing[phase] = seconds;
  j["timing"] = timing;

  return j.dump(indent) + "\n";
}

inline Report report_from_json(const std::string& text) {
  using nlohmann::ordered_json;
  const ordered_json j = ordered_json::parse(text);
  const int version = j.at("schema_version").get<int>();
  if (version != kReportSchemaVersion) {
    throw std::invalid_argument("report: unsupported schema_version " + std::to_string(version));
  }

  Report report;
  const ordered_json& construction = j.at("construction");
  report.construction.kind = construction.at("kind").get<std::string>();
  report.construction.spec = construction.at("spec").get<std::string>();
  if (construction.contains("seed")) {
    report.construction.seed = construction.at("seed").get<std::uint64_t>();
  }
  report.construction.index_convention = construction.at("index_convention").get<std::string>();

  const ordered_json& params = j.at("params");
  CodeParams& p = report.params;
  p.n = params.at("n").get<std::size_t>();
  p.k = params.at("k").at("value").get<std::size_t>();
  p.d = detail::distance_from_json(params.at("d"));
  p.d_x = detail::distance_from_json(params.at("d_x"));
  p.d_z = detail::distance_from_json(params.at("d_z"));
  p.row_weights_x = detail::histogram_from_json(params.at("row_weights_x"));
  p.row_weights_z = detail::histogram_from_json(params.at("row_weights_z"));
  p.col_weights_x = detail::histogram_from_json(params.at("col_weights_x"));
  p.col_weights_z = detail::histogram_from_json(params.at("col_weights_z"));

  const ordered_json& witnesses = j.at("witnesses");
  const auto load_witness = [&witnesses](const char* name, DistanceResult& d) {
    if (d.exact()) {
      d.witness = BinaryVector::from_bits(witnesses.at(name).get<std::string>());
    }
  };
  load_witness("d", p.d);
  load_witness("d_x", p.d_x);
  load_witness("d_z", p.d_z);

  if (j.contains("dimension_formula")) {
    report.dimension_formula = j.at("dimension_formula").at("value").get<std::size_t>();
  }

  if (j.contains("bounds")) {
    const ordered_json& bounds = j.at("bounds");
    BoundReport b;
    b.d1 = detail::distance_from_json(bounds.at("d1"));
    b.d2 = detail::distance_from_json(bounds.at("d2"));
    b.d1_t = detail::distance_from_json(bounds.at("d1_t"));
    b.d2_t = detail::distance_from_json(bounds.at("d2_t"));
    b.lower_holds = bounds.at("lower").at("holds").get<bool>();
    b.lower_conclusive = bounds.at("lower").at("conclusive").get<bool>();
    b.upper1_applicable = bounds.at("upper1").at("applicable").get<bool>();
    b.upper1_holds = bounds.at("upper1").at("holds").get<bool>();
    b.upper1_conclusive = bounds.at("upper1").at("conclusive").get<bool>();
    b.upper2_applicable = bounds.at("upper2").at("applicable").get<bool>();
    b.upper2_holds = bounds.at("upper2").at("holds").get<bool>();
    b.upper2_conclusive = bounds.at("upper2").at("conclusive").get<bool>();
    b.note = bounds.at("note").get<std::string>();
    report.bounds = b;
  }

  for (const auto& [phase, seconds] : j.at("timing").items()) {
    report.timing[phase] = seconds.get<double>();
  }
  return report;
}

}  // namespace hgp

// hgp: build, inspect, verify, and convert product CSS codes.
//
// Subcommands:
//   build   construct a code and write its matrices + provenance to a directory
//   params  compute [[N, K, D]] with certified distance annotations
//   verify  re-check every structural invariant of a built code
//   export  convert a matrix file between alist and JSON
//
// Exit codes: 0 success, 1 usage, 2 I/O or parse error, 3 verification
// failure, 4 budget exhausted where an exact answer was required.
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hgp/hgp.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitVerifyFail = 3;
constexpr int kExitBudget = 4;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("failed while reading " + path.string());
  return buffer.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << content;
  if (!out) throw IoError("failed while writing " + path.string());
}

// --- matrix JSON (the alternative to alist for --format json) --------------

std::string matrix_to_json(const hgp::BinaryMatrix& m) {
  nlohmann::ordered_json j;
  j["format"] = "binary-matrix";
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  auto data = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) data.push_back(m.row(r).to_string());
  j["data"] = data;
  return j.dump(2) + "\n";
}

hgp::BinaryMatrix matrix_from_json(const std::string& text, const std::string& origin) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(origin + ": " + e.what());
  }
  try {
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const auto data = j.at("data").get<std::vector<std::string>>();
    if (data.size() != rows) {
      throw IoError(origin + ": \"data\" has " + std::to_string(data.size()) +
                    " rows, header says " + std::to_string(rows));
    }
    hgp::BinaryMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      if (data[r].size() != cols) {
        throw IoError(origin + ": row " + std::to_string(r + 1) + " has " +
                      std::to_string(data[r].size()) + " bits, header says " +
                      std::to_string(cols));
      }
      for (std::size_t c = 0; c < cols; ++c) {
        if (data[r][c] != '0' && data[r][c] != '1') {
          throw IoError(origin + ": row " + std::to_string(r + 1) + " contains '" +
                        std::string(1, data[r][c]) + "'; expected only 0/1");
        }
        if (data[r][c] == '1') m.set(r, c, true);
      }
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(origin + ": " + e.what());
  }
}

hgp::BinaryMatrix load_matrix(const fs::path& path) {
  const std::string text = read_file(path);
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  const bool looks_json = path.extension() == ".json" ||
                          (first != std::string::npos && text[first] == '{');
  if (looks_json) return matrix_from_json(text, path.string());
  try {
    return hgp::parse_alist(text);
  } catch (const hgp::AlistParseError& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

void save_matrix(const fs::path& path, const hgp::BinaryMatrix& m, const std::string& format) {
  write_file(path, format == "json" ? matrix_to_json(m) : hgp::emit_alist(m));
}

// --- classical code spec strings --------------------------------------------

std::size_t parse_count(const std::string& token, const std::string& what) {
  try {
    std::size_t consumed = 0;
    const std::size_t value = std::stoull(token, &consumed);
    if (consumed != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    throw std::invalid_argument("expected a nonnegative integer for " + what + ", got \"" +
                                token + "\"");
  }
}

// Accepted forms: repetition:N, hamming:R, cycle:M, random-regular:N,T,W
// (T = column weight, W = row weight; the generator seed comes from --seed).
hgp::ClassicalCodeSpec parse_code_spec(const std::string& text, std::uint64_t seed) {
  const std::size_t colon = text.find(':');
  const std::string name = text.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);
  hgp::ClassicalCodeSpec spec;
  if (name == "repetition") {
    spec.kind = hgp::Repetition{parse_count(args, "repetition length")};
  } else if (name == "hamming") {
    spec.kind = hgp::Hamming{parse_count(args, "hamming parameter r")};
  } else if (name == "cycle") {
    spec.kind = hgp::CycleGraph{parse_count(args, "cycle length")};
  } else if (name == "random-regular") {
    std::vector<std::string> parts;
    std::istringstream in(args);
    std::string part;
    while (std::getline(in, part, ',')) parts.push_back(part);
    if (parts.size() != 3) {
      throw std::invalid_argument("random-regular needs N,T,W (columns, column weight, row weight)");
    }
    spec.kind = hgp::RandomRegular{parse_count(parts[0], "N"), parse_count(parts[1], "T"),
                                   parse_count(parts[2], "W"), seed};
  } else {
    throw std::invalid_argument(
        "unknown code spec \"" + text +
        "\"; expected repetition:N, hamming:R, cycle:M, or random-regular:N,T,W");
  }
  return spec;
}

std::string histogram_display(const hgp::WeightHistogram& h) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [weight, count] : h) {
    if (!first) os << ", ";
    os << weight << ':' << count;
    first = false;
  }
  os << '}';
  return os.str();
}

std::string bracket_value(const hgp::DistanceResult& d) {
  switch (d.kind) {
    case hgp::DistanceKind::kExact:
      return std::to_string(d.weight);
    case hgp::DistanceKind::kLowerBoundOnly:
      return ">=" + std::to_string(d.weight + 1);
    case hgp::DistanceKind::kInfinite:
      return "inf";
  }
  return "?";
}

std::string distance_annotation(const hgp::DistanceResult& d) {
  switch (d.kind) {
    case hgp::DistanceKind::kExact:
      return "Exact(" + std::to_string(d.weight) + ")";
    case hgp::DistanceKind::kLowerBoundOnly:
      return ">= " + std::to_string(d.weight + 1) + " (budget exhausted; all weights <= " +
             std::to_string(d.weight) + " ruled out)";
    case hgp::DistanceKind::kInfinite:
      return "inf";
  }
  return "?";
}

// --- code directory layout ---------------------------------------------------

struct LoadedCode {
  hgp::BinaryMatrix h_x;
  hgp::BinaryMatrix h_z;
  std::optional<hgp::BinaryMatrix> left;
  std::optional<hgp::BinaryMatrix> right;
  std::optional<hgp::ConstructionInfo> construction;
};

fs::path find_matrix_file(const fs::path& dir, const std::string& stem) {
  for (const char* ext : {".alist", ".json"}) {
    const fs::path candidate = dir / (stem + ext);
    if (fs::exists(candidate)) return candidate;
  }
  throw IoError("no " + stem + ".alist or " + stem + ".json in " + dir.string());
}

LoadedCode load_code_dir(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw IoError(dir.string() + " is not a directory");
  LoadedCode loaded{hgp::BinaryMatrix(0, 0), hgp::BinaryMatrix(0, 0), {}, {}, {}};

  const fs::path manifest = dir / "build.json";
  if (fs::exists(manifest)) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(read_file(manifest));
      const auto& files = j.at("files");
      loaded.h_x = load_matrix(dir / files.at("h_x").get<std::string>());
      loaded.h_z = load_matrix(dir / files.at("h_z").get<std::string>());
      if (files.contains("left") && files.contains("right")) {
        loaded.left = load_matrix(dir / files.at("left").get<std::string>());
        loaded.right = load_matrix(dir / files.at("right").get<std::string>());
      }
      const auto& construction = j.at("construction");
      hgp::ConstructionInfo info;
      info.kind = construction.at("kind").get<std::string>();
      info.spec = construction.at("spec").get<std::string>();
      if (construction.contains("seed")) info.seed = construction.at("seed").get<std::uint64_t>();
      info.index_convention = construction.at("index_convention").get<std::string>();
      loaded.construction = info;
    } catch (const nlohmann::json::exception& e) {
      throw IoError(manifest.string() + ": " + e.what());
    }
    return loaded;
  }

  loaded.h_x = load_matrix(find_matrix_file(dir, "h_x"));
  loaded.h_z = load_matrix(find_matrix_file(dir, "h_z"));
  for (const char* ext : {".alist", ".json"}) {
    if (fs::exists(dir / ("left" + std::string(ext))) &&
        fs::exists(dir / ("right" + std::string(ext)))) {
      loaded.left = load_matrix(dir / ("left" + std::string(ext)));
      loaded.right = load_matrix(dir / ("right" + std::string(ext)));
      break;
    }
  }
  return loaded;
}

// Rebuilds the product structure when the stored factors exactly reproduce
// the stored CSS pair; otherwise explains why the structural checks are skipped.
std::optional<hgp::ProductHypergraph> rebuild_product(const LoadedCode& loaded,
                                                      std::string* why_not) {
  if (!loaded.left || !loaded.right) {
    if (why_not) *why_not = "no factor matrices (left/right) stored with the code";
    return std::nullopt;
  }
  hgp::ProductHypergraph p =
      hgp::product(hgp::Hypergraph(*loaded.left), hgp::Hypergraph(*loaded.right));
  if (!(p.product().incidence() == loaded.h_x) || !(hgp::chamber_matrix(p) == loaded.h_z)) {
    if (why_not) *why_not = "stored factors do not reproduce the stored h_x/h_z";
    return std::nullopt;
  }
  return p;
}

struct PhaseClock {
  explicit PhaseClock(bool deterministic) : deterministic_(deterministic) {}

  template <typename F>
  auto time(const std::string& phase, F&& f) {
    const auto start = std::chrono::steady_clock::now();
    if constexpr (std::is_void_v<decltype(f())>) {
      f();
      record(phase, start);
    } else {
      auto result = f();
      record(phase, start);
      return result;
    }
  }

  void record(const std::string& phase, std::chrono::steady_clock::time_point start) {
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    timing[phase] = deterministic_ ? 0.0 : seconds;
  }

  std::map<std::string, double> timing;

 private:
  bool deterministic_;
};

// --- build -------------------------------------------------------------------

struct BuildArgs {
  std::string kind;
  std::size_t m = 0;
  std::string in;
  std::string left;
  std::string right;
  std::string code;
  std::string left_code;
  std::string right_code;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "alist";
};

int cmd_build(const BuildArgs& args) {
  hgp::BinaryMatrix left(0, 0);
  hgp::BinaryMatrix right(0, 0);
  std::string spec_echo;
  std::optional<std::uint64_t> used_seed;

  const auto classical = [&](const std::string& file, const std::string& code,
                             const std::string& role) {
    if (!file.empty() && !code.empty()) {
      throw std::invalid_argument("give either a matrix file or a code spec for " + role +
                                  ", not both");
    }
    if (!file.empty()) return load_matrix(file);
    if (code.rfind("random-regular", 0) == 0) used_seed = args.seed;
    return hgp::build_classical(parse_code_spec(code, args.seed));
  };

  if (args.kind == "toric") {
    if (args.m < 2) throw std::invalid_argument("build toric needs --m >= 2");
    left = hgp::cycle_graph_incidence(args.m);
    right = left;
    spec_echo = "toric --m " + std::to_string(args.m);
  } else if (args.kind == "hgp-single") {
    if (args.in.empty() && args.code.empty()) {
      throw std::invalid_argument("build hgp-single needs --in FILE or --code SPEC");
    }
    left = classical(args.in, args.code, "--in/--code");
    const std::size_t r = hgp::rank(left);
    if (r != left.rows()) {
      throw std::invalid_argument("hgp-single: input matrix has rank " + std::to_string(r) +
                                  " but " + std::to_string(left.rows()) +
                                  " rows; row-reduce it first");
    }
    right = hgp::transpose(left);
    spec_echo = "hgp-single " + (args.in.empty() ? args.code : args.in);
  } else {  // hgp
    if ((args.left.empty() && args.left_code.empty()) ||
        (args.right.empty() && args.right_code.empty())) {
      throw std::invalid_argument(
          "build hgp needs --left FILE or --left-code SPEC, and --right FILE or --right-code SPEC");
    }
    left = classical(args.left, args.left_code, "--left/--left-code");
    right = classical(args.right, args.right_code, "--right/--right-code");
    spec_echo = "hgp " + (args.left.empty() ? args.left_code : args.left) + " x " +
                (args.right.empty() ? args.right_code : args.right);
  }

  const hgp::HgpCode built = hgp::hgp(left, right);
  const hgp::ProductHypergraph& p = built.product;
  const std::size_t v1 = p.left().vertex_count(), e1 = p.left().edge_count();
  const std::size_t v2 = p.right().vertex_count(), e2 = p.right().edge_count();

  const fs::path dir(args.out);
  fs::create_directories(dir);
  const std::string ext = "." + args.format;
  save_matrix(dir / ("h_x" + ext), built.code.h_x(), args.format);
  save_matrix(dir / ("h_z" + ext), built.code.h_z(), args.format);
  save_matrix(dir / ("left" + ext), left, args.format);
  save_matrix(dir / ("right" + ext), right, args.format);

  nlohmann::ordered_json manifest;
  manifest["schema_version"] = hgp::kReportSchemaVersion;
  manifest["tool"] = {{"name", "hgp"}, {"version", hgp::kVersionString}};
  nlohmann::ordered_json construction;
  construction["kind"] = args.kind;
  construction["spec"] = spec_echo;
  if (used_seed) construction["seed"] = *used_seed;
  construction["index_convention"] = hgp::kIndexConventionNote;
  manifest["construction"] = construction;
  manifest["files"] = {{"h_x", "h_x" + ext},
                       {"h_z", "h_z" + ext},
                       {"left", "left" + ext},
                       {"right", "right" + ext}};
  manifest["n"] = built.code.length();
  write_file(dir / "build.json", manifest.dump(2) + "\n");

  std::cout << "built " << spec_echo << "\n"
            << "N = |V1||E2| + |V2||E1| = " << v1 << "*" << e2 << " + " << v2 << "*" << e1
            << " = " << built.code.length() << "\n"
            << "h_x: " << built.code.h_x().rows() << " rows, h_z: " << built.code.h_z().rows()
            << " rows\n"
            << "wrote " << (dir / "build.json").string() << " and matrices (" << args.format
            << ")\n";
  return kExitOk;
}

// --- params ------------------------------------------------------------------

struct AnalysisArgs {
  std::string dir;
  std::size_t full_enum_dim = hgp::SearchBudget{}.full_enum_dim;
  std::size_t max_weight = hgp::SearchBudget{}.max_weight;
  std::uint64_t max_candidates = hgp::SearchBudget{}.max_candidates;
  unsigned threads = 1;
  bool deterministic = false;
  std::string out;

  hgp::SearchBudget budget() const {
    return hgp::SearchBudget{full_enum_dim, max_weight, max_candidates};
  }
};

int cmd_params(const AnalysisArgs& args) {
  PhaseClock clock(args.deterministic);
  const LoadedCode loaded = clock.time("load_seconds", [&] { return load_code_dir(args.dir); });

  std::optional<hgp::CssCode> code;
  try {
    code.emplace(loaded.h_x, loaded.h_z);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: not a valid CSS pair: " << e.what() << "\n";
    return kExitVerifyFail;
  }

  const hgp::CodeParams params = clock.time(
      "params_seconds", [&] { return hgp::full_params(*code, args.budget(), args.threads); });

  hgp::Report report;
  if (loaded.construction) {
    report.construction = *loaded.construction;
  } else {
    report.construction.kind = "explicit-css";
    report.construction.spec = "matrices loaded from " + args.dir;
  }
  report.params = params;

  std::string why_not;
  const std::optional<hgp::ProductHypergraph> p = rebuild_product(loaded, &why_not);
  if (p) {
    report.dimension_formula = hgp::dimension_by_formula(*p);
    report.bounds = clock.time("bounds_seconds", [&] {
      return hgp::check_distance_bounds(*p, params, args.budget(), args.threads);
    });
  } else if (loaded.left || loaded.right) {
    std::cerr << "warning: skipping factor-derived checks: " << why_not << "\n";
  }

  std::cout << "[[" << params.n << "," << params.k << "," << bracket_value(params.d) << "]] D="
            << distance_annotation(params.d);
  if (params.k == 0) std::cout << " (no logical qubits)";
  std::cout << "\n";
  std::cout << "  d_x = " << distance_annotation(params.d_x)
            << "  (candidates examined: " << params.d_x.candidates_examined << ")\n";
  std::cout << "  d_z = " << distance_annotation(params.d_z)
            << "  (candidates examined: " << params.d_z.candidates_examined << ")\n";
  if (report.dimension_formula) {
    std::cout << "  K by closed formula: " << *report.dimension_formula << "\n";
  }
  std::cout << "  row weights  h_x " << histogram_display(params.row_weights_x) << "  h_z "
            << histogram_display(params.row_weights_z) << "\n";
  std::cout << "  col weights  h_x " << histogram_display(params.col_weights_x) << "  h_z "
            << histogram_display(params.col_weights_z) << "\n";

  report.timing = clock.timing;
  if (!args.out.empty()) {
    write_file(args.out, hgp::to_json(report));
    std::cout << "wrote " << args.out << "\n";
  }
  return kExitOk;
}

// --- verify ------------------------------------------------------------------

struct CheckTally {
  int passed = 0;
  int failed = 0;
  int unresolved = 0;

  void pass(const std::string& name, const std::string& detail) {
    ++passed;
    std::cout << "PASS  " << name << ": " << detail << "\n";
  }
  void fail(const std::string& name, const std::string& detail) {
    ++failed;
    std::cout << "FAIL  " << name << ": " << detail << "\n";
  }
  void unresolved_check(const std::string& name, const std::string& detail) {
    ++unresolved;
    std::cout << "UNRESOLVED  " << name << ": " << detail << "\n";
  }
  void check(bool ok, const std::string& name, const std::string& detail) {
    ok ? pass(name, detail) : fail(name, detail);
  }
};

int cmd_verify(const AnalysisArgs& args) {
  const LoadedCode loaded = load_code_dir(args.dir);
  CheckTally tally;

  const bool orthogonal =
      hgp::mat_mul(loaded.h_x, hgp::transpose(loaded.h_z)).is_zero() &&
      loaded.h_x.cols() == loaded.h_z.cols();
  tally.check(orthogonal, "orthogonality", "every h_x row is orthogonal to every h_z row");

  const std::size_t n = loaded.h_x.cols();
  const std::size_t rank_x = hgp::rank(loaded.h_x);
  const std::size_t rank_z = hgp::rank(loaded.h_z);
  tally.check(rank_x + rank_z <= n, "rank-consistency",
              "rank(h_x) + rank(h_z) = " + std::to_string(rank_x) + " + " +
                  std::to_string(rank_z) + " <= N = " + std::to_string(n));

  std::string why_not;
  const std::optional<hgp::ProductHypergraph> p = rebuild_product(loaded, &why_not);
  if (!p) {
    std::cerr << "warning: " << why_not
              << "; only orthogonality and rank checks were run\n";
    if (loaded.left && loaded.right) {
      tally.fail("factor-integrity", why_not);
    }
    std::cout << "verification: " << tally.passed << " passed, " << tally.failed << " failed\n";
    return tally.failed == 0 ? kExitOk : kExitVerifyFail;
  }
  tally.pass("factor-integrity", "stored factors reproduce h_x and h_z exactly");

  const hgp::Hypergraph& h1 = p->left();
  const hgp::Hypergraph& h2 = p->right();
  const std::size_t k1 = hgp::cycle_code_dim(h1);
  const std::size_t k2 = hgp::cycle_code_dim(h2);
  const std::size_t r1 = hgp::cycle_code_dim(hgp::transpose_hg(h1));
  const std::size_t r2 = hgp::cycle_code_dim(hgp::transpose_hg(h2));

  // Every chamber-row sum over a cycle pair cancels edge-by-edge.
  {
    const std::vector<hgp::BinaryVector> z1 = hgp::kernel_basis(h1.incidence());
    const std::vector<hgp::BinaryVector> z2 = hgp::kernel_basis(h2.incidence());
    bool all_zero = true;
    std::size_t pairs = 0;
    for (const hgp::BinaryVector& a : z1) {
      for (const hgp::BinaryVector& b : z2) {
        hgp::BinaryVector sum(p->edge_count());
        for (std::size_t alpha = 0; alpha < h1.edge_count(); ++alpha) {
          if (!a.get(alpha)) continue;
          for (std::size_t beta = 0; beta < h2.edge_count(); ++beta) {
            if (!b.get(beta)) continue;
            sum ^= hgp::chamber_support(*p, alpha, beta);
          }
        }
        all_zero = all_zero && sum.is_zero();
        ++pairs;
      }
    }
    tally.check(all_zero, "chamber-redundancy",
                "chamber sums over " + std::to_string(pairs) +
                    " cycle-basis pairs all vanish" + (pairs == 0 ? " (vacuous)" : ""));
  }

  const std::size_t chamber_rank = rank_z;
  const std::size_t expect_chamber = h1.edge_count() * h2.edge_count() - k1 * k2;
  tally.check(chamber_rank == expect_chamber, "chamber-rank",
              "rank(h_z) = " + std::to_string(chamber_rank) + ", |E1||E2| - k1*k2 = " +
                  std::to_string(expect_chamber));

  const std::size_t expect_incidence = h1.vertex_count() * h2.vertex_count() - r1 * r2;
  tally.check(rank_x == expect_incidence, "incidence-rank",
              "rank(h_x) = " + std::to_string(rank_x) + ", |V1||V2| - r1*r2 = " +
                  std::to_string(expect_incidence));

  std::size_t k_rank = 0;
  std::size_t k_formula = 0;
  bool dimension_ok = orthogonal;
  if (orthogonal) {
    const hgp::CssCode code(loaded.h_x, loaded.h_z);
    k_rank = hgp::quantum_dimension(code);
    k_formula = hgp::dimension_by_formula(*p);
    dimension_ok = (k_rank == k_formula);
  }
  tally.check(dimension_ok, "dimension-formula",
              orthogonal ? "K by rank = " + std::to_string(k_rank) + ", closed formula = " +
                               std::to_string(k_formula)
                         : "skipped: pair is not orthogonal");

  if (orthogonal && k_rank == 0) {
    tally.check(rank_x + rank_z == n, "rank-duality-at-zero",
                "K = 0 and rank(h_x) + rank(h_z) = " + std::to_string(rank_x + rank_z) +
                    " = N = " + std::to_string(n));
  }

  {
    const hgp::PoincareDual dual = hgp::poincare_dual(*p);
    const hgp::BinaryMatrix dual_chambers = hgp::chamber_matrix(dual.dual);
    const hgp::BinaryMatrix primal_chambers = hgp::chamber_matrix(*p);
    bool ok = dual_chambers.rows() == p->vertex_count() &&
              primal_chambers.rows() == dual.dual.vertex_count();
    for (std::size_t r = 0; ok && r < dual_chambers.rows(); ++r) {
      ok = hgp::transport(dual_chambers.row(r), dual.dual_to_primal) ==
           p->product().incidence().row(r);
    }
    for (std::size_t r = 0; ok && r < primal_chambers.rows(); ++r) {
      ok = hgp::transport(primal_chambers.row(r), dual.primal_to_dual) ==
           dual.dual.product().incidence().row(r);
    }
    tally.check(ok, "poincare-duality",
                "dual chambers are vertex stars under the edge identification, both directions");
  }

  if (orthogonal) {
    const hgp::CssCode code(loaded.h_x, loaded.h_z);
    const hgp::CodeParams params = hgp::full_params(code, args.budget(), args.threads);
    const hgp::BoundReport bounds =
        hgp::check_distance_bounds(*p, params, args.budget(), args.threads);
    const std::string quantum = "D = " + hgp::to_string(params.d);
    const std::string classical = "d1 = " + hgp::to_string(bounds.d1) +
                                  ", d2 = " + hgp::to_string(bounds.d2) +
                                  ", d1^T = " + hgp::to_string(bounds.d1_t) +
                                  ", d2^T = " + hgp::to_string(bounds.d2_t);
    if (!bounds.all_hold()) {
      tally.fail("distance-bounds", quantum + " violates " + classical);
    } else if (!bounds.conclusive()) {
      tally.unresolved_check("distance-bounds",
                             quantum + ", " + classical +
                                 "; budget exhausted before the bounds could be certified "
                                 "(raise --max-weight / --max-candidates)");
    } else {
      std::string detail = quantum + " within " + classical;
      if (!bounds.note.empty()) detail += " (" + bounds.note + ")";
      tally.pass("distance-bounds", detail);
    }
  } else {
    tally.fail("distance-bounds", "skipped: pair is not orthogonal");
  }

  std::cout << "verification: " << tally.passed << " passed, " << tally.failed << " failed";
  if (tally.unresolved > 0) std::cout << ", " << tally.unresolved << " unresolved";
  std::cout << "\n";
  if (tally.failed > 0) return kExitVerifyFail;
  if (tally.unresolved > 0) return kExitBudget;
  return kExitOk;
}

// --- export ------------------------------------------------------------------

struct ExportArgs {
  std::string in;
  std::string out;
  std::string format;
};

int cmd_export(const ExportArgs& args) {
  const hgp::BinaryMatrix m = load_matrix(args.in);
  std::string format = args.format;
  if (format.empty()) {
    format = fs::path(args.out).extension() == ".json" ? "json" : "alist";
  }
  save_matrix(args.out, m, format);
  std::cout << "wrote " << args.out << " (" << format << ", " << m.rows() << "x" << m.cols()
            << ", " << m.count_ones() << " ones)\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hgp: build, inspect, and verify product CSS codes"};
  app.require_subcommand(1);

  BuildArgs build_args;
  CLI::App* build = app.add_subcommand("build", "construct a code and write it to a directory");
  build->add_option("kind", build_args.kind, "toric | hgp-single | hgp")
      ->required()
      ->check(CLI::IsMember({"toric", "hgp-single", "hgp"}));
  build->add_option("--m", build_args.m, "grid size for toric (>= 2)");
  build->add_option("--in", build_args.in, "matrix file for hgp-single");
  build->add_option("--left", build_args.left, "left factor matrix file for hgp");
  build->add_option("--right", build_args.right, "right factor matrix file for hgp");
  build->add_option("--code", build_args.code,
                    "generated input for hgp-single: repetition:N | hamming:R | cycle:M | "
                    "random-regular:N,T,W");
  build->add_option("--left-code", build_args.left_code, "generated left factor for hgp");
  build->add_option("--right-code", build_args.right_code, "generated right factor for hgp");
  build->add_option("--seed", build_args.seed, "seed for random-regular generation");
  build->add_option("--out", build_args.out, "output directory")->required();
  build->add_option("--format", build_args.format, "matrix file format")
      ->check(CLI::IsMember({"alist", "json"}));

  AnalysisArgs params_args;
  CLI::App* params = app.add_subcommand("params", "compute [[N, K, D]] with certified distances");
  params->add_option("dir", params_args.dir, "code directory written by build")->required();
  params->add_option("--full-enum-dim", params_args.full_enum_dim,
                     "kernel dimension up to which the search enumerates exhaustively");
  params->add_option("--max-weight", params_args.max_weight,
                     "largest weight the sweep search tries before reporting a bound");
  params->add_option("--max-candidates", params_args.max_candidates,
                     "candidate budget for the sweep search");
  params->add_option("--threads", params_args.threads, "worker threads for distance search");
  params->add_flag("--deterministic", params_args.deterministic, "zero timing fields in reports");
  params->add_option("--out", params_args.out, "write a JSON report here");

  AnalysisArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "re-check structural invariants of a built code");
  verify->add_option("dir", verify_args.dir, "code directory written by build")->required();
  verify->add_option("--full-enum-dim", verify_args.full_enum_dim,
                     "kernel dimension up to which the search enumerates exhaustively");
  verify->add_option("--max-weight", verify_args.max_weight,
                     "largest weight the sweep search tries before reporting a bound");
  verify->add_option("--max-candidates", verify_args.max_candidates,
                     "candidate budget for the sweep search");
  verify->add_option("--threads", verify_args.threads, "worker threads for distance search");
  verify->add_flag("--deterministic", verify_args.deterministic, "zero timing fields in reports");

  ExportArgs export_args;
  CLI::App* exporter = app.add_subcommand("export", "convert a matrix between alist and JSON");
  exporter->add_option("--in", export_args.in, "input matrix file")->required();
  exporter->add_option("--out", export_args.out, "output matrix file")->required();
  exporter->add_option("--format", export_args.format, "output format (default: by extension)")
      ->check(CLI::IsMember({"alist", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*build) return cmd_build(build_args);
    if (*params) return cmd_params(params_args);
    if (*verify) return cmd_verify(verify_args);
    if (*exporter) return cmd_export(export_args);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const hgp::AlistParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kExitVerifyFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

#pragma once

// CSS codes from pairs of orthogonal GF(2) check matrices, their exact
// parameters, and structural distance bounds for product-built codes.
//
// The minimum-distance primitive is min_weight_coset(checks, excluded): the
// smallest weight of a nonzero v with checks*v = 0 that is not a row-space
// member of excluded.  Two strategies cover desk scale:
//   * kernel dimension <= budget.full_enum_dim: enumerate the whole kernel in
//     Gray-code order over a basis split into (kernel-inside-excluded) and
//     complement parts, so quotient membership is a single index comparison.
//     Always exact.
//   * otherwise: increasing-weight sweep over all supports of weight 1, 2, ...
//     against packed column syndromes.  Exact when a level produces a hit
//     (all lighter levels were exhausted), LowerBoundOnly when the candidate
//     or weight budget runs out first.
// Budget exhaustion is a value, never an exception.  Parallel runs partition
// the enumeration space deterministically and merge by (weight, canonical
// order), so results do not depend on the worker count.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "hgp/gf2.hpp"
#include "hgp/hypergraph.hpp"

namespace hgp {

enum class DistanceKind { kExact, kLowerBoundOnly, kInfinite };

struct DistanceResult {
  DistanceKind kind = DistanceKind::kInfinite;
  // kExact: the minimum weight.  kLowerBoundOnly: the largest weight whose
  // candidates were all exhausted (the true minimum is strictly larger).
  std::size_t weight = 0;
  BinaryVector witness;  // a minimum-weight vector; set only for kExact
  std::uint64_t candidates_examined = 0;

  bool exact() const { return kind == DistanceKind::kExact; }
  bool infinite() const { return kind == DistanceKind::kInfinite; }
  bool bound_only() const { return kind == DistanceKind::kLowerBoundOnly; }

  // Smallest value the true minimum weight could take given this result.
  std::size_t floor() const {
    switch (kind) {
      case DistanceKind::kExact:
        return weight;
      case DistanceKind::kLowerBoundOnly:
        return weight + 1;
      case DistanceKind::kInfinite:
        return static_cast<std::size_t>(-1);
    }
    return 0;
  }
};

inline std::string to_string(const DistanceResult& r) {
  switch (r.kind) {
    case DistanceKind::kExact:
      return "Exact(" + std::to_string(r.weight) + ")";
    case DistanceKind::kLowerBoundOnly:
      return ">=" + std::to_string(r.weight + 1);
    case DistanceKind::kInfinite:
      return "inf";
  }
  return "?";
}

struct SearchBudget {
  // Kernel dimensions up to this bound are fully enumerated (2^dim states).
  std::size_t full_enum_dim = 28;
  // Heaviest support level the increasing-weight fallback may try.
  std::size_t max_weight = 12;
  // Total candidate supports the fallback may enumerate across levels.
  std::uint64_t max_candidates = 1'000'000'000;
};

class CssCode {
 public:
  // Validates shapes and row-pair orthogonality; the error names the first
  // offending pair in h_x-row-major order.
  CssCode(BinaryMatrix h_x, BinaryMatrix h_z) : h_x_(std::move(h_x)), h_z_(std::move(h_z)) {
    if (h_x_.cols() != h_z_.cols()) {
      throw std::invalid_argument("CssCode: h_x and h_z act on different numbers of bits");
    }
    const BinaryMatrix prod = mat_mul(h_x_, transpose(h_z_));
    for (std::size_t r = 0; r < prod.rows(); ++r) {
      for (std::size_t c = 0; c < prod.cols(); ++c) {
        if (prod.get(r, c)) {
          throw std::invalid_argument("CssCode: h_x row " + std::to_string(r) +
                                      " is not orthogonal to h_z row " + std::to_string(c));
        }
      }
    }
  }

  const BinaryMatrix& h_x() const { return h_x_; }
  const BinaryMatrix& h_z() const { return h_z_; }
  std::size_t length() const { return h_x_.cols(); }

 private:
  BinaryMatrix h_x_;
  BinaryMatrix h_z_;
};

// Number of logical qubits: n - rank(h_x) - rank(h_z).  Orthogonality makes
// this non-negative; a negative value would mean corrupted inputs.
inline std::size_t quantum_dimension(const CssCode& c) {
  const auto n = static_cast<long long>(c.length());
  const long long k =
      n - static_cast<long long>(rank(c.h_x())) - static_cast<long long>(rank(c.h_z()));
  if (k < 0) {
    throw std::logic_error("quantum_dimension: rank sum exceeds the code length");
  }
  return static_cast<std::size_t>(k);
}

// Closed-form dimension of the product code, computed from the factors alone.
// Evaluates both equivalent forms (one over the transposed factors' cycle
// dimensions r, s; one over the factors' cycle dimensions k, h) and insists
// they agree before returning.
inline std::size_t dimension_by_formula(const ProductHypergraph& p) {
  const auto v1 = static_cast<long long>(p.left().vertex_count());
  const auto e1 = static_cast<long long>(p.left().edge_count());
  const auto v2 = static_cast<long long>(p.right().vertex_count());
  const auto e2 = static_cast<long long>(p.right().edge_count());
  const auto r = static_cast<long long>(cycle_code_dim(transpose_hg(p.left())));
  const auto s = static_cast<long long>(cycle_code_dim(transpose_hg(p.right())));
  const auto k = static_cast<long long>(cycle_code_dim(p.left()));
  const auto h = static_cast<long long>(cycle_code_dim(p.right()));

  const long long form_a = 2 * r * s + r * (e2 - v2) + s * (e1 - v1);
  const long long form_b = 2 * k * h + k * (v2 - e2) + h * (v1 - e1);
  if (form_a != form_b) {
    throw std::logic_error("dimension_by_formula: the two closed forms disagree");
  }
  if (form_a < 0) {
    throw std::logic_error("dimension_by_formula: negative dimension");
  }
  return static_cast<std::size_t>(form_a);
}

namespace detail {

// C(n, w) clamped to cap+1 so budget comparisons never overflow; requires
// cap < 2^63.
inline std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t w, std::uint64_t cap) {
  if (w > n) return 0;
  w = std::min(w, n - w);
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= w; ++i) {
    result = result * (n - w + i) / i;  // exactly divisible at every step
    if (result > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(result);
}

struct GrayBest {
  std::size_t weight = static_cast<std::size_t>(-1);
  std::uint64_t index = 0;  // enumeration index of the first minimum
};

// Scans Gray-code states with indices in [lo, hi); state at index i is the
// XOR of basis rows selected by the bits of gray(i) = i ^ (i >> 1).  Only
// indices >= candidate_start correspond to vectors outside the excluded
// subspace (the basis is ordered with the excluded-intersection part first).
inline GrayBest gray_scan(const std::vector<std::uint64_t>& basis_words, std::size_t stride,
                          std::uint64_t lo, std::uint64_t hi, std::uint64_t candidate_start) {
  GrayBest best;
  std::vector<std::uint64_t> state(stride, 0);
  const std::uint64_t start_gray = (lo - 1) ^ ((lo - 1) >> 1);
  for (std::size_t bit = 0; bit < 64; ++bit) {
    if ((start_gray >> bit) & 1) {
      const std::uint64_t* row = basis_words.data() + bit * stride;
      for (std::size_t j = 0; j < stride; ++j) state[j] ^= row[j];
    }
  }
  for (std::uint64_t i = lo; i < hi; ++i) {
    const auto flip = static_cast<std::size_t>(std::countr_zero(i));
    const std::uint64_t* row = basis_words.data() + flip * stride;
    std::size_t w = 0;
    for (std::size_t j = 0; j < stride; ++j) {
      state[j] ^= row[j];
      w += static_cast<std::size_t>(std::popcount(state[j]));
    }
    if (i >= candidate_start && w < best.weight) {
      best.weight = w;
      best.index = i;
    }
  }
  return best;
}

// One weight level of the increasing-weight sweep, restricted to supports
// whose smallest element c0 satisfies c0 % step == offset.  Enumerates in
// lexicographic order and returns the first support whose syndrome vanishes
// and which reduces to nonzero against the excluded row space.
struct LevelHit {
  bool found = false;
  std::vector<std::size_t> support;
};

class LevelScanner {
 public:
  LevelScanner(const std::vector<std::uint64_t>& col_syndromes, std::size_t stride, std::size_t n,
               std::size_t weight, const RowEchelon& excluded)
      : cols_(col_syndromes), stride_(stride), n_(n), weight_(weight), excluded_(excluded) {}

  LevelHit run(std::size_t offset, std::size_t step) {
    partial_.assign(stride_, 0);
    picks_.assign(weight_, 0);
    hit_ = LevelHit{};
    for (std::size_t c0 = offset; c0 + weight_ <= n_; c0 += step) {
      picks_[0] = c0;
      xor_col(c0);
      if (weight_ == 1) {
        if (is_partial_zero()) record_if_qualifying();
      } else {
        descend(1, c0 + 1);
      }
      xor_col(c0);
      if (hit_.found) break;  // later c0 values are lexicographically larger
    }
    return hit_;
  }

 private:
  void descend(std::size_t depth, std::size_t start) {
    if (depth + 1 == weight_) {
      // Last pick: a hit needs the remaining syndrome to equal one column.
      for (std::size_t j = start; j < n_; ++j) {
        if (syndrome_equals_col(j)) {
          picks_[depth] = j;
          record_if_qualifying();
          if (hit_.found) return;
        }
      }
      return;
    }
    for (std::size_t j = start; j + (weight_ - depth) <= n_; ++j) {
      picks_[depth] = j;
      xor_col(j);
      descend(depth + 1, j + 1);
      xor_col(j);
      if (hit_.found) return;
    }
  }

  void xor_col(std::size_t c) {
    const std::uint64_t* col = cols_.data() + c * stride_;
    for (std::size_t j = 0; j < stride_; ++j) partial_[j] ^= col[j];
  }

  bool is_partial_zero() const {
    for (std::size_t j = 0; j < stride_; ++j) {
      if (partial_[j] != 0) return false;
    }
    return true;
  }

  bool syndrome_equals_col(std::size_t c) const {
    const std::uint64_t* col = cols_.data() + c * stride_;
    for (std::size_t j = 0; j < stride_; ++j) {
      if (partial_[j] != col[j]) return false;
    }
    return true;
  }

  void record_if_qualifying() {
    BinaryVector v(n_);
    for (std::size_t p : picks_) v.set(p, true);
    if (!excluded_.contains(v)) {
      hit_.found = true;
      hit_.support = picks_;
    }
  }

  const std::vector<std::uint64_t>& cols_;
  std::size_t stride_;
  std::size_t n_;
  std::size_t weight_;
  const RowEchelon& excluded_;
  std::vector<std::uint64_t> partial_;
  std::vector<std::size_t> picks_;
  LevelHit hit_;
};

}  // namespace detail

// Minimum weight over {v != 0 : checks v = 0, v not in rowspace(excluded)}.
// Returns Infinite when that set is empty (the kernel lies inside the
// excluded row space).  Exact results carry a witness that is re-verified
// against the inputs before returning.  Identical inputs and budgets yield
// identical results (including candidate counts) for any thread count.
inline DistanceResult min_weight_coset(const BinaryMatrix& checks, const BinaryMatrix& excluded,
                                       const SearchBudget& budget = {}, unsigned threads = 1) {
  if (excluded.cols() != checks.cols()) {
    throw std::invalid_argument("min_weight_coset: checks and excluded widths differ");
  }
  const std::size_t n = checks.cols();
  const std::size_t full_enum_dim = std::min<std::size_t>(budget.full_enum_dim, 62);
  threads = std::max(1u, threads);

  const std::vector<BinaryVector> kernel = kernel_basis(checks);
  DistanceResult result;
  if (kernel.empty()) {
    return result;  // kernel is {0}: nothing qualifies
  }

  // Basis of kernel ∩ rowspace(excluded): solve checks * (x^T * reduced) = 0
  // over combinations x of the independent excluded rows.
  const RowEchelon excluded_space(excluded);
  std::vector<BinaryVector> intersection;
  if (excluded_space.rank() > 0) {
    const BinaryMatrix reduced =
        BinaryMatrix::from_rows(excluded_space.rows(), n);
    const auto coefficient_kernel = kernel_basis(mat_mul(checks, transpose(reduced)));
    intersection.reserve(coefficient_kernel.size());
    for (const auto& x : coefficient_kernel) {
      BinaryVector v(n);
      for (std::size_t j = 0; j < reduced.rows(); ++j) {
        if (x.get(j)) v ^= reduced.row(j);
      }
      intersection.push_back(std::move(v));
    }
  }
  if (intersection.size() == kernel.size()) {
    return result;  // every kernel vector is excluded
  }

  const auto verify_witness = [&](const DistanceResult& r) {
    if (r.witness.weight() != r.weight || !mat_vec(checks, r.witness).is_zero() ||
        in_row_space(excluded, r.witness)) {
      throw std::logic_error("min_weight_coset: search produced an invalid witness");
    }
  };

  if (kernel.size() <= full_enum_dim) {
    // Full enumeration.  Basis order: intersection part first, then a
    // complement built from kernel vectors, so a state lies outside the
    // excluded space iff its enumeration index reaches the complement bits.
    std::vector<BinaryVector> basis = intersection;
    {
      std::vector<BinaryVector> acc = intersection;  // incremental independence check
      RowEchelon probe(BinaryMatrix::from_rows(acc, n));
      for (const auto& b : kernel) {
        if (basis.size() == kernel.size()) break;
        if (!probe.contains(b)) {
          basis.push_back(b);
          acc.push_back(b);
          probe = RowEchelon(BinaryMatrix::from_rows(acc, n));
        }
      }
      if (basis.size() != kernel.size()) {
        throw std::logic_error("min_weight_coset: failed to complete the kernel basis");
      }
    }

    const std::size_t dim = basis.size();
    const std::size_t stride = words_for_bits(n);
    std::vector<std::uint64_t> basis_words(dim * stride, 0);
    for (std::size_t i = 0; i < dim; ++i) {
      std::copy(basis[i].words().begin(), basis[i].words().end(),
                basis_words.begin() + static_cast<std::ptrdiff_t>(i * stride));
    }

    const std::uint64_t total = std::uint64_t{1} << dim;
    const std::uint64_t candidate_start = std::uint64_t{1} << intersection.size();
    std::vector<detail::GrayBest> bests;
    const std::uint64_t span = total - 1;
    const auto worker_count =
        span < 1u << 20 ? std::uint64_t{1} : std::min<std::uint64_t>(threads, span);
    if (worker_count == 1) {
      bests.push_back(detail::gray_scan(basis_words, stride, 1, total, candidate_start));
    } else {
      bests.resize(worker_count);
      std::vector<std::thread> pool;
      for (std::uint64_t t = 0; t < worker_count; ++t) {
        const std::uint64_t lo = 1 + span * t / worker_count;
        const std::uint64_t hi = 1 + span * (t + 1) / worker_count;
        pool.emplace_back([&, t, lo, hi] {
          bests[t] = detail::gray_scan(basis_words, stride, lo, hi, candidate_start);
        });
      }
      for (auto& th : pool) th.join();
    }
    detail::GrayBest best;
    for (const auto& b : bests) {
      if (b.weight < best.weight || (b.weight == best.weight && b.index < best.index)) {
        best = b;
      }
    }

    result.kind = DistanceKind::kExact;
    result.weight = best.weight;
    result.candidates_examined = total - candidate_start;
    result.witness = BinaryVector(n);
    const std::uint64_t gray = best.index ^ (best.index >> 1);
    for (std::size_t bit = 0; bit < dim; ++bit) {
      if ((gray >> bit) & 1) result.witness ^= basis[bit];
    }
    verify_witness(result);
    return result;
  }

  // Increasing-weight sweep.  Levels are entered only when they fit in the
  // remaining candidate budget, and each entered level is charged in full, so
  // counts do not depend on where a hit occurs or on the thread count.
  const std::size_t stride = words_for_bits(checks.rows());
  std::vector<std::uint64_t> col_syndromes(n * stride, 0);
  for (std::size_t r = 0; r < checks.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (checks.get(r, c)) {
        col_syndromes[c * stride + r / kWordBits] |= std::uint64_t{1} << (r % kWordBits);
      }
    }
  }

  const std::uint64_t max_candidates =
      std::min(budget.max_candidates, std::uint64_t{1} << 62);
  std::uint64_t used = 0;
  const std::size_t weight_limit = std::min(budget.max_weight, n);
  for (std::size_t w = 1; w <= weight_limit; ++w) {
    const std::uint64_t level_size = detail::binomial_capped(n, w, max_candidates);
    if (level_size > max_candidates - used) {
      result.kind = DistanceKind::kLowerBoundOnly;
      result.weight = w - 1;
      result.candidates_examined = used;
      return result;
    }
    used += level_size;

    const std::size_t partitions = n - w + 1;  // by smallest support element
    const auto worker_count = static_cast<std::size_t>(
        level_size < 1u << 20 ? 1 : std::min<std::uint64_t>(threads, partitions));
    std::vector<detail::LevelHit> hits(worker_count);
    if (worker_count == 1) {
      hits[0] = detail::LevelScanner(col_syndromes, stride, n, w, excluded_space).run(0, 1);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t t = 0; t < worker_count; ++t) {
        pool.emplace_back([&, t] {
          detail::LevelScanner scanner(col_syndromes, stride, n, w, excluded_space);
          hits[t] = scanner.run(t, worker_count);
        });
      }
      for (auto& th : pool) th.join();
    }

    const detail::LevelHit* best = nullptr;
    for (const auto& h : hits) {
      if (h.found && (best == nullptr || h.support < best->support)) best = &h;
    }
    if (best != nullptr) {
      result.kind = DistanceKind::kExact;
      result.weight = w;
      result.candidates_examined = used;
      result.witness = BinaryVector(n);
      for (std::size_t p : best->support) result.witness.set(p, true);
      verify_witness(result);
      return result;
    }
  }

  result.kind = DistanceKind::kLowerBoundOnly;
  result.weight = weight_limit;
  result.candidates_examined = used;
  return result;
}

// Minimum weight of a nonzero kernel vector of checks; Infinite when the
// kernel is trivial.
inline DistanceResult classical_min_distance(const BinaryMatrix& checks,
                                             const SearchBudget& budget = {},
                                             unsigned threads = 1) {
  return min_weight_coset(checks, BinaryMatrix(0, checks.cols()), budget, threads);
}

// Minimum of two one-sided results, propagating exactness only when the
// smaller side is certain to dominate.
inline DistanceResult combine_min(const DistanceResult& a, const DistanceResult& b) {
  const DistanceResult* lo = &a;
  const DistanceResult* hi = &b;
  if (b.floor() < a.floor() || (b.floor() == a.floor() && b.exact() && !a.exact())) {
    std::swap(lo, hi);
  }
  if (lo->infinite()) return *lo;                    // both sides empty
  if (lo->exact() && lo->weight <= hi->floor()) {
    DistanceResult out = *lo;
    out.candidates_examined = a.candidates_examined + b.candidates_examined;
    return out;
  }
  // The lighter side is only bounded: all we know is min > min(floors) - 1.
  DistanceResult out;
  out.kind = DistanceKind::kLowerBoundOnly;
  out.weight = std::min(lo->floor(), hi->floor()) - 1;
  out.candidates_examined = a.candidates_examined + b.candidates_examined;
  return out;
}

using WeightHistogram = std::map<std::size_t, std::size_t>;

inline WeightHistogram row_weight_histogram(const BinaryMatrix& m) {
  WeightHistogram h;
  for (std::size_t r = 0; r < m.rows(); ++r) ++h[m.row_weight(r)];
  return h;
}

inline WeightHistogram col_weight_histogram(const BinaryMatrix& m) {
  WeightHistogram h;
  for (std::size_t c = 0; c < m.cols(); ++c) ++h[m.col_weight(c)];
  return h;
}

struct CodeParams {
  std::size_t n = 0;
  std::size_t k = 0;
  DistanceResult d;    // min over both sides
  DistanceResult d_x;  // min weight in ker(h_x) \ rowspace(h_z)
  DistanceResult d_z;  // min weight in ker(h_z) \ rowspace(h_x)
  WeightHistogram row_weights_x, row_weights_z;
  WeightHistogram col_weights_x, col_weights_z;
};

inline CodeParams full_params(const CssCode& c, const SearchBudget& budget = {},
                              unsigned threads = 1) {
  CodeParams p;
  p.n = c.length();
  p.k = quantum_dimension(c);
  p.d_x = min_weight_coset(c.h_x(), c.h_z(), budget, threads);
  p.d_z = min_weight_coset(c.h_z(), c.h_x(), budget, threads);
  p.d = combine_min(p.d_x, p.d_z);
  p.row_weights_x = row_weight_histogram(c.h_x());
  p.row_weights_z = row_weight_histogram(c.h_z());
  p.col_weights_x = col_weight_histogram(c.h_x());
  p.col_weights_z = col_weight_histogram(c.h_z());
  return p;
}

// Structural distance bounds for a product-built code: the code distance is
// at least the smallest of the four factor cycle-code distances (factors and
// their transposes), and is at most d1 when d1 and d2t are finite, at most d2
// when d2 and d1t are finite.
struct BoundReport {
  DistanceResult d1, d2, d1_t, d2_t;  // factor cycle-code distances

  // A check "holds" when no conclusive violation was found; it is
  // "conclusive" when the involved quantities were known exactly.
  bool lower_conclusive = false;
  bool lower_holds = true;
  bool upper1_applicable = false;  // d1 and d2_t finite
  bool upper1_conclusive = false;
  bool upper1_holds = true;
  bool upper2_applicable = false;  // d2 and d1_t finite
  bool upper2_conclusive = false;
  bool upper2_holds = true;
  std::string note;

  bool conclusive() const { return lower_conclusive && upper1_conclusive && upper2_conclusive; }
  bool all_hold() const { return lower_holds && upper1_holds && upper2_holds; }
};

inline BoundReport check_distance_bounds(const ProductHypergraph& p, const CodeParams& params,
                                         const SearchBudget& budget = {}, unsigned threads = 1) {
  BoundReport report;
  report.d1 = classical_min_distance(p.left().incidence(), budget, threads);
  report.d2 = classical_min_distance(p.right().incidence(), budget, threads);
  report.d1_t = classical_min_distance(transpose(p.left().incidence()), budget, threads);
  report.d2_t = classical_min_distance(transpose(p.right().incidence()), budget, threads);
  if (params.k == 0) {
    report.note = "k = 0: no logical operators; distance is infinite by convention";
  }

  const bool classical_known = !report.d1.bound_only() && !report.d2.bound_only() &&
                               !report.d1_t.bound_only() && !report.d2_t.bound_only();
  const bool d_known = !params.d.bound_only();

  // Lower bound: D >= min of the four.  Each floor() underestimates its true
  // value, so an exact D below the combined floor is a provable violation;
  // confirmation needs the classical values exact and D's own floor to clear.
  std::size_t floor = static_cast<std::size_t>(-1);
  for (const DistanceResult* r : {&report.d1, &report.d2, &report.d1_t, &report.d2_t}) {
    floor = std::min(floor, r->floor());
  }
  report.lower_holds = !(params.d.exact() && params.d.weight < floor);
  report.lower_conclusive =
      classical_known && (d_known || params.d.floor() >= floor);

  // Upper bounds.  Applicability itself needs exact knowledge of finiteness.
  const auto finite = [](const DistanceResult& r) { return r.exact(); };
  const auto upper_check = [&](const DistanceResult& da, const DistanceResult& db, bool& applicable,
                               bool& conclusive, bool& holds) {
    if (da.infinite() || db.infinite()) {
      applicable = false;
      conclusive = true;  // vacuously satisfied
      return;
    }
    if (!finite(da) || !finite(db)) {
      applicable = false;
      conclusive = false;  // cannot even decide applicability
      return;
    }
    applicable = true;
    // D <= da.weight must hold.
    if (params.d.infinite() || params.d.floor() > da.weight) {
      holds = false;
      conclusive = true;
      return;
    }
    conclusive = d_known;
  };
  upper_check(report.d1, report.d2_t, report.upper1_applicable, report.upper1_conclusive,
              report.upper1_holds);
  upper_check(report.d2, report.d1_t, report.upper2_applicable, report.upper2_conclusive,
              report.upper2_holds);
  return report;
}

}  // namespace hgp

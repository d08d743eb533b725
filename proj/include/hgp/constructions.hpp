// Named code builders: toric codes, general two-factor product codes, the
// single-matrix (transpose-pair) construction, and classical input-code
// generators used to feed them.
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hgp/css.hpp"
#include "hgp/gf2.hpp"
#include "hgp/hypergraph.hpp"

namespace hgp {

// ---------------------------------------------------------------------------
// Classical check-matrix generators.
// ---------------------------------------------------------------------------

// (n-1) x n chain of adjacent-pair checks; kernel is the all-ones word.
inline BinaryMatrix repetition_check(std::size_t n) {
  if (n < 2) {
    throw std::invalid_argument("repetition_check: need n >= 2, got " + std::to_string(n));
  }
  BinaryMatrix m(n - 1, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    m.set(i, i, true);
    m.set(i, i + 1, true);
  }
  return m;
}

// r x (2^r - 1) matrix whose column c is the binary expansion of c+1,
// row 0 holding the least significant bit.
inline BinaryMatrix hamming_check(std::size_t r) {
  if (r < 1 || r > 20) {
    throw std::invalid_argument("hamming_check: need 1 <= r <= 20, got " + std::to_string(r));
  }
  const std::size_t cols = (std::size_t{1} << r) - 1;
  BinaryMatrix m(r, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    const std::size_t pattern = c + 1;
    for (std::size_t row = 0; row < r; ++row) {
      if ((pattern >> row) & 1) m.set(row, c, true);
    }
  }
  return m;
}

// m x m incidence of the cycle on vertices Z/mZ: edge j joins j and j+1 mod m.
// m = 2 yields two parallel edges, both kept distinct.
inline BinaryMatrix cycle_graph_incidence(std::size_t m) {
  if (m < 2) {
    throw std::invalid_argument("cycle_graph_incidence: need m >= 2, got " + std::to_string(m));
  }
  BinaryMatrix inc(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    inc.set(j, j, true);
    inc.set((j + 1) % m, j, true);
  }
  return inc;
}

namespace detail {

// Deterministic, platform-independent shuffle (the standard library leaves
// std::shuffle's consumption pattern unspecified across implementations).
inline void seeded_shuffle(std::vector<std::uint32_t>& values, std::mt19937_64& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(values[i - 1], values[j]);
  }
}

}  // namespace detail

// Configuration-model generator for an (n, col_weight, row_weight)-regular
// check matrix with no repeated (row, col) incidence. Deterministic for a
// fixed seed. Throws on infeasible degree sequences; throws after bounded
// resampling if every attempt produced a duplicate incidence.
inline BinaryMatrix random_regular_check(std::size_t n, std::size_t col_weight,
                                         std::size_t row_weight, std::uint64_t seed,
                                         std::size_t max_attempts = 10000) {
  const auto fail = [&](const std::string& why) {
    std::ostringstream os;
    os << "random_regular_check(n=" << n << ", col_weight=" << col_weight
       << ", row_weight=" << row_weight << ", seed=" << seed << "): " << why;
    return std::invalid_argument(os.str());
  };
  if (n == 0 || col_weight == 0 || row_weight == 0) {
    throw fail("all of n, col_weight, row_weight must be positive");
  }
  if ((n * col_weight) % row_weight != 0) {
    throw fail("n * col_weight must be divisible by row_weight");
  }
  // row_weight <= n also guarantees col_weight <= rows = n*col_weight/row_weight.
  const std::size_t rows = n * col_weight / row_weight;
  if (row_weight > n) throw fail("row_weight exceeds the number of columns");

  // Stubs: column c owns slots [c*col_weight, (c+1)*col_weight); row slot s
  // belongs to row s / row_weight. A uniformly shuffled pairing is resampled
  // whenever it repeats an incidence.
  const std::size_t stubs = n * col_weight;
  std::vector<std::uint32_t> slots(stubs);
  std::mt19937_64 rng(seed);
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    for (std::size_t i = 0; i < stubs; ++i) slots[i] = static_cast<std::uint32_t>(i);
    detail::seeded_shuffle(slots, rng);
    BinaryMatrix m(rows, n);
    bool simple = true;
    for (std::size_t i = 0; i < stubs && simple; ++i) {
      const std::size_t row = slots[i] / row_weight;
      const std::size_t col = i / col_weight;
      if (m.get(row, col)) {
        simple = false;
      } else {
        m.set(row, col, true);
      }
    }
    if (simple) return m;
  }
  std::ostringstream os;
  os << "random_regular_check(n=" << n << ", col_weight=" << col_weight
     << ", row_weight=" << row_weight << ", seed=" << seed
     << "): no simple incidence found after " << max_attempts
     << " attempts; try another seed";
  throw std::runtime_error(os.str());
}

// ---------------------------------------------------------------------------
// Classical code specifications.
// ---------------------------------------------------------------------------

struct Repetition {
  std::size_t n = 0;
};
struct Hamming {
  std::size_t r = 0;
};
struct CycleGraph {
  std::size_t m = 0;
};
struct RandomRegular {
  std::size_t n = 0;
  std::size_t col_weight = 0;
  std::size_t row_weight = 0;
  std::uint64_t seed = 0;
};
struct Explicit {
  BinaryMatrix matrix;
};

struct ExpectedParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;
};

struct ClassicalCodeSpec {
  std::variant<Repetition, Hamming, CycleGraph, RandomRegular, Explicit> kind;
  std::optional<ExpectedParams> expected;
};

// Builds the check matrix a spec describes and, when expected parameters are
// declared, recomputes (n, k, d) from scratch and rejects any mismatch.
inline BinaryMatrix build_classical(const ClassicalCodeSpec& spec) {
  BinaryMatrix m = std::visit(
      [](const auto& kind) -> BinaryMatrix {
        using T = std::decay_t<decltype(kind)>;
        if constexpr (std::is_same_v<T, Repetition>) {
          return repetition_check(kind.n);
        } else if constexpr (std::is_same_v<T, Hamming>) {
          return hamming_check(kind.r);
        } else if constexpr (std::is_same_v<T, CycleGraph>) {
          return cycle_graph_incidence(kind.m);
        } else if constexpr (std::is_same_v<T, RandomRegular>) {
          return random_regular_check(kind.n, kind.col_weight, kind.row_weight, kind.seed);
        } else {
          return kind.matrix;
        }
      },
      spec.kind);
  if (spec.expected) {
    const ExpectedParams& want = *spec.expected;
    const std::size_t n = m.cols();
    const std::size_t k = n - rank(m);
    if (n != want.n || k != want.k) {
      std::ostringstream os;
      os << "build_classical: expected [" << want.n << "," << want.k << "," << want.d
         << "] but the generated matrix has n=" << n << ", k=" << k;
      throw std::invalid_argument(os.str());
    }
    const DistanceResult d = classical_min_distance(m);
    if (!d.exact() || d.weight != want.d) {
      std::ostringstream os;
      os << "build_classical: expected distance " << want.d << " but computed "
         << to_string(d);
      throw std::invalid_argument(os.str());
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Product-code builders.
// ---------------------------------------------------------------------------

// A built product code: the product structure (kept for invariant checks and
// duality transport) together with the CSS pair it induces.
struct HgpCode {
  ProductHypergraph product;
  CssCode code;
};

// General two-factor product code. h_x is the vertex-edge incidence of the
// product; h_z is its chamber-edge incidence. Orthogonal by construction.
inline HgpCode hgp(const BinaryMatrix& h1, const BinaryMatrix& h2) {
  ProductHypergraph p = product(Hypergraph(h1), Hypergraph(h2));
  CssCode code(p.product().incidence(), chamber_matrix(p));
  return {std::move(p), std::move(code)};
}

// Single-matrix construction: pair a full-row-rank r x n check matrix with
// its transpose. Yields length n^2 + r^2 and dimension (n - r)^2; both are
// recomputed and asserted before returning.
inline HgpCode hgp_from_single(const BinaryMatrix& h) {
  const std::size_t r = rank(h);
  if (r != h.rows()) {
    std::ostringstream os;
    os << "hgp_from_single: check matrix has rank " << r << " but " << h.rows()
       << " rows; row-reduce to remove redundant checks before pairing with the transpose";
    throw std::invalid_argument(os.str());
  }
  const std::size_t n = h.cols();
  const std::size_t k = n - r;
  HgpCode built = hgp(h, transpose(h));
  if (built.code.length() != n * n + r * r) {
    throw std::logic_error("hgp_from_single: length disagrees with n^2 + (n-k)^2");
  }
  if (dimension_by_formula(built.product) != k * k) {
    throw std::logic_error("hgp_from_single: dimension disagrees with k^2");
  }
  return built;
}

// Torus-tiling code on an m x m grid: the product of two length-m cycle
// graphs. Parameters [[2m^2, 2, m]].
inline HgpCode toric(std::size_t m) {
  if (m < 2) {
    throw std::invalid_argument("toric: need m >= 2, got " + std::to_string(m));
  }
  const BinaryMatrix cycle = cycle_graph_incidence(m);
  return hgp(cycle, cycle);
}

}  // namespace hgp

#pragma once

// Reference implementations used only by tests.  Everything here works on
// plain integer matrices with naive algorithms (schoolbook elimination,
// exhaustive enumeration) so results can cross-check the library's bit-packed
// and sparse code paths without sharing any machinery with them.

#include <cstdint>
#include <random>
#include <unordered_set>
#include <vector>

#include "hgp/gf2.hpp"

namespace oracle {

using IntMatrix = std::vector<std::vector<int>>;

inline IntMatrix to_int_matrix(const hgp::BinaryMatrix& m) {
  IntMatrix out(m.rows(), std::vector<int>(m.cols(), 0));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.get(r, c) ? 1 : 0;
  }
  return out;
}

inline std::size_t naive_rank(IntMatrix m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r != rank && m[r][c] == 1) {
        for (std::size_t j = 0; j < cols; ++j) m[r][j] ^= m[rank][j];
      }
    }
    ++rank;
  }
  return rank;
}

inline std::size_t naive_rank(const hgp::BinaryMatrix& m) { return naive_rank(to_int_matrix(m)); }

// All kernel elements of an n-column matrix, found by trying every vector in
// {0,1}^n.  Requires n <= 20.
inline std::vector<std::vector<int>> naive_kernel_elements(const IntMatrix& m, std::size_t cols) {
  std::vector<std::vector<int>> kernel;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cols); ++mask) {
    std::vector<int> v(cols);
    for (std::size_t i = 0; i < cols; ++i) v[i] = (mask >> i) & 1;
    bool in_kernel = true;
    for (const auto& row : m) {
      int dot = 0;
      for (std::size_t i = 0; i < cols; ++i) dot ^= row[i] & v[i];
      if (dot) {
        in_kernel = false;
        break;
      }
    }
    if (in_kernel) kernel.push_back(std::move(v));
  }
  return kernel;
}

// All vectors of the row space of m, found by trying every row combination.
// Requires m.size() <= 20.
inline std::unordered_set<std::uint64_t> naive_row_space_masks(const IntMatrix& m,
                                                               std::size_t cols) {
  std::unordered_set<std::uint64_t> space;
  const std::size_t rows = m.size();
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << rows); ++pick) {
    std::uint64_t acc = 0;
    for (std::size_t r = 0; r < rows; ++r) {
      if ((pick >> r) & 1) {
        for (std::size_t c = 0; c < cols; ++c) {
          if (m[r][c]) acc ^= std::uint64_t{1} << c;
        }
      }
    }
    space.insert(acc);
  }
  return space;
}

inline std::uint64_t vector_mask(const hgp::BinaryVector& v) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v.get(i)) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

inline hgp::BinaryVector vector_from_mask(std::uint64_t mask, std::size_t len) {
  hgp::BinaryVector v(len);
  for (std::size_t i = 0; i < len; ++i) {
    if ((mask >> i) & 1) v.set(i, true);
  }
  return v;
}

inline IntMatrix naive_mat_mul(const IntMatrix& a, const IntMatrix& b, std::size_t inner,
                               std::size_t cols_b) {
  IntMatrix out(a.size(), std::vector<int>(cols_b, 0));
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t c = 0; c < cols_b; ++c) {
      int acc = 0;
      for (std::size_t k = 0; k < inner; ++k) acc ^= a[r][k] & b[k][c];
      out[r][c] = acc;
    }
  }
  return out;
}

// Exhaustive minimum weight over {v != 0 : checks v = 0 and v not in the row
// space of excluded}.  Returns {found, weight, witness mask}.  Requires
// checks.cols() <= 20 and excluded.rows() <= 20.
struct ExhaustiveCosetResult {
  bool found = false;
  std::size_t weight = 0;
  std::uint64_t witness = 0;
};

inline ExhaustiveCosetResult exhaustive_min_weight_coset(const hgp::BinaryMatrix& checks,
                                                         const hgp::BinaryMatrix& excluded) {
  const std::size_t n = checks.cols();
  const IntMatrix ch = to_int_matrix(checks);
  const auto excluded_masks = naive_row_space_masks(to_int_matrix(excluded), n);

  std::vector<std::uint64_t> check_masks;
  for (std::size_t r = 0; r < checks.rows(); ++r) {
    std::uint64_t mask = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (ch[r][c]) mask |= std::uint64_t{1} << c;
    }
    check_masks.push_back(mask);
  }

  ExhaustiveCosetResult best;
  for (std::uint64_t v = 1; v < (std::uint64_t{1} << n); ++v) {
    bool in_kernel = true;
    for (std::uint64_t row : check_masks) {
      if (std::popcount(row & v) & 1) {
        in_kernel = false;
        break;
      }
    }
    if (!in_kernel || excluded_masks.count(v)) continue;
    const auto w = static_cast<std::size_t>(std::popcount(v));
    if (!best.found || w < best.weight) {
      best = {true, w, v};
    }
  }
  return best;
}

inline hgp::BinaryMatrix random_matrix(std::size_t rows, std::size_t cols, double density,
                                       std::mt19937_64& rng) {
  hgp::BinaryMatrix m(rows, cols);
  const auto threshold =
      static_cast<std::uint64_t>(density * 18446744073709551615.0);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (rng() <= threshold) m.set(r, c, true);
    }
  }
  return m;
}

}  // namespace oracle

#pragma once

// Linear algebra over GF(2).
//
// BinaryVector / BinaryMatrix store bits packed into 64-bit words (bit i of a
// row lives in word i/64, position i%64; unused tail bits of the last word are
// kept zero).  SparseBinaryMatrix is an alternative representation that keeps
// sorted per-row column-index lists; both backends implement rank, kernel and
// product and must agree entrywise on the same matrix.
//
// Gaussian elimination always picks the first nonzero column and, within a
// column, the lowest remaining row index, so reduced forms (and everything
// derived from them: ranks, kernel bases, membership tests) are reproducible
// bit for bit across runs and platforms.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hgp {

inline constexpr std::size_t kWordBits = 64;

inline std::size_t words_for_bits(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

class BinaryVector {
 public:
  BinaryVector() = default;

  explicit BinaryVector(std::size_t len) : len_(len), words_(words_for_bits(len), 0) {}

  // Parses a string of '0'/'1' characters, most significant position first,
  // e.g. from_bits("101") has bits set at positions 0 and 2.
  static BinaryVector from_bits(std::string_view bits) {
    BinaryVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] == '1') {
        v.set(i, true);
      } else if (bits[i] != '0') {
        throw std::invalid_argument("BinaryVector::from_bits: character is not '0' or '1'");
      }
    }
    return v;
  }

  std::size_t size() const { return len_; }

  bool get(std::size_t i) const {
    check_index(i);
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
  }

  void set(std::size_t i, bool value) {
    check_index(i);
    const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }

  std::size_t weight() const {
    std::size_t w = 0;
    for (std::uint64_t word : words_) w += static_cast<std::size_t>(std::popcount(word));
    return w;
  }

  bool is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

  BinaryVector& operator^=(const BinaryVector& other) {
    if (other.len_ != len_) {
      throw std::invalid_argument("BinaryVector::operator^=: length mismatch");
    }
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
  }

  friend BinaryVector operator^(BinaryVector a, const BinaryVector& b) {
    a ^= b;
    return a;
  }

  bool operator==(const BinaryVector&) const = default;

  std::string to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i) {
      if (get(i)) s[i] = '1';
    }
    return s;
  }

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

 private:
  void check_index(std::size_t i) const {
    if (i >= len_) throw std::out_of_range("BinaryVector: index out of range");
  }

  std::size_t len_ = 0;
  std::vector<std::uint64_t> words_;
};

class BinaryMatrix {
 public:
  BinaryMatrix() = default;

  BinaryMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), row_words_(words_for_bits(cols)), data_(rows * row_words_, 0) {}

  static BinaryMatrix identity(std::size_t n) {
    BinaryMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  // Each string is one row of '0'/'1' characters; all rows must have the same
  // length.  Intended for small literals in tests and builders.
  static BinaryMatrix from_rows(std::initializer_list<std::string_view> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    BinaryMatrix m(r, c);
    std::size_t i = 0;
    for (std::string_view row : rows) {
      if (row.size() != c) {
        throw std::invalid_argument("BinaryMatrix::from_rows: ragged rows");
      }
      for (std::size_t j = 0; j < c; ++j) {
        if (row[j] == '1') {
          m.set(i, j, true);
        } else if (row[j] != '0') {
          throw std::invalid_argument("BinaryMatrix::from_rows: character is not '0' or '1'");
        }
      }
      ++i;
    }
    return m;
  }

  static BinaryMatrix from_rows(const std::vector<BinaryVector>& rows, std::size_t cols) {
    BinaryMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) {
        throw std::invalid_argument("BinaryMatrix::from_rows: row length mismatch");
      }
      std::copy(rows[i].words().begin(), rows[i].words().end(), m.row_words(i).begin());
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    check_index(r, c);
    return (data_[r * row_words_ + c / kWordBits] >> (c % kWordBits)) & 1u;
  }

  void set(std::size_t r, std::size_t c, bool value) {
    check_index(r, c);
    const std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
    std::uint64_t& word = data_[r * row_words_ + c / kWordBits];
    if (value) {
      word |= mask;
    } else {
      word &= ~mask;
    }
  }

  BinaryVector row(std::size_t r) const {
    if (r >= rows_) throw std::out_of_range("BinaryMatrix::row: index out of range");
    BinaryVector v(cols_);
    std::copy(row_words(r).begin(), row_words(r).end(), v.words().begin());
    return v;
  }

  std::span<const std::uint64_t> row_words(std::size_t r) const {
    return {data_.data() + r * row_words_, row_words_};
  }

  std::span<std::uint64_t> row_words(std::size_t r) {
    return {data_.data() + r * row_words_, row_words_};
  }

  void xor_row_into(std::size_t src, std::size_t dst) {
    const std::uint64_t* s = data_.data() + src * row_words_;
    std::uint64_t* d = data_.data() + dst * row_words_;
    for (std::size_t i = 0; i < row_words_; ++i) d[i] ^= s[i];
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(data_.begin() + a * row_words_, data_.begin() + (a + 1) * row_words_,
                     data_.begin() + b * row_words_);
  }

  std::size_t row_weight(std::size_t r) const {
    std::size_t w = 0;
    for (std::uint64_t word : row_words(r)) w += static_cast<std::size_t>(std::popcount(word));
    return w;
  }

  std::size_t col_weight(std::size_t c) const {
    std::size_t w = 0;
    for (std::size_t r = 0; r < rows_; ++r) w += get(r, c);
    return w;
  }

  std::size_t count_ones() const {
    std::size_t w = 0;
    for (std::uint64_t word : data_) w += static_cast<std::size_t>(std::popcount(word));
    return w;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](std::uint64_t w) { return w == 0; });
  }

  bool operator==(const BinaryMatrix&) const = default;

 private:
  void check_index(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) {
      throw std::out_of_range("BinaryMatrix: index out of range");
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t row_words_ = 0;
  std::vector<std::uint64_t> data_;
};

inline BinaryMatrix transpose(const BinaryMatrix& m) {
  BinaryMatrix t(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.get(r, c)) t.set(c, r, true);
    }
  }
  return t;
}

// Product over GF(2); requires a.cols() == b.rows().  Row r of the result is
// the XOR of the rows of b selected by the set bits of row r of a.
inline BinaryMatrix mat_mul(const BinaryMatrix& a, const BinaryMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("mat_mul: inner dimensions disagree");
  }
  BinaryMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    auto arow = a.row_words(r);
    auto orow = out.row_words(r);
    for (std::size_t w = 0; w < arow.size(); ++w) {
      std::uint64_t word = arow[w];
      while (word != 0) {
        const std::size_t k = w * kWordBits + static_cast<std::size_t>(std::countr_zero(word));
        word &= word - 1;
        auto brow = b.row_words(k);
        for (std::size_t i = 0; i < orow.size(); ++i) orow[i] ^= brow[i];
      }
    }
  }
  return out;
}

inline BinaryVector mat_vec(const BinaryMatrix& m, const BinaryVector& v) {
  if (v.size() != m.cols()) {
    throw std::invalid_argument("mat_vec: dimension mismatch");
  }
  BinaryVector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row_words(r);
    auto vw = v.words();
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < row.size(); ++i) acc ^= row[i] & vw[i];
    if (std::popcount(acc) & 1) out.set(r, true);
  }
  return out;
}

// Reduced row-echelon form of a matrix, kept as the list of nonzero reduced
// rows together with their pivot columns (strictly increasing).  Because the
// reduced form of a row space is unique, any two computations of this object
// over the same matrix agree exactly.
class RowEchelon {
 public:
  explicit RowEchelon(const BinaryMatrix& m) : cols_(m.cols()) {
    std::vector<BinaryVector> work;
    work.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) work.push_back(m.row(r));
    std::size_t pr = 0;
    for (std::size_t c = 0; c < m.cols() && pr < work.size(); ++c) {
      std::size_t pivot = pr;
      while (pivot < work.size() && !work[pivot].get(c)) ++pivot;
      if (pivot == work.size()) continue;
      std::swap(work[pr], work[pivot]);
      for (std::size_t r = 0; r < work.size(); ++r) {
        if (r != pr && work[r].get(c)) work[r] ^= work[pr];
      }
      pivots_.push_back(c);
      ++pr;
    }
    rows_.assign(work.begin(), work.begin() + static_cast<std::ptrdiff_t>(pr));
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const std::vector<std::size_t>& pivot_cols() const { return pivots_; }
  const std::vector<BinaryVector>& rows() const { return rows_; }

  // Residue of v after eliminating all pivot positions; zero iff v lies in the
  // row space.
  BinaryVector reduce(BinaryVector v) const {
    if (v.size() != cols_) {
      throw std::invalid_argument("RowEchelon::reduce: dimension mismatch");
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (v.get(pivots_[i])) v ^= rows_[i];
    }
    return v;
  }

  bool contains(const BinaryVector& v) const { return reduce(v).is_zero(); }

 private:
  std::size_t cols_;
  std::vector<BinaryVector> rows_;
  std::vector<std::size_t> pivots_;
};

inline std::size_t rank(const BinaryMatrix& m) { return RowEchelon(m).rank(); }

// Basis of {v : m v = 0}, one vector per non-pivot column in ascending column
// order.  Each basis vector is 1 at its free column and carries the matching
// reduced-row entries at the pivot columns, so the basis is in systematic form
// over the free columns.
inline std::vector<BinaryVector> kernel_basis(const BinaryMatrix& m) {
  const RowEchelon re(m);
  std::vector<BinaryVector> basis;
  basis.reserve(m.cols() - re.rank());
  const auto& pivots = re.pivot_cols();
  std::size_t next_pivot = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (next_pivot < pivots.size() && pivots[next_pivot] == c) {
      ++next_pivot;
      continue;
    }
    BinaryVector v(m.cols());
    v.set(c, true);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (re.rows()[i].get(c)) v.set(pivots[i], true);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// True iff v is a GF(2) combination of the rows of m; equivalent to
// rank(m) == rank(m with v appended as an extra row).
inline bool in_row_space(const BinaryMatrix& m, const BinaryVector& v) {
  if (v.size() != m.cols()) {
    throw std::invalid_argument("in_row_space: dimension mismatch");
  }
  return RowEchelon(m).contains(v);
}

// ---------------------------------------------------------------------------
// Sparse backend: sorted column-index list per row.

class SparseBinaryMatrix {
 public:
  SparseBinaryMatrix() = default;

  SparseBinaryMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), row_cols_(rows) {}

  static SparseBinaryMatrix from_dense(const BinaryMatrix& m) {
    SparseBinaryMatrix s(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (m.get(r, c)) s.row_cols_[r].push_back(static_cast<std::uint32_t>(c));
      }
    }
    return s;
  }

  BinaryMatrix to_dense() const {
    BinaryMatrix m(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::uint32_t c : row_cols_[r]) m.set(r, c, true);
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    check_index(r, c);
    return std::binary_search(row_cols_[r].begin(), row_cols_[r].end(),
                              static_cast<std::uint32_t>(c));
  }

  void set(std::size_t r, std::size_t c, bool value) {
    check_index(r, c);
    auto& row = row_cols_[r];
    auto it = std::lower_bound(row.begin(), row.end(), static_cast<std::uint32_t>(c));
    const bool present = it != row.end() && *it == c;
    if (value && !present) {
      row.insert(it, static_cast<std::uint32_t>(c));
    } else if (!value && present) {
      row.erase(it);
    }
  }

  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& row : row_cols_) n += row.size();
    return n;
  }

  const std::vector<std::uint32_t>& row_support(std::size_t r) const {
    if (r >= rows_) throw std::out_of_range("SparseBinaryMatrix: row out of range");
    return row_cols_[r];
  }

  void assign_row(std::size_t r, std::vector<std::uint32_t> sorted_cols) {
    if (r >= rows_) throw std::out_of_range("SparseBinaryMatrix: row out of range");
    row_cols_[r] = std::move(sorted_cols);
  }

  bool operator==(const SparseBinaryMatrix&) const = default;

 private:
  void check_index(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) {
      throw std::out_of_range("SparseBinaryMatrix: index out of range");
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<std::uint32_t>> row_cols_;
};

// Heuristic for picking a representation when building large matrices: index
// lists win only once the matrix is both wide and genuinely sparse.
inline bool should_use_sparse(std::size_t rows, std::size_t cols, std::size_t nnz) {
  return cols > 4096 && nnz * 20 < rows * cols;
}

inline SparseBinaryMatrix transpose(const SparseBinaryMatrix& m) {
  SparseBinaryMatrix t(m.cols(), m.rows());
  std::vector<std::vector<std::uint32_t>> cols_of(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::uint32_t c : m.row_support(r)) cols_of[c].push_back(static_cast<std::uint32_t>(r));
  }
  for (std::size_t c = 0; c < m.cols(); ++c) t.assign_row(c, std::move(cols_of[c]));
  return t;
}

namespace detail {

inline std::vector<std::uint32_t> symmetric_difference(const std::vector<std::uint32_t>& a,
                                                       const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Reduced row-echelon elimination on index-list rows.  Returns the reduced
// nonzero rows and their pivot columns, matching the dense RowEchelon result.
struct SparseEchelon {
  std::vector<std::vector<std::uint32_t>> rows;
  std::vector<std::size_t> pivots;
};

inline SparseEchelon sparse_echelon(const SparseBinaryMatrix& m) {
  std::vector<std::vector<std::uint32_t>> work;
  work.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) work.push_back(m.row_support(r));
  SparseEchelon result;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < m.cols() && pr < work.size(); ++c) {
    // After columns < c are eliminated, a remaining row contains c iff its
    // leading (minimum) index is c.
    std::size_t pivot = pr;
    while (pivot < work.size() && (work[pivot].empty() || work[pivot].front() != c)) ++pivot;
    if (pivot == work.size()) continue;
    std::swap(work[pr], work[pivot]);
    for (std::size_t r = 0; r < work.size(); ++r) {
      if (r == pr) continue;
      if (std::binary_search(work[r].begin(), work[r].end(), static_cast<std::uint32_t>(c))) {
        work[r] = symmetric_difference(work[r], work[pr]);
      }
    }
    result.pivots.push_back(c);
    ++pr;
  }
  result.rows.assign(work.begin(), work.begin() + static_cast<std::ptrdiff_t>(pr));
  return result;
}

}  // namespace detail

inline std::size_t rank(const SparseBinaryMatrix& m) {
  return detail::sparse_echelon(m).pivots.size();
}

inline std::vector<BinaryVector> kernel_basis(const SparseBinaryMatrix& m) {
  const auto ech = detail::sparse_echelon(m);
  std::vector<BinaryVector> basis;
  basis.reserve(m.cols() - ech.pivots.size());
  std::size_t next_pivot = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (next_pivot < ech.pivots.size() && ech.pivots[next_pivot] == c) {
      ++next_pivot;
      continue;
    }
    BinaryVector v(m.cols());
    v.set(c, true);
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
      if (std::binary_search(ech.rows[i].begin(), ech.rows[i].end(),
                             static_cast<std::uint32_t>(c))) {
        v.set(ech.pivots[i], true);
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

inline SparseBinaryMatrix mat_mul(const SparseBinaryMatrix& a, const SparseBinaryMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("mat_mul: inner dimensions disagree");
  }
  SparseBinaryMatrix out(a.rows(), b.cols());
  std::vector<std::uint8_t> parity(b.cols(), 0);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::uint32_t k : a.row_support(r)) {
      for (std::uint32_t c : b.row_support(k)) parity[c] ^= 1;
    }
    std::vector<std::uint32_t> row;
    for (std::size_t c = 0; c < b.cols(); ++c) {
      if (parity[c]) {
        row.push_back(static_cast<std::uint32_t>(c));
        parity[c] = 0;
      }
    }
    out.assign_row(r, std::move(row));
  }
  return out;
}

}  // namespace hgp

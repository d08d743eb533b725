// Reader/writer for the alist sparse parity-check interchange format.
//
// Layout: line 1 "cols rows", line 2 "max_col_weight max_row_weight", then a
// per-column weight list and a per-row weight list, then one line of 1-based
// row indices per column and one line of 1-based column indices per row.
// Emission is unpadded; parsing additionally accepts files padded with
// trailing zeros up to the declared maxima.
#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hgp/gf2.hpp"

namespace hgp {

// Parse failure; `line` is 1-based into the input text.
class AlistParseError : public std::runtime_error {
 public:
  AlistParseError(std::size_t line, const std::string& what)
      : std::runtime_error("alist line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

class AlistReader {
 public:
  explicit AlistReader(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines_.push_back(std::move(line));
  }

  // Tokenizes the next line into nonnegative integers.
  std::vector<std::size_t> next_line() {
    if (cursor_ >= lines_.size()) {
      throw AlistParseError(lines_.size() + 1, "unexpected end of input");
    }
    const std::string& raw = lines_[cursor_++];
    std::istringstream in(raw);
    std::vector<std::size_t> values;
    std::string token;
    while (in >> token) {
      std::size_t parsed = 0;
      try {
        std::size_t consumed = 0;
        parsed = std::stoull(token, &consumed);
        if (consumed != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw AlistParseError(cursor_, "expected a nonnegative integer, found \"" + token + "\"");
      }
      values.push_back(parsed);
    }
    return values;
  }

  std::size_t line_number() const { return cursor_; }

  void expect_only_trailing_blanks() {
    for (std::size_t i = cursor_; i < lines_.size(); ++i) {
      if (lines_[i].find_first_not_of(" \t\r") != std::string::npos) {
        throw AlistParseError(i + 1, "unexpected content after the final index list");
      }
    }
  }

 private:
  std::vector<std::string> lines_;
  std::size_t cursor_ = 0;
};

// Reads one index line: `weight` 1-based entries bounded by `limit`, with
// optional all-zero padding after them. Returns 0-based indices.
inline std::vector<std::size_t> read_index_line(AlistReader& reader, std::size_t weight,
                                                std::size_t limit, const std::string& axis) {
  const std::vector<std::size_t> values = reader.next_line();
  const std::size_t line = reader.line_number();
  if (values.size() < weight) {
    throw AlistParseError(line, "expected " + std::to_string(weight) + " " + axis +
                                    " indices, found " + std::to_string(values.size()));
  }
  std::vector<std::size_t> indices;
  indices.reserve(weight);
  for (std::size_t i = 0; i < weight; ++i) {
    if (values[i] == 0) {
      throw AlistParseError(line, "index 0 within the first " + std::to_string(weight) +
                                      " entries (indices are 1-based)");
    }
    if (values[i] > limit) {
      throw AlistParseError(line, axis + " index " + std::to_string(values[i]) +
                                      " out of range [1, " + std::to_string(limit) + "]");
    }
    indices.push_back(values[i] - 1);
  }
  for (std::size_t i = weight; i < values.size(); ++i) {
    if (values[i] != 0) {
      throw AlistParseError(line, "found " + std::to_string(values[i]) +
                                      " after the declared " + std::to_string(weight) +
                                      " entries (only zero padding is allowed)");
    }
  }
  for (std::size_t i = 0; i + 1 < indices.size(); ++i) {
    for (std::size_t j = i + 1; j < indices.size(); ++j) {
      if (indices[i] == indices[j]) {
        throw AlistParseError(line, "duplicate index " + std::to_string(indices[i] + 1));
      }
    }
  }
  return indices;
}

}  // namespace detail

inline BinaryMatrix parse_alist(const std::string& text) {
  detail::AlistReader reader(text);

  const std::vector<std::size_t> shape = reader.next_line();
  if (shape.size() != 2) {
    throw AlistParseError(reader.line_number(), "expected \"cols rows\"");
  }
  const std::size_t cols = shape[0];
  const std::size_t rows = shape[1];

  const std::vector<std::size_t> maxima = reader.next_line();
  if (maxima.size() != 2) {
    throw AlistParseError(reader.line_number(), "expected \"max_col_weight max_row_weight\"");
  }
  const std::size_t max_col_wt = maxima[0];
  const std::size_t max_row_wt = maxima[1];

  const auto read_weights = [&](std::size_t count, std::size_t maximum,
                                const std::string& axis) {
    const std::vector<std::size_t> weights = reader.next_line();
    if (weights.size() != count) {
      throw AlistParseError(reader.line_number(), "expected " + std::to_string(count) + " " +
                                                      axis + " weights, found " +
                                                      std::to_string(weights.size()));
    }
    for (std::size_t w : weights) {
      if (w > maximum) {
        throw AlistParseError(reader.line_number(),
                              axis + " weight " + std::to_string(w) + " exceeds declared maximum " +
                                  std::to_string(maximum));
      }
    }
    return weights;
  };
  const std::vector<std::size_t> col_weights = read_weights(cols, max_col_wt, "column");
  const std::vector<std::size_t> row_weights = read_weights(rows, max_row_wt, "row");

  BinaryMatrix m(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t r : detail::read_index_line(reader, col_weights[c], rows, "row")) {
      m.set(r, c, true);
    }
  }
  for (std::size_t r = 0; r < rows; ++r) {
    const std::vector<std::size_t> entries =
        detail::read_index_line(reader, row_weights[r], cols, "column");
    const std::size_t line = reader.line_number();
    BinaryVector from_row_list(cols);
    for (std::size_t c : entries) from_row_list.set(c, true);
    if (!(from_row_list == m.row(r))) {
      throw AlistParseError(line, "row " + std::to_string(r + 1) +
                                      " disagrees with the column index lists");
    }
  }
  reader.expect_only_trailing_blanks();
  return m;
}

inline std::string emit_alist(const BinaryMatrix& m) {
  std::size_t max_col_wt = 0;
  std::size_t max_row_wt = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) max_col_wt = std::max(max_col_wt, m.col_weight(c));
  for (std::size_t r = 0; r < m.rows(); ++r) max_row_wt = std::max(max_row_wt, m.row_weight(r));

  std::ostringstream out;
  out << m.cols() << ' ' << m.rows() << '\n';
  out << max_col_wt << ' ' << max_row_wt << '\n';
  const auto write_list = [&out](const std::vector<std::size_t>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i > 0) out << ' ';
      out << values[i];
    }
    out << '\n';
  };
  std::vector<std::size_t> weights(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) weights[c] = m.col_weight(c);
  write_list(weights);
  weights.assign(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) weights[r] = m.row_weight(r);
  write_list(weights);

  std::vector<std::size_t> indices;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    indices.clear();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (m.get(r, c)) indices.push_back(r + 1);
    }
    write_list(indices);
  }
  for (std::size_t r = 0; r < m.rows(); ++r) {
    indices.clear();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.get(r, c)) indices.push_back(c + 1);
    }
    write_list(indices);
  }
  return out.str();
}

}  // namespace hgp

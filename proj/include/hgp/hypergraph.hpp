#pragma once

// Hypergraphs as vertex-edge incidence matrices, their products, chambers, and
// the duality between a product and the product of the transposed factors.
//
// A hypergraph is its |V| x |E| incidence matrix: rows are vertices, columns
// are edges, and an edge is the set of vertices incident to it.  Identical
// columns are distinct parallel edges and are never merged.
//
// Index conventions for the product of H1 (V1, E1) and H2 (V2, E2), normative
// for every serialized matrix:
//   vertices  (x, y) in V1 x V2           ->  x * |V2| + y
//   E_L edges (a, beta) in V1 x E2        ->  a * |E2| + beta
//   E_R edges (b, alpha) in V2 x E1       ->  |V1|*|E2| + b * |E1| + alpha
// so the E_L block precedes the E_R block and each block is row-major.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hgp/gf2.hpp"

namespace hgp {

class Hypergraph {
 public:
  Hypergraph() = default;

  explicit Hypergraph(BinaryMatrix incidence) : incidence_(std::move(incidence)) {}

  std::size_t vertex_count() const { return incidence_.rows(); }
  std::size_t edge_count() const { return incidence_.cols(); }
  const BinaryMatrix& incidence() const { return incidence_; }

  // Number of vertices in edge e (column weight).
  std::size_t edge_size(std::size_t e) const { return incidence_.col_weight(e); }

  // Number of edges through vertex v (row weight).
  std::size_t vertex_degree(std::size_t v) const { return incidence_.row_weight(v); }

  bool operator==(const Hypergraph&) const = default;

 private:
  BinaryMatrix incidence_;
};

inline Hypergraph from_incidence(BinaryMatrix incidence) {
  return Hypergraph(std::move(incidence));
}

// Swaps the roles of vertices and edges.
inline Hypergraph transpose_hg(const Hypergraph& h) {
  return Hypergraph(transpose(h.incidence()));
}

// Dimension of the cycle code { x : H x = 0 } = |E| - rank(H).
inline std::size_t cycle_code_dim(const Hypergraph& h) {
  return h.edge_count() - rank(h.incidence());
}

// Structural oddities worth flagging before building codes.  Both cases are
// legal inputs everywhere in this library; they are only reported.
struct HypergraphIssues {
  std::vector<std::size_t> isolated_vertices;  // rows of weight 0
  std::vector<std::size_t> empty_edges;        // columns of weight 0

  bool clean() const { return isolated_vertices.empty() && empty_edges.empty(); }
};

inline HypergraphIssues validate(const Hypergraph& h) {
  HypergraphIssues issues;
  for (std::size_t v = 0; v < h.vertex_count(); ++v) {
    if (h.vertex_degree(v) == 0) issues.isolated_vertices.push_back(v);
  }
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    if (h.edge_size(e) == 0) issues.empty_edges.push_back(e);
  }
  return issues;
}

// Product of two hypergraphs.  Vertices are V1 x V2.  Edges come in two
// blocks: an E_L edge (a, beta) joins {(a, y) : y in beta}; an E_R edge
// (b, alpha) joins {(x, b) : x in alpha}.
class ProductHypergraph {
 public:
  ProductHypergraph(Hypergraph left, Hypergraph right)
      : left_(std::move(left)), right_(std::move(right)) {
    const std::size_t v1 = left_.vertex_count();
    const std::size_t e1 = left_.edge_count();
    const std::size_t v2 = right_.vertex_count();
    const std::size_t e2 = right_.edge_count();
    BinaryMatrix incidence(v1 * v2, v1 * e2 + v2 * e1);
    for (std::size_t a = 0; a < v1; ++a) {
      for (std::size_t beta = 0; beta < e2; ++beta) {
        const std::size_t col = a * e2 + beta;
        for (std::size_t y = 0; y < v2; ++y) {
          if (right_.incidence().get(y, beta)) incidence.set(a * v2 + y, col, true);
        }
      }
    }
    const std::size_t offset = v1 * e2;
    for (std::size_t b = 0; b < v2; ++b) {
      for (std::size_t alpha = 0; alpha < e1; ++alpha) {
        const std::size_t col = offset + b * e1 + alpha;
        for (std::size_t x = 0; x < v1; ++x) {
          if (left_.incidence().get(x, alpha)) incidence.set(x * v2 + b, col, true);
        }
      }
    }
    product_ = Hypergraph(std::move(incidence));
  }

  const Hypergraph& left() const { return left_; }
  const Hypergraph& right() const { return right_; }

  // The product itself, as an ordinary hypergraph over the indexing above.
  const Hypergraph& product() const { return product_; }

  std::size_t vertex_count() const { return product_.vertex_count(); }
  std::size_t edge_count() const { return product_.edge_count(); }

  // Size of the E_L block; E_R edges start at this offset.
  std::size_t left_block_size() const { return left_.vertex_count() * right_.edge_count(); }

  std::size_t vertex_index(std::size_t x, std::size_t y) const {
    return x * right_.vertex_count() + y;
  }

  std::size_t left_edge_index(std::size_t a, std::size_t beta) const {
    return a * right_.edge_count() + beta;
  }

  std::size_t right_edge_index(std::size_t b, std::size_t alpha) const {
    return left_block_size() + b * left_.edge_count() + alpha;
  }

 private:
  Hypergraph left_;
  Hypergraph right_;
  Hypergraph product_;
};

inline ProductHypergraph product(const Hypergraph& h1, const Hypergraph& h2) {
  return ProductHypergraph(h1, h2);
}

// Chamber of a product at (alpha, beta) in E1 x E2: the edge set
// {(x, beta) : x in alpha} in E_L plus {(y, alpha) : y in beta} in E_R, of
// size |alpha| + |beta|.
struct Chamber {
  std::size_t alpha = 0;
  std::size_t beta = 0;
  BinaryVector support;  // over the product's edge indexing
};

inline BinaryVector chamber_support(const ProductHypergraph& p, std::size_t alpha,
                                    std::size_t beta) {
  if (alpha >= p.left().edge_count() || beta >= p.right().edge_count()) {
    throw std::out_of_range("chamber_support: edge index out of range");
  }
  BinaryVector support(p.edge_count());
  for (std::size_t x = 0; x < p.left().vertex_count(); ++x) {
    if (p.left().incidence().get(x, alpha)) support.set(p.left_edge_index(x, beta), true);
  }
  for (std::size_t y = 0; y < p.right().vertex_count(); ++y) {
    if (p.right().incidence().get(y, beta)) support.set(p.right_edge_index(y, alpha), true);
  }
  return support;
}

// Streams chambers in row-major (alpha, beta) order without materializing the
// full list; the callback receives each Chamber by const reference.
template <typename F>
void for_each_chamber(const ProductHypergraph& p, F&& f) {
  Chamber chamber;
  for (std::size_t alpha = 0; alpha < p.left().edge_count(); ++alpha) {
    for (std::size_t beta = 0; beta < p.right().edge_count(); ++beta) {
      chamber.alpha = alpha;
      chamber.beta = beta;
      chamber.support = chamber_support(p, alpha, beta);
      f(static_cast<const Chamber&>(chamber));
    }
  }
}

inline std::vector<Chamber> chambers(const ProductHypergraph& p) {
  std::vector<Chamber> out;
  out.reserve(p.left().edge_count() * p.right().edge_count());
  for_each_chamber(p, [&](const Chamber& c) { out.push_back(c); });
  return out;
}

// Chamber-edge incidence of the product: row alpha * |E2| + beta is the
// support of the chamber at (alpha, beta).
inline BinaryMatrix chamber_matrix(const ProductHypergraph& p) {
  BinaryMatrix m(p.left().edge_count() * p.right().edge_count(), p.edge_count());
  std::size_t r = 0;
  for_each_chamber(p, [&](const Chamber& c) {
    std::copy(c.support.words().begin(), c.support.words().end(), m.row_words(r).begin());
    ++r;
  });
  return m;
}

// The product of the transposed factors, together with the canonical
// identification of its edge set with the primal edge set:
//   dual E_L edge (alpha, b) in E1 x V2  <->  primal E_R edge (b, alpha)
//   dual E_R edge (beta, a) in E2 x V1   <->  primal E_L edge (a, beta)
// Under this identification the chambers of one product are exactly the
// vertex stars (elementary cocycles) of the other.
struct PoincareDual {
  ProductHypergraph dual;
  std::vector<std::size_t> dual_to_primal;  // dual edge index -> primal edge index
  std::vector<std::size_t> primal_to_dual;  // inverse permutation
};

inline PoincareDual poincare_dual(const ProductHypergraph& p) {
  const std::size_t v1 = p.left().vertex_count();
  const std::size_t e1 = p.left().edge_count();
  const std::size_t v2 = p.right().vertex_count();
  const std::size_t e2 = p.right().edge_count();

  PoincareDual out{
      ProductHypergraph(transpose_hg(p.left()), transpose_hg(p.right())),
      std::vector<std::size_t>(p.edge_count()),
      std::vector<std::size_t>(p.edge_count()),
  };

  // Dual E_L block: (alpha, b) with alpha in E1 (a dual vertex), b in V2 (a
  // dual edge), laid out row-major exactly like any product's E_L block.
  for (std::size_t alpha = 0; alpha < e1; ++alpha) {
    for (std::size_t b = 0; b < v2; ++b) {
      out.dual_to_primal[alpha * v2 + b] = v1 * e2 + b * e1 + alpha;
    }
  }
  // Dual E_R block: (beta, a) with beta in E2, a in V1.
  const std::size_t dual_offset = e1 * v2;
  for (std::size_t beta = 0; beta < e2; ++beta) {
    for (std::size_t a = 0; a < v1; ++a) {
      out.dual_to_primal[dual_offset + beta * v1 + a] = a * e2 + beta;
    }
  }
  for (std::size_t i = 0; i < out.dual_to_primal.size(); ++i) {
    out.primal_to_dual[out.dual_to_primal[i]] = i;
  }
  return out;
}

// Re-expresses a support through an edge identification: bit i of the input
// becomes bit index_map[i] of the output.
inline BinaryVector transport(const BinaryVector& support,
                              const std::vector<std::size_t>& index_map) {
  if (support.size() != index_map.size()) {
    throw std::invalid_argument("transport: support length does not match the edge map");
  }
  BinaryVector out(support.size());
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (support.get(i)) out.set(index_map[i], true);
  }
  return out;
}

}  // namespace hgp

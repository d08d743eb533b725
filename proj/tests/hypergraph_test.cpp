#include "hgp/hypergraph.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

namespace hgp {
namespace {

// Vertex-edge incidence of the cycle graph on m vertices: edge j joins
// vertices j and (j+1) mod m.  Duplicated here rather than taken from the
// constructions header so these tests stay self-contained.
BinaryMatrix cycle_incidence(std::size_t m) {
  BinaryMatrix inc(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    inc.set(j, j, true);
    inc.set((j + 1) % m, j, true);
  }
  return inc;
}

Hypergraph random_hypergraph(std::mt19937_64& rng, std::size_t max_v, std::size_t max_e) {
  return Hypergraph(oracle::random_matrix(1 + rng() % max_v, 1 + rng() % max_e, 0.45, rng));
}

TEST(Hypergraph, IncidenceAccessors) {
  const Hypergraph h(cycle_incidence(3));
  EXPECT_EQ(h.vertex_count(), 3u);
  EXPECT_EQ(h.edge_count(), 3u);
  EXPECT_EQ(h.edge_size(0), 2u);
  EXPECT_EQ(h.vertex_degree(0), 2u);
}

TEST(Hypergraph, SingleVertexSingleEdge) {
  const Hypergraph h = from_incidence(BinaryMatrix::from_rows({"1"}));
  EXPECT_EQ(h.vertex_count(), 1u);
  EXPECT_EQ(h.edge_count(), 1u);
  EXPECT_EQ(h.edge_size(0), 1u);
}

TEST(Hypergraph, TransposeSwapsRoles) {
  const Hypergraph h(BinaryMatrix::from_rows({"110", "011"}));
  const Hypergraph t = transpose_hg(h);
  EXPECT_EQ(t.vertex_count(), 3u);
  EXPECT_EQ(t.edge_count(), 2u);
  EXPECT_EQ(t.edge_size(0), 2u);  // first edge of the transpose = first row of h
  EXPECT_EQ(transpose_hg(t), h);
}

TEST(CycleCodeDim, CycleGraphHasOneIndependentCycle) {
  for (std::size_t m = 3; m <= 6; ++m) {
    EXPECT_EQ(cycle_code_dim(Hypergraph(cycle_incidence(m))), 1u);
  }
}

TEST(CycleCodeDim, FullRankCheckMatrixGivesClassicalDimension) {
  // (n-k) x n full-rank check: cycle code dimension is k.
  const Hypergraph rep3(BinaryMatrix::from_rows({"110", "011"}));
  EXPECT_EQ(cycle_code_dim(rep3), 1u);
  EXPECT_EQ(cycle_code_dim(transpose_hg(rep3)), 0u);
}

TEST(Validate, FlagsIsolatedVerticesAndEmptyEdges) {
  const Hypergraph h(BinaryMatrix::from_rows({"10", "00"}));
  const HypergraphIssues issues = validate(h);
  EXPECT_FALSE(issues.clean());
  ASSERT_EQ(issues.isolated_vertices.size(), 1u);
  EXPECT_EQ(issues.isolated_vertices[0], 1u);
  ASSERT_EQ(issues.empty_edges.size(), 1u);
  EXPECT_EQ(issues.empty_edges[0], 1u);
  EXPECT_TRUE(validate(Hypergraph(cycle_incidence(4))).clean());
}

TEST(Product, CycleTimesCycleShape) {
  const Hypergraph c3(cycle_incidence(3));
  const ProductHypergraph p = product(c3, c3);
  EXPECT_EQ(p.vertex_count(), 9u);
  EXPECT_EQ(p.edge_count(), 18u);
  EXPECT_EQ(p.left_block_size(), 9u);
}

TEST(Product, SingleVertexSingleEdgeSquared) {
  const Hypergraph h = from_incidence(BinaryMatrix::from_rows({"1"}));
  const ProductHypergraph p = product(h, h);
  EXPECT_EQ(p.vertex_count(), 1u);
  EXPECT_EQ(p.edge_count(), 2u);
  // Both edges contain the unique vertex.
  EXPECT_TRUE(p.product().incidence().get(0, 0));
  EXPECT_TRUE(p.product().incidence().get(0, 1));
}

TEST(Product, RepetitionCheckTimesItsTranspose) {
  const Hypergraph h(BinaryMatrix::from_rows({"110", "011"}));
  const ProductHypergraph p = product(h, transpose_hg(h));
  EXPECT_EQ(p.vertex_count(), 6u);
  EXPECT_EQ(p.edge_count(), 13u);  // 2*2 + 3*3
}

TEST(Product, EdgeCountIdentityOnRandomPairs) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    const Hypergraph h1 = random_hypergraph(rng, 4, 4);
    const Hypergraph h2 = random_hypergraph(rng, 4, 4);
    const ProductHypergraph p = product(h1, h2);
    EXPECT_EQ(p.edge_count(), h1.vertex_count() * h2.edge_count() +
                                  h2.vertex_count() * h1.edge_count());
    EXPECT_EQ(p.vertex_count(), h1.vertex_count() * h2.vertex_count());
  }
}

TEST(Product, DegenerateFactorsAreLegal) {
  const Hypergraph no_edges(BinaryMatrix(2, 0));
  const Hypergraph c3(cycle_incidence(3));
  const ProductHypergraph p = product(no_edges, c3);
  EXPECT_EQ(p.vertex_count(), 6u);
  EXPECT_EQ(p.edge_count(), 2u * 3u);  // only the E_L block survives
  EXPECT_TRUE(chambers(p).empty());

  const Hypergraph no_vertices(BinaryMatrix(0, 2));  // two empty edges
  const ProductHypergraph q = product(no_vertices, c3);
  EXPECT_EQ(q.vertex_count(), 0u);
  EXPECT_EQ(q.edge_count(), 3u * 2u);
  EXPECT_EQ(chambers(q).size(), 2u * 3u);
}

TEST(Product, VertexRowsAreVertexStars) {
  // Row of the product incidence at (x, y): E_L edges (x, beta) with beta
  // containing y, plus E_R edges (y, alpha) with alpha containing x.
  std::mt19937_64 rng(102);
  for (int trial = 0; trial < 50; ++trial) {
    const Hypergraph h1 = random_hypergraph(rng, 3, 4);
    const Hypergraph h2 = random_hypergraph(rng, 3, 4);
    const ProductHypergraph p = product(h1, h2);
    for (std::size_t x = 0; x < h1.vertex_count(); ++x) {
      for (std::size_t y = 0; y < h2.vertex_count(); ++y) {
        BinaryVector expected(p.edge_count());
        for (std::size_t beta = 0; beta < h2.edge_count(); ++beta) {
          if (h2.incidence().get(y, beta)) expected.set(p.left_edge_index(x, beta), true);
        }
        for (std::size_t alpha = 0; alpha < h1.edge_count(); ++alpha) {
          if (h1.incidence().get(x, alpha)) expected.set(p.right_edge_index(y, alpha), true);
        }
        EXPECT_EQ(p.product().incidence().row(p.vertex_index(x, y)), expected);
      }
    }
  }
}

TEST(Chambers, CycleTimesCycleChambersAreSquares) {
  const Hypergraph c3(cycle_incidence(3));
  const ProductHypergraph p = product(c3, c3);
  const auto ch = chambers(p);
  ASSERT_EQ(ch.size(), 9u);
  for (const Chamber& c : ch) {
    EXPECT_EQ(c.support.weight(), 4u);
  }
}

TEST(Chambers, HandComputedSupport) {
  // H1 = C3 (edge 0 = {v0, v1}); H2 = 2x3 repetition check (edge 0 = {v0}).
  const Hypergraph h1(cycle_incidence(3));
  const Hypergraph h2(BinaryMatrix::from_rows({"110", "011"}));
  const ProductHypergraph p = product(h1, h2);
  ASSERT_EQ(p.edge_count(), 15u);  // 3*3 + 2*3
  const BinaryVector s = chamber_support(p, 0, 0);
  // E_L: (0,0) -> 0, (1,0) -> 3.  E_R: (0,0) -> 9.
  BinaryVector expected(15);
  expected.set(0, true);
  expected.set(3, true);
  expected.set(9, true);
  EXPECT_EQ(s, expected);
  EXPECT_THROW(chamber_support(p, 3, 0), std::out_of_range);
}

TEST(Chambers, WeightIsEdgeSizeSum) {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 50; ++trial) {
    const Hypergraph h1 = random_hypergraph(rng, 4, 4);
    const Hypergraph h2 = random_hypergraph(rng, 4, 4);
    const ProductHypergraph p = product(h1, h2);
    for_each_chamber(p, [&](const Chamber& c) {
      EXPECT_EQ(c.support.weight(), h1.edge_size(c.alpha) + h2.edge_size(c.beta));
    });
  }
}

TEST(Chambers, MixedEdgeSizesGiveWeightFive) {
  // alpha of size 3 and beta of size 2 -> support weight 5.
  const Hypergraph h1(BinaryMatrix::from_rows({"1", "1", "1"}));
  const Hypergraph h2(cycle_incidence(3));
  const ProductHypergraph p = product(h1, h2);
  EXPECT_EQ(chamber_support(p, 0, 0).weight(), 5u);
}

TEST(Chambers, MatrixRowsMatchStreamedChambers) {
  std::mt19937_64 rng(104);
  const Hypergraph h1 = random_hypergraph(rng, 4, 4);
  const Hypergraph h2 = random_hypergraph(rng, 4, 4);
  const ProductHypergraph p = product(h1, h2);
  const BinaryMatrix cm = chamber_matrix(p);
  ASSERT_EQ(cm.rows(), h1.edge_count() * h2.edge_count());
  std::size_t r = 0;
  for_each_chamber(p, [&](const Chamber& c) {
    EXPECT_EQ(cm.row(r), c.support);
    EXPECT_EQ(r, c.alpha * h2.edge_count() + c.beta);
    ++r;
  });
}

TEST(Chambers, OrthogonalToVertexStars) {
  // Every chamber meets every vertex star in an even number of edges, i.e.
  // incidence * chamber_matrix^T = 0.
  std::mt19937_64 rng(105);
  for (int trial = 0; trial < 50; ++trial) {
    const ProductHypergraph p =
        product(random_hypergraph(rng, 4, 4), random_hypergraph(rng, 4, 4));
    EXPECT_TRUE(mat_mul(p.product().incidence(), transpose(chamber_matrix(p))).is_zero());
  }
}

TEST(Chambers, KernelPairChamberSumsVanish) {
  // For cycles z1 of H1 and z2 of H2, the chambers over supp(z1) x supp(z2)
  // sum to zero: each vanishing sum is one linear relation among chambers.
  std::mt19937_64 rng(106);
  int nontrivial = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const Hypergraph h1 = random_hypergraph(rng, 4, 5);
    const Hypergraph h2 = random_hypergraph(rng, 4, 5);
    const ProductHypergraph p = product(h1, h2);
    const auto z1s = kernel_basis(h1.incidence());
    const auto z2s = kernel_basis(h2.incidence());
    for (const auto& z1 : z1s) {
      for (const auto& z2 : z2s) {
        BinaryVector sum(p.edge_count());
        for (std::size_t alpha = 0; alpha < h1.edge_count(); ++alpha) {
          if (!z1.get(alpha)) continue;
          for (std::size_t beta = 0; beta < h2.edge_count(); ++beta) {
            if (!z2.get(beta)) continue;
            sum ^= chamber_support(p, alpha, beta);
          }
        }
        EXPECT_TRUE(sum.is_zero());
        ++nontrivial;
      }
    }
  }
  EXPECT_GT(nontrivial, 50);  // the sweep actually exercised kernel pairs
}

TEST(ChamberMatrix, RankFormula) {
  // rank(chamber matrix) = |E1||E2| - k*h with k, h the factor cycle-code
  // dimensions.
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 60; ++trial) {
    const Hypergraph h1 = random_hypergraph(rng, 4, 5);
    const Hypergraph h2 = random_hypergraph(rng, 4, 5);
    const ProductHypergraph p = product(h1, h2);
    const std::size_t k = cycle_code_dim(h1);
    const std::size_t h = cycle_code_dim(h2);
    EXPECT_EQ(rank(chamber_matrix(p)),
              h1.edge_count() * h2.edge_count() - k * h);
  }
}

TEST(ProductIncidence, RankFormula) {
  // rank(product incidence) = |V1||V2| - r*s with r, s the transposed
  // factors' cycle-code dimensions.
  std::mt19937_64 rng(108);
  for (int trial = 0; trial < 60; ++trial) {
    const Hypergraph h1 = random_hypergraph(rng, 4, 5);
    const Hypergraph h2 = random_hypergraph(rng, 4, 5);
    const ProductHypergraph p = product(h1, h2);
    const std::size_t r = cycle_code_dim(transpose_hg(h1));
    const std::size_t s = cycle_code_dim(transpose_hg(h2));
    EXPECT_EQ(rank(p.product().incidence()),
              h1.vertex_count() * h2.vertex_count() - r * s);
  }
}

TEST(PoincareDual, EdgeMapIsAPermutation) {
  std::mt19937_64 rng(109);
  const ProductHypergraph p = product(random_hypergraph(rng, 4, 4), random_hypergraph(rng, 4, 4));
  const PoincareDual d = poincare_dual(p);
  EXPECT_EQ(d.dual.edge_count(), p.edge_count());
  EXPECT_EQ(d.dual.vertex_count(), p.left().edge_count() * p.right().edge_count());
  for (std::size_t i = 0; i < p.edge_count(); ++i) {
    EXPECT_EQ(d.primal_to_dual[d.dual_to_primal[i]], i);
  }
}

TEST(PoincareDual, DualChambersAreVertexStars) {
  // Transported through the edge identification, chamber r of the dual equals
  // row r of the primal incidence, and chamber r of the primal equals row r
  // of the dual incidence.
  std::mt19937_64 rng(110);
  for (int trial = 0; trial < 50; ++trial) {
    const ProductHypergraph p =
        product(random_hypergraph(rng, 4, 4), random_hypergraph(rng, 4, 4));
    const PoincareDual d = poincare_dual(p);

    const BinaryMatrix dual_chambers = chamber_matrix(d.dual);
    ASSERT_EQ(dual_chambers.rows(), p.vertex_count());
    for (std::size_t r = 0; r < dual_chambers.rows(); ++r) {
      EXPECT_EQ(transport(dual_chambers.row(r), d.dual_to_primal),
                p.product().incidence().row(r));
    }

    const BinaryMatrix primal_chambers = chamber_matrix(p);
    ASSERT_EQ(primal_chambers.rows(), d.dual.vertex_count());
    for (std::size_t r = 0; r < primal_chambers.rows(); ++r) {
      EXPECT_EQ(transport(primal_chambers.row(r), d.primal_to_dual),
                d.dual.product().incidence().row(r));
    }
  }
}

TEST(PoincareDual, TransportPreservesWeight) {
  std::mt19937_64 rng(111);
  const ProductHypergraph p = product(random_hypergraph(rng, 4, 4), random_hypergraph(rng, 4, 4));
  const PoincareDual d = poincare_dual(p);
  BinaryVector v(p.edge_count());
  for (std::size_t i = 0; i < v.size(); ++i) v.set(i, rng() & 1);
  const BinaryVector t = transport(v, d.primal_to_dual);
  EXPECT_EQ(t.weight(), v.weight());
  EXPECT_EQ(transport(t, d.dual_to_primal), v);
  EXPECT_THROW(transport(BinaryVector(p.edge_count() + 1), d.primal_to_dual),
               std::invalid_argument);
}

TEST(WeightProfiles, UniformRegularFactorsGiveTwoColumnWeights) {
  // For a t1-uniform, d1-regular H1 and t2-uniform, d2-regular H2: vertex
  // stars weigh d1+d2, chambers weigh t1+t2; E_L columns weigh t2 in the
  // incidence and d1 in the chamber matrix, E_R columns t1 and d2.
  const Hypergraph c4(cycle_incidence(4));  // 2-uniform, 2-regular
  const Hypergraph c6(cycle_incidence(6));
  const ProductHypergraph p = product(c4, c6);
  const BinaryMatrix& hx = p.product().incidence();
  for (std::size_t r = 0; r < hx.rows(); ++r) EXPECT_EQ(hx.row_weight(r), 4u);
  const BinaryMatrix hz = chamber_matrix(p);
  for (std::size_t r = 0; r < hz.rows(); ++r) EXPECT_EQ(hz.row_weight(r), 4u);
  for (std::size_t c = 0; c < hx.cols(); ++c) {
    EXPECT_EQ(hx.col_weight(c), 2u);
    EXPECT_EQ(hz.col_weight(c), 2u);
  }
}

TEST(WeightProfiles, ParallelEdgesStayDistinct) {
  // The 2-cycle has two parallel edges: identical incidence columns must not
  // collapse in products.
  const BinaryMatrix c2 = cycle_incidence(2);
  EXPECT_EQ(c2.row(0), c2.row(1));  // both edges join the same two vertices
  const ProductHypergraph p = product(Hypergraph(c2), Hypergraph(c2));
  EXPECT_EQ(p.edge_count(), 8u);
  EXPECT_EQ(chambers(p).size(), 4u);
}

}  // namespace
}  // namespace hgp

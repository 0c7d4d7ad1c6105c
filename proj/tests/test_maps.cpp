#include <itop/maps.hpp>

#include <itop/homology.hpp>

#include "support/gen.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

using itop::CoefficientRing;
using itop::InteractionMap;
using itop::InteractionSpace;
using itop::Rat;
using itop::Simplex;
using itop::SimplicialComplex;
using itop::SparseMatrix;

namespace {

const CoefficientRing kQ = CoefficientRing::rationals();

bool has_violation(const itop::ValidationReport& r, const std::string& kind) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const auto& v) { return v.kind == kind; });
}

// Entrywise equality in the field (mod p for GF(p), literal over Q).
bool equal_over(const SparseMatrix& a, const SparseMatrix& b, const CoefficientRing& field) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  SparseMatrix diff = a;
  for (int c = 0; c < b.cols(); ++c)
    for (const auto& [r, val] : b.column(c)) diff.add(r, c, -val);
  return itop::is_zero_over(diff, field);
}

}  // namespace

TEST_CASE("simplex images and orientation signs") {
  std::unordered_map<int, int> vm{{0, 5}, {1, 3}, {2, 3}};
  REQUIRE(itop::image_simplex(vm, Simplex::from_vertices({0, 1})) ==
          Simplex::from_vertices({3, 5}));
  REQUIRE(itop::image_simplex(vm, Simplex::from_vertices({1, 2})) == Simplex::from_vertices({3}));

  // 0 -> 5, 1 -> 3 reverses the order of a single pair: odd permutation.
  REQUIRE(itop::orientation_sign(vm, Simplex::from_vertices({0, 1})) == -1);
  REQUIRE(itop::orientation_sign(vm, Simplex::from_vertices({0})) == 1);
  REQUIRE_FALSE(itop::orientation_sign(vm, Simplex::from_vertices({1, 2})).has_value());
}

TEST_CASE("map validation accepts identities and relabelings") {
  gen::Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    InteractionSpace space = gen::random_space(rng, 6, 10, 2, 1 + static_cast<int>(rng() % 3));
    REQUIRE(itop::validate_interaction_map(itop::identity_map(space)).valid());

    auto table = gen::random_bijection(rng, space);
    InteractionMap f = gen::relabeling_map(space, table);
    REQUIRE(itop::validate_interaction_map(f).valid());
  }
}

TEST_CASE("map validation rejects each defect separately") {
  SimplicialComplex edge = SimplicialComplex::closure({{0, 1}});
  SimplicialComplex pt = SimplicialComplex::closure({{0}});

  SECTION("part counts must match") {
    InteractionMap m{itop::self_covering(edge, 2), itop::self_covering(edge, 1), {{}, {}}};
    REQUIRE(has_violation(itop::validate_interaction_map(m), "arity_mismatch"));
  }

  SECTION("every source vertex needs an image") {
    InteractionMap m{itop::self_covering(edge, 1), itop::self_covering(edge, 1), {{{0, 0}}}};
    REQUIRE(has_violation(itop::validate_interaction_map(m), "unmapped_vertex"));
  }

  SECTION("images must land in the matching target part") {
    InteractionMap m{itop::self_covering(edge, 1), itop::self_covering(pt, 1),
                     {{{0, 0}, {1, 1}}}};
    REQUIRE(has_violation(itop::validate_interaction_map(m), "image_missing"));
  }

  SECTION("per-part maps must agree on shared vertices") {
    InteractionMap m{itop::self_covering(edge, 2), itop::self_covering(edge, 2),
                     {{{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}}};
    REQUIRE(has_violation(itop::validate_interaction_map(m), "parts_disagree"));
  }

  SECTION("distinct simplices from different parts must stay distinct") {
    // Two parts covering a pair of points, mapped onto one point each way
    // around: {0} from part one and {1} from part two share the image {2}.
    SimplicialComplex two = SimplicialComplex::closure({{0}, {1}});
    InteractionSpace source{two, {SimplicialComplex::closure({{0}}),
                                  SimplicialComplex::closure({{1}})}};
    InteractionSpace target = itop::self_covering(SimplicialComplex::closure({{2}}), 2);
    InteractionMap m{source, target, {{{0, 2}}, {{1, 2}}}};
    REQUIRE(has_violation(itop::validate_interaction_map(m), "images_collide"));
  }
}

TEST_CASE("collapsing the interval to a point kills the edge chain") {
  SimplicialComplex edge = SimplicialComplex::closure({{0, 1}});
  SimplicialComplex pt = SimplicialComplex::closure({{0}});
  InteractionMap collapse{itop::self_covering(edge, 1), itop::self_covering(pt, 1),
                          {{{0, 0}, {1, 0}}}};
  REQUIRE(itop::validate_interaction_map(collapse).valid());

  auto src = itop::build_chain_complex(collapse.source, 1);
  auto dst = itop::build_chain_complex(collapse.target, 1);
  SparseMatrix f0 = itop::induced_chain_map(collapse, src, dst, 0);
  REQUIRE(f0.rows() == 1);
  REQUIRE(f0.cols() == 2);
  REQUIRE(f0.at(0, 0) == 1);
  REQUIRE(f0.at(0, 1) == 1);
  SparseMatrix f1 = itop::induced_chain_map(collapse, src, dst, 1);
  REQUIRE(f1.rows() == 0);  // the point complex has no degree-1 tuples
  REQUIRE(f1.cols() == 1);

  SparseMatrix h0 = itop::induced_homology_map(collapse, 0, kQ);
  REQUIRE(h0.rows() == 1);
  REQUIRE(h0.cols() == 1);
  REQUIRE(h0.at(0, 0) == 1);
}

TEST_CASE("chain maps commute with the boundary and respect orientation") {
  // Reversing the interval induces -1 on the edge chain.
  SimplicialComplex edge = SimplicialComplex::closure({{0, 1}});
  InteractionMap reverse{itop::self_covering(edge, 1), itop::self_covering(edge, 1),
                         {{{0, 1}, {1, 0}}}};
  auto cc = itop::build_chain_complex(reverse.source, 1);
  SparseMatrix f1 = itop::induced_chain_map(reverse, cc, cc, 1);
  REQUIRE(f1.at(0, 0) == -1);
}

TEST_CASE("identity maps induce identity matrices on homology") {
  gen::Rng rng(77);
  for (int trial = 0; trial < 8; ++trial) {
    InteractionSpace space = gen::random_space(rng, 6, 10, 2, 1 + static_cast<int>(rng() % 2));
    const int top = std::max(0, std::min(itop::max_tuple_degree(space), 2));
    for (int p = 0; p <= top; ++p) {
      SparseMatrix h = itop::induced_homology_map(itop::identity_map(space), p, kQ);
      REQUIRE(h.rows() == h.cols());
      REQUIRE(h == SparseMatrix::identity(h.rows()));
    }
  }
}

TEST_CASE("relabelings induce isomorphisms on homology") {
  gen::Rng rng(177);
  for (int trial = 0; trial < 8; ++trial) {
    InteractionSpace space = gen::random_space(rng, 6, 10, 2, 1 + static_cast<int>(rng() % 3));
    auto table = gen::random_bijection(rng, space);
    InteractionMap f = gen::relabeling_map(space, table);
    const int top = std::max(0, std::min(itop::max_tuple_degree(space), 2));
    for (int p = 0; p <= top; ++p) {
      SparseMatrix h = itop::induced_homology_map(f, p, kQ);
      REQUIRE(h.rows() == h.cols());
      REQUIRE(itop::rank(h, kQ) == h.rows());
    }
  }
}

TEST_CASE("induced maps compose functorially") {
  gen::Rng rng(271);
  for (int trial = 0; trial < 6; ++trial) {
    InteractionSpace space = gen::random_space(rng, 6, 10, 2, 1 + static_cast<int>(rng() % 2));
    auto t1 = gen::random_bijection(rng, space);
    InteractionMap f = gen::relabeling_map(space, t1);
    auto t2 = gen::random_bijection(rng, f.target);
    InteractionMap g = gen::relabeling_map(f.target, t2);
    InteractionMap gf = itop::compose(g, f);
    REQUIRE(itop::validate_interaction_map(gf).valid());

    const int top = std::max(0, std::min(itop::max_tuple_degree(space), 2));
    for (const auto& field : {kQ, CoefficientRing::prime_field(5)}) {
      for (int p = 0; p <= top; ++p) {
        SparseMatrix lhs = itop::induced_homology_map(gf, p, field);
        SparseMatrix rhs =
            itop::induced_homology_map(g, p, field).multiplied_by(itop::induced_homology_map(f, p, field));
        REQUIRE(equal_over(lhs, rhs, field));
      }
    }
  }
}

TEST_CASE("inclusions of sub-coverings induce maps of matching rank profile") {
  gen::Rng rng(371);
  for (int trial = 0; trial < 8; ++trial) {
    InteractionSpace space = gen::random_space(rng, 6, 10, 2, 1 + static_cast<int>(rng() % 2));
    InteractionSpace sub = gen::random_subspace(rng, space);
    InteractionMap inc = gen::inclusion_map(sub, space);
    REQUIRE(itop::validate_interaction_map(inc).valid());
    const int top = std::max(0, std::min(itop::max_tuple_degree(sub), 2));
    for (int p = 0; p <= top; ++p) {
      SparseMatrix h = itop::induced_homology_map(inc, p, kQ);
      auto hs = itop::betti(sub, p, kQ);
      auto ht = itop::betti(space, p, kQ);
      REQUIRE(h.cols() == hs.betti[p]);
      REQUIRE(h.rows() == ht.betti[p]);
      REQUIRE(itop::rank(h, kQ) <= std::min(h.rows(), h.cols()));
    }
  }
}

TEST_CASE("composition sanity checks") {
  SimplicialComplex edge = SimplicialComplex::closure({{0, 1}});
  SimplicialComplex pt = SimplicialComplex::closure({{0}});
  InteractionMap collapse{itop::self_covering(edge, 1), itop::self_covering(pt, 1),
                          {{{0, 0}, {1, 0}}}};
  InteractionMap other{itop::self_covering(edge, 1), itop::self_covering(edge, 1),
                       {{{0, 0}, {1, 1}}}};
  REQUIRE_THROWS_AS(itop::compose(other, collapse), std::invalid_argument);

  InteractionMap id = itop::identity_map(collapse.source);
  InteractionMap same = itop::compose(collapse, id);
  REQUIRE(same.vertex_maps[0].at(0) == 0);
  REQUIRE(same.vertex_maps[0].at(1) == 0);
  REQUIRE(same.target == collapse.target);
}

TEST_CASE("induced chain maps reject invalid interaction maps") {
  SimplicialComplex edge = SimplicialComplex::closure({{0, 1}});
  InteractionMap bad{itop::self_covering(edge, 1), itop::self_covering(edge, 1), {{{0, 0}}}};
  auto cc = itop::build_chain_complex(bad.source, 1);
  REQUIRE_THROWS_AS(itop::induced_chain_map(bad, cc, cc, 0), std::invalid_argument);
}

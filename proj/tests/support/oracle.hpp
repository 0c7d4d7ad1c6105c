#pragma once

#include <itop/linalg.hpp>
#include <itop/numbers.hpp>
#include <itop/simplex.hpp>

#include <vector>

// Independent reference implementations used only by the tests.  These are
// deliberately written with different algorithms (dense row-oriented
// elimination, textbook Smith reduction, minor gcds) than the library so the
// two sides can check each other.
namespace oracle {

using itop::Int;
using itop::Rat;

std::vector<std::vector<Rat>> to_dense(const itop::SparseMatrix& m);
std::vector<std::vector<Int>> to_dense_int(const itop::SparseMatrix& m);

// Rank by dense row-echelon elimination over the rationals.
int dense_rank_q(std::vector<std::vector<Rat>> m);
// Rank by dense row-echelon elimination over GF(p).
int dense_rank_gfp(const std::vector<std::vector<Rat>>& m, long long p);
// Dense kernel dimension check helper: columns - rank.
// Textbook Smith reduction of a dense integer matrix; returns the invariant
// factors (positive, divisibility chain).
std::vector<Int> dense_snf(std::vector<std::vector<Int>> m);
// Invariant factors through gcds of k-by-k minors (Bareiss determinants).
// Only sensible for small matrices.
std::vector<Int> minor_gcd_snf(const std::vector<std::vector<Int>>& m);

struct OrdinaryHomology {
  std::vector<long long> betti;            // over Q
  std::vector<std::vector<Int>> torsion;   // invariant factors > 1 per degree
};

// Ordinary simplicial homology computed from scratch (its own bases, its own
// boundary matrices, dense elimination, textbook Smith reduction).
OrdinaryHomology simplicial_homology(const itop::SimplicialComplex& k, int p_max);

// Ordinary simplicial boundary matrix degree p -> p-1 with graded-lex bases.
std::vector<std::vector<Rat>> ordinary_boundary(const itop::SimplicialComplex& k, int p);

}  // namespace oracle

#pragma once

#include "itop/linalg.hpp"
#include "itop/space.hpp"

#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

namespace itop {

// A finite formal sum of interaction tuples with rational coefficients,
// stored in canonical tuple order.
class FormalSum {
 public:
  void add(const InteractionTuple& t, const Rat& coeff);
  const std::map<InteractionTuple, Rat, TupleLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

 private:
  std::map<InteractionTuple, Rat, TupleLess> terms_;
};

// Boundary of a single interacting tuple: the tensor-product differential with
// Koszul signs, followed by the quotient that deletes non-interacting tuples.
// Requires the input tuple to interact.
FormalSum boundary_of_tuple(const InteractionTuple& t);

// Degreewise bases (canonically ordered interacting tuples) and boundary
// matrices of an interaction chain complex, covering degrees 0..p_max+1 so
// that homology in degree p_max is computable.  boundaries[p] maps degree p
// to degree p-1; boundaries[0] has zero rows.
struct ChainComplexRep {
  int p_max = 0;
  std::vector<std::vector<InteractionTuple>> bases;
  std::vector<SparseMatrix> boundaries;
  std::vector<std::unordered_map<InteractionTuple, int, TupleHash>> index;

  long long basis_size(int degree) const;
  std::optional<int> index_of(int degree, const InteractionTuple& t) const;
};

// Builds the complex of an interaction space.  Verifies d∘d = 0 on the built
// range and throws std::logic_error otherwise.
ChainComplexRep build_chain_complex(const InteractionSpace& space, int p_max);

// True when every member of the tuple lies in the corresponding part of
// `sub` (the tuple belongs to the sub-space's complex).
bool tuple_in_subspace(const InteractionTuple& t, const InteractionSpace& sub);

// Relative complex of a sub-covering inside a covering: the basis consists of
// the ambient tuples not wholly inside `sub`; boundary terms landing in `sub`
// are deleted.  Requires componentwise containment of `sub` in `space`.
ChainComplexRep build_relative_complex(const InteractionSpace& space, const InteractionSpace& sub,
                                       int p_max);

}  // namespace itop

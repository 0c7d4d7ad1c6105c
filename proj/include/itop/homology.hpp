#pragma once

#include "itop/chain.hpp"
#include "itop/linalg.hpp"
#include "itop/space.hpp"

#include <optional>
#include <string>
#include <vector>

namespace itop {

struct HomologySummary {
  CoefficientRing ring;
  int p_max = 0;
  std::vector<long long> betti;            // degrees 0..p_max
  std::vector<std::vector<Int>> torsion;   // invariant factors > 1 per degree; empty over fields
  Int euler = 0;                           // signed tuple count over the full degree range
};

// Interaction Betti numbers over a field (rationals or GF(p)).
HomologySummary betti(const InteractionSpace& space, int p_max, const CoefficientRing& field);

// Integer interaction homology: free ranks plus torsion invariant factors.
HomologySummary integer_homology(const InteractionSpace& space, int p_max);

// Alternating sum over all interacting tuples; equals the alternating sum of
// Betti numbers over any field by rank-nullity.
Int interaction_euler(const InteractionSpace& space);

// Signed count over ordered pairs of intersecting simplices of a single
// complex; computed directly from the definition, independent of the chain
// machinery.
Int wu_characteristic(const SimplicialComplex& k);

// Betti numbers of the dual (cochain) complex, computed by eliminating the
// transposed boundary matrices.
HomologySummary cohomology_betti(const InteractionSpace& space, int p_max,
                                 const CoefficientRing& field);

// Homology of the quotient by a componentwise sub-covering.
HomologySummary relative_betti(const InteractionSpace& space, const InteractionSpace& sub,
                               int p_max, const CoefficientRing& field);
HomologySummary relative_integer_homology(const InteractionSpace& space,
                                          const InteractionSpace& sub, int p_max);

struct ExactnessNode {
  int degree = 0;
  std::string node;          // "sub", "total", or "relative"
  long long incoming_rank = 0;
  long long kernel_dim = 0;
  bool exact = false;
};

struct ExactnessReport {
  int p_max = 0;
  std::vector<ExactnessNode> nodes;
  bool all_exact() const;
};

// Builds the long exact sequence of the pair through degree p_max and checks
// exactness at every interior node, including the connecting maps.
ExactnessReport les_check(const InteractionSpace& space, const InteractionSpace& sub, int p_max,
                          const CoefficientRing& field);

// --- lower-level pieces shared by the operations above ---

// Betti numbers of an assembled complex via column ranks of its boundaries.
std::vector<long long> betti_of_complex(const ChainComplexRep& cc, const CoefficientRing& field);
// Same numbers via the transposed (cochain) route.
std::vector<long long> cobetti_of_complex(const ChainComplexRep& cc, const CoefficientRing& field);
// Free ranks and torsion via Smith normal form of the integer boundaries.
std::pair<std::vector<long long>, std::vector<std::vector<Int>>> integer_homology_of_complex(
    const ChainComplexRep& cc);

// Chain-level homology bases of a complex over a field: canonical
// representative cycles per degree, plus coordinates of arbitrary cycles in
// those bases.  Degrees 0..p_max of the complex are available.
class HomologyCoordinates {
 public:
  HomologyCoordinates(const ChainComplexRep& cc, const CoefficientRing& field);

  int dim(int degree) const;
  const std::vector<SparseVec>& representatives(int degree) const;
  // Coordinates of a cycle's class; nullopt when the vector is not a cycle
  // (or otherwise outside the tracked span).
  std::optional<std::vector<Rat>> coordinates(int degree, const SparseVec& cycle) const;

 private:
  struct DegreeData {
    ColumnReducer reducer;
    std::vector<int> rep_ids;  // reducer column ids of surviving kernel columns
    std::vector<SparseVec> reps;
  };
  std::vector<DegreeData> degrees_;
};

}  // namespace itop

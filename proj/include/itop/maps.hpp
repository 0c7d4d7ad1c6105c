#pragma once

#include "itop/chain.hpp"
#include "itop/linalg.hpp"
#include "itop/space.hpp"

#include <optional>
#include <unordered_map>
#include <vector>

namespace itop {

// A family of vertex maps, one per part, sending part i of the source
// covering into part i of the target covering.
struct InteractionMap {
  InteractionSpace source;
  InteractionSpace target;
  std::vector<std::unordered_map<int, int>> vertex_maps;
};

// Set image of a simplex under a vertex map (sorted, duplicates collapsed).
Simplex image_simplex(const std::unordered_map<int, int>& vm, const Simplex& s);
// Sign of the permutation sorting the image vertices; nullopt when two
// vertices collapse (the chain-level image is then zero).
std::optional<int> orientation_sign(const std::unordered_map<int, int>& vm, const Simplex& s);

// Checks: every part vertex has an image, images of simplices land in the
// corresponding target part, the per-part maps agree vertexwise on part
// intersections, and distinct simplices taken from two different parts never
// share an image.
ValidationReport validate_interaction_map(const InteractionMap& m);

// Matrix of the induced chain map in one degree, over the given complexes of
// source and target.  Rejects invalid maps; commutation with the boundary is
// asserted (degree >= 1).
SparseMatrix induced_chain_map(const InteractionMap& m, const ChainComplexRep& src,
                               const ChainComplexRep& dst, int degree);

// Matrix of the induced map on degree-p homology in the canonical bases.
SparseMatrix induced_homology_map(const InteractionMap& m, int degree,
                                  const CoefficientRing& field);

InteractionMap identity_map(const InteractionSpace& space);

// g after f; requires f.target == g.source.
InteractionMap compose(const InteractionMap& g, const InteractionMap& f);

}  // namespace itop

#pragma once

#include "itop/linalg.hpp"
#include "itop/numbers.hpp"
#include "itop/simplex.hpp"
#include "itop/space.hpp"

#include <string>
#include <vector>

namespace itop {

struct LabeledPointCloud {
  std::vector<std::vector<Rat>> points;   // equal dimension per point
  std::vector<std::vector<int>> labels;   // sorted, unique, nonempty per point

  std::size_t size() const { return points.size(); }
};

enum class CoveringMode { by_label, self_n };

struct ScaleSweep {
  std::vector<Rat> scales;                // strictly increasing, non-negative
  std::vector<std::string> scale_labels;  // rendering per scale; defaults to canonical strings
  int p_max = 0;
  CoveringMode mode = CoveringMode::self_n;
  int self_parts = 2;                     // arity used by self_n
};

// Vietoris-Rips complex at one scale: vertices are point indices, a clique
// spans a simplex when all pairwise squared distances are <= scale^2 (ties
// included; comparisons are exact).  Cliques with more than max_dim+1
// vertices are not generated.
SimplicialComplex vietoris_rips(const std::vector<std::vector<Rat>>& points, const Rat& scale,
                                int max_dim);

// The covering at one scale: by_label builds one part per label (Rips of the
// points carrying that label, on global indices) with the union as total
// complex; self_n covers the full Rips complex by `self_parts` copies.
InteractionSpace covering_at_scale(const LabeledPointCloud& cloud, const Rat& scale, int max_dim,
                                   CoveringMode mode, int self_parts);

struct BettiCurveRow {
  std::string scale;
  int degree = 0;
  long long betti = 0;
};

// Betti numbers for every scale and every degree 0..p_max, ordered by scale
// then degree.  Asserts that the underlying complexes only grow along the
// sweep.
std::vector<BettiCurveRow> betti_curve(const LabeledPointCloud& cloud, const ScaleSweep& sweep,
                                       int max_dim, const CoefficientRing& field);

}  // namespace itop

#include "itop/pointcloud.hpp"

#include "itop/chain.hpp"
#include "itop/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace itop {

namespace {

Rat squared_distance(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  Rat acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rat d = a[i] - b[i];
    acc += d * d;
  }
  return acc;
}

// Rips complex of the points selected by `ids` (global indices kept as vertex
// ids).  Enumerates every clique on at most max_dim+1 vertices.
SimplicialComplex rips_on_subset(const std::vector<std::vector<Rat>>& points,
                                 const std::vector<int>& ids, const Rat& scale, int max_dim) {
  const Rat threshold = scale * scale;
  const std::size_t n = ids.size();
  // Higher-index neighbor lists in `ids` positions.
  std::vector<std::vector<int>> up(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (squared_distance(points[ids[i]], points[ids[j]]) <= threshold)
        up[i].push_back(static_cast<int>(j));

  std::vector<Simplex> cliques;
  std::vector<int> current;
  auto extend = [&](auto&& self, const std::vector<int>& candidates) -> void {
    std::vector<int> verts;
    verts.reserve(current.size());
    for (int pos : current) verts.push_back(ids[pos]);
    cliques.push_back(Simplex::from_vertices(std::move(verts)));
    if (static_cast<int>(current.size()) == max_dim + 1) return;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      const int c = candidates[k];
      std::vector<int> next;
      std::set_intersection(candidates.begin() + k + 1, candidates.end(), up[c].begin(),
                            up[c].end(), std::back_inserter(next));
      current.push_back(c);
      self(self, next);
      current.pop_back();
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    current.assign(1, static_cast<int>(i));
    extend(extend, up[i]);
  }
  return SimplicialComplex::from_set(std::move(cliques));
}

void check_cloud(const LabeledPointCloud& cloud) {
  if (cloud.points.empty()) throw std::invalid_argument("point cloud: no points");
  if (cloud.labels.size() != cloud.points.size())
    throw std::invalid_argument("point cloud: label rows do not match points");
  const std::size_t d = cloud.points[0].size();
  if (d == 0) throw std::invalid_argument("point cloud: zero-dimensional points");
  for (const auto& p : cloud.points)
    if (p.size() != d) throw std::invalid_argument("point cloud: inconsistent dimensions");
  for (const auto& ls : cloud.labels) {
    if (ls.empty()) throw std::invalid_argument("point cloud: point without labels");
    for (std::size_t i = 0; i < ls.size(); ++i) {
      if (ls[i] < 0) throw std::invalid_argument("point cloud: negative label");
      if (i > 0 && ls[i - 1] >= ls[i])
        throw std::invalid_argument("point cloud: labels not sorted/unique");
    }
  }
}

}  // namespace

SimplicialComplex vietoris_rips(const std::vector<std::vector<Rat>>& points, const Rat& scale,
                                int max_dim) {
  if (max_dim < 0) throw std::invalid_argument("vietoris_rips: max_dim must be >= 0");
  if (scale < 0) throw std::invalid_argument("vietoris_rips: negative scale");
  if (points.empty()) throw std::invalid_argument("vietoris_rips: no points");
  const std::size_t d = points[0].size();
  for (const auto& p : points)
    if (p.size() != d || d == 0)
      throw std::invalid_argument("vietoris_rips: inconsistent point dimensions");
  std::vector<int> ids(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) ids[i] = static_cast<int>(i);
  return rips_on_subset(points, ids, scale, max_dim);
}

InteractionSpace covering_at_scale(const LabeledPointCloud& cloud, const Rat& scale, int max_dim,
                                   CoveringMode mode, int self_parts) {
  check_cloud(cloud);
  if (max_dim < 0) throw std::invalid_argument("covering_at_scale: max_dim must be >= 0");
  if (scale < 0) throw std::invalid_argument("covering_at_scale: negative scale");
  InteractionSpace space;
  if (mode == CoveringMode::self_n) {
    if (self_parts < 1) throw std::invalid_argument("covering_at_scale: need at least one part");
    return self_covering(vietoris_rips(cloud.points, scale, max_dim),
                         static_cast<std::size_t>(self_parts));
  }
  std::vector<int> label_universe;
  for (const auto& ls : cloud.labels) label_universe.insert(label_universe.end(), ls.begin(), ls.end());
  std::sort(label_universe.begin(), label_universe.end());
  label_universe.erase(std::unique(label_universe.begin(), label_universe.end()),
                       label_universe.end());
  for (int label : label_universe) {
    std::vector<int> ids;
    for (std::size_t i = 0; i < cloud.size(); ++i)
      if (std::binary_search(cloud.labels[i].begin(), cloud.labels[i].end(), label))
        ids.push_back(static_cast<int>(i));
    space.parts.push_back(rips_on_subset(cloud.points, ids, scale, max_dim));
  }
  space.total = union_of(space.parts);
  return space;
}

std::vector<BettiCurveRow> betti_curve(const LabeledPointCloud& cloud, const ScaleSweep& sweep,
                                       int max_dim, const CoefficientRing& field) {
  check_cloud(cloud);
  if (!field.is_field()) throw std::invalid_argument("betti_curve: field required");
  if (sweep.scales.empty()) throw std::invalid_argument("betti_curve: no scales");
  if (sweep.p_max < 0) throw std::invalid_argument("betti_curve: p_max must be >= 0");
  if (!sweep.scale_labels.empty() && sweep.scale_labels.size() != sweep.scales.size())
    throw std::invalid_argument("betti_curve: scale labels do not match scales");
  for (std::size_t i = 0; i < sweep.scales.size(); ++i) {
    if (sweep.scales[i] < 0) throw std::invalid_argument("betti_curve: negative scale");
    if (i > 0 && !(sweep.scales[i - 1] < sweep.scales[i]))
      throw std::invalid_argument("betti_curve: scales must be strictly increasing");
  }

  std::vector<BettiCurveRow> rows;
  InteractionSpace previous;
  bool have_previous = false;
  for (std::size_t si = 0; si < sweep.scales.size(); ++si) {
    InteractionSpace space =
        covering_at_scale(cloud, sweep.scales[si], max_dim, sweep.mode, sweep.self_parts);
    if (have_previous) {
      // Filtration property: complexes (hence tuple bases) only grow.
      if (previous.arity() != space.arity())
        throw std::logic_error("betti_curve: part count changed along the sweep");
      if (!previous.total.is_subcomplex_of(space.total))
        throw std::logic_error("betti_curve: total complex shrank along the sweep");
      for (std::size_t i = 0; i < space.arity(); ++i)
        if (!previous.parts[i].is_subcomplex_of(space.parts[i]))
          throw std::logic_error("betti_curve: a part shrank along the sweep");
    }
    ChainComplexRep cc = build_chain_complex(space, sweep.p_max);
    std::vector<long long> b = betti_of_complex(cc, field);
    const std::string label = sweep.scale_labels.empty() ? rat_to_string(sweep.scales[si])
                                                         : sweep.scale_labels[si];
    for (int p = 0; p <= sweep.p_max; ++p) rows.push_back({label, p, b[p]});
    previous = std::move(space);
    have_previous = true;
  }
  return rows;
}

}  // namespace itop

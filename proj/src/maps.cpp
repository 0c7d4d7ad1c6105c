#include "itop/maps.hpp"

#include "itop/homology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace itop {

namespace {

int mapped_vertex(const std::unordered_map<int, int>& vm, int v) {
  auto it = vm.find(v);
  if (it == vm.end())
    throw std::invalid_argument("interaction map: vertex " + std::to_string(v) + " has no image");
  return it->second;
}

}  // namespace

Simplex image_simplex(const std::unordered_map<int, int>& vm, const Simplex& s) {
  std::vector<int> img;
  img.reserve(s.vertices().size());
  for (int v : s.vertices()) img.push_back(mapped_vertex(vm, v));
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return Simplex(std::move(img));
}

std::optional<int> orientation_sign(const std::unordered_map<int, int>& vm, const Simplex& s) {
  std::vector<int> img;
  img.reserve(s.vertices().size());
  for (int v : s.vertices()) img.push_back(mapped_vertex(vm, v));
  // Parity of the permutation sorting `img`, counted by inversions; a repeat
  // means the simplex collapses.
  int sign = 1;
  for (std::size_t i = 0; i < img.size(); ++i)
    for (std::size_t j = i + 1; j < img.size(); ++j) {
      if (img[i] == img[j]) return std::nullopt;
      if (img[i] > img[j]) sign = -sign;
    }
  return sign;
}

ValidationReport validate_interaction_map(const InteractionMap& m) {
  ValidationReport report;
  const std::size_t n = m.source.arity();
  if (m.target.arity() != n || m.vertex_maps.size() != n) {
    report.violations.push_back(
        {"arity_mismatch", "source parts: " + std::to_string(n) +
                               ", target parts: " + std::to_string(m.target.arity()) +
                               ", vertex maps: " + std::to_string(m.vertex_maps.size())});
    return report;
  }

  for (std::size_t i = 0; i < n; ++i) {
    const auto& vm = m.vertex_maps[i];
    for (int v : m.source.parts[i].vertex_ids())
      if (!vm.count(v))
        report.violations.push_back({"unmapped_vertex", "part " + std::to_string(i) +
                                                            ": vertex " + std::to_string(v) +
                                                            " has no image"});
  }
  if (!report.violations.empty()) return report;

  for (std::size_t i = 0; i < n; ++i) {
    const auto& vm = m.vertex_maps[i];
    for (const Simplex& s : m.source.parts[i].simplices()) {
      Simplex img = image_simplex(vm, s);
      if (!m.target.parts[i].contains(img))
        report.violations.push_back({"image_missing", "part " + std::to_string(i) + ": image " +
                                                          img.to_string() + " of " +
                                                          s.to_string() +
                                                          " not in the target part"});
    }
  }

  // Vertexwise agreement on part intersections.
  for (std::size_t i = 0; i < n; ++i) {
    const auto verts_i = m.source.parts[i].vertex_ids();
    for (std::size_t j = i + 1; j < n; ++j) {
      for (int v : verts_i) {
        if (!m.source.parts[j].contains(Simplex({v}))) continue;
        const int wi = m.vertex_maps[i].at(v);
        const int wj = m.vertex_maps[j].at(v);
        if (wi != wj)
          report.violations.push_back(
              {"parts_disagree", "vertex " + std::to_string(v) + " maps to " + std::to_string(wi) +
                                     " under part " + std::to_string(i) + " but to " +
                                     std::to_string(wj) + " under part " + std::to_string(j)});
      }
    }
  }

  // Distinct simplices drawn from two different parts must have distinct
  // images.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::map<Simplex, const Simplex*, SimplexLess> images_i;
      for (const Simplex& s : m.source.parts[i].simplices())
        images_i.emplace(image_simplex(m.vertex_maps[i], s), &s);
      for (const Simplex& t : m.source.parts[j].simplices()) {
        Simplex img = image_simplex(m.vertex_maps[j], t);
        auto it = images_i.find(img);
        if (it != images_i.end() && !(*it->second == t))
          report.violations.push_back(
              {"images_collide", "parts " + std::to_string(i) + "," + std::to_string(j) +
                                     ": distinct simplices " + it->second->to_string() + " and " +
                                     t.to_string() + " share the image " + img.to_string()});
      }
    }
  }
  return report;
}

namespace {

void require_valid(const InteractionMap& m, const char* where) {
  ValidationReport r = validate_interaction_map(m);
  if (!r.valid())
    throw std::invalid_argument(std::string(where) + ": invalid interaction map: " +
                                r.violations.front().kind + " (" + r.violations.front().detail +
                                ")");
}

// The induced matrix in one degree, without validation or commutation checks.
SparseMatrix chain_map_matrix(const InteractionMap& m, const ChainComplexRep& src,
                              const ChainComplexRep& dst, int degree) {
  SparseMatrix out(static_cast<int>(dst.basis_size(degree)),
                   static_cast<int>(src.basis_size(degree)));
  for (int j = 0; j < static_cast<int>(src.basis_size(degree)); ++j) {
    const InteractionTuple& t = src.bases[degree][j];
    int sign = 1;
    bool degenerate = false;
    InteractionTuple img;
    img.members.reserve(t.members.size());
    for (std::size_t i = 0; i < t.members.size(); ++i) {
      auto s = orientation_sign(m.vertex_maps[i], t.members[i]);
      if (!s) {
        degenerate = true;
        break;
      }
      sign *= *s;
      img.members.push_back(image_simplex(m.vertex_maps[i], t.members[i]));
    }
    if (degenerate) continue;
    if (!tuple_interacts(img.members))
      throw std::logic_error("induced chain map: image of the interacting tuple " +
                             t.to_string() + " does not interact");
    auto row = dst.index_of(degree, img);
    if (!row)
      throw std::logic_error("induced chain map: image tuple " + img.to_string() +
                             " missing from the target basis");
    out.add(*row, j, Rat(sign));
  }
  return out;
}

}  // namespace

SparseMatrix induced_chain_map(const InteractionMap& m, const ChainComplexRep& src,
                               const ChainComplexRep& dst, int degree) {
  if (degree < 0 || degree >= static_cast<int>(src.bases.size()) ||
      degree >= static_cast<int>(dst.bases.size()))
    throw std::invalid_argument("induced_chain_map: degree out of the built range");
  require_valid(m, "induced_chain_map");
  SparseMatrix f_p = chain_map_matrix(m, src, dst, degree);
  if (degree >= 1) {
    SparseMatrix f_prev = chain_map_matrix(m, src, dst, degree - 1);
    SparseMatrix lhs = dst.boundaries[degree].multiplied_by(f_p);
    SparseMatrix rhs = f_prev.multiplied_by(src.boundaries[degree]);
    if (!(lhs == rhs))
      throw std::logic_error("induced chain map: does not commute with the boundary at degree " +
                             std::to_string(degree));
  }
  return f_p;
}

SparseMatrix induced_homology_map(const InteractionMap& m, int degree,
                                  const CoefficientRing& field) {
  if (degree < 0) throw std::invalid_argument("induced_homology_map: negative degree");
  require_valid(m, "induced_homology_map");
  ChainComplexRep src = build_chain_complex(m.source, degree);
  ChainComplexRep dst = build_chain_complex(m.target, degree);
  SparseMatrix f = induced_chain_map(m, src, dst, degree);
  HomologyCoordinates h_src(src, field);
  HomologyCoordinates h_dst(dst, field);
  SparseMatrix out(h_dst.dim(degree), h_src.dim(degree));
  const auto& reps = h_src.representatives(degree);
  for (int j = 0; j < static_cast<int>(reps.size()); ++j) {
    SparseVec image = f.apply(reps[j]);
    auto coords = h_dst.coordinates(degree, image);
    if (!coords)
      throw std::logic_error("induced homology map: image of a cycle is not a cycle");
    for (int i = 0; i < static_cast<int>(coords->size()); ++i) out.add(i, j, (*coords)[i]);
  }
  return out;
}

InteractionMap identity_map(const InteractionSpace& space) {
  InteractionMap m;
  m.source = space;
  m.target = space;
  m.vertex_maps.resize(space.arity());
  for (std::size_t i = 0; i < space.arity(); ++i)
    for (int v : space.parts[i].vertex_ids()) m.vertex_maps[i][v] = v;
  return m;
}

InteractionMap compose(const InteractionMap& g, const InteractionMap& f) {
  if (!(f.target == g.source))
    throw std::invalid_argument("compose: target of the first map differs from the source of the second");
  if (f.vertex_maps.size() != g.vertex_maps.size())
    throw std::invalid_argument("compose: part counts differ");
  InteractionMap out;
  out.source = f.source;
  out.target = g.target;
  out.vertex_maps.resize(f.vertex_maps.size());
  for (std::size_t i = 0; i < f.vertex_maps.size(); ++i) {
    for (const auto& [v, w] : f.vertex_maps[i]) {
      auto it = g.vertex_maps[i].find(w);
      if (it == g.vertex_maps[i].end())
        throw std::invalid_argument("compose: vertex " + std::to_string(w) +
                                    " lacks an image under the second map (part " +
                                    std::to_string(i) + ")");
      out.vertex_maps[i][v] = it->second;
    }
  }
  return out;
}

}  // namespace itop

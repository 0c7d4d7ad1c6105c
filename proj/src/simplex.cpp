#include "itop/simplex.hpp"

#include <algorithm>
#include <stdexcept>

namespace itop {

Simplex::Simplex(std::vector<int> vertices) : verts_(std::move(vertices)) {
  if (verts_.empty()) throw std::invalid_argument("simplex: empty vertex list");
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    if (verts_[i] < 0) throw std::invalid_argument("simplex: negative vertex id");
    if (i > 0 && verts_[i - 1] >= verts_[i])
      throw std::invalid_argument("simplex: vertices not strictly increasing");
  }
}

Simplex Simplex::from_vertices(std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    if (vertices[i - 1] == vertices[i])
      throw std::invalid_argument("simplex: duplicate vertex " + std::to_string(vertices[i]));
  }
  return Simplex(std::move(vertices));
}

bool Simplex::contains(int v) const {
  return std::binary_search(verts_.begin(), verts_.end(), v);
}

Simplex Simplex::face(int r) const {
  if (dim() < 1) throw std::logic_error("simplex: face of a vertex");
  if (r < 0 || r > dim()) throw std::logic_error("simplex: face index out of range");
  std::vector<int> v;
  v.reserve(verts_.size() - 1);
  for (int i = 0; i <= dim(); ++i)
    if (i != r) v.push_back(verts_[i]);
  return Simplex(std::move(v));
}

std::string Simplex::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(verts_[i]);
  }
  out += "}";
  return out;
}

bool simplex_less(const Simplex& a, const Simplex& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return a.vertices() < b.vertices();
}

bool vertex_sets_intersect(const Simplex& a, const Simplex& b) {
  const auto& u = a.vertices();
  const auto& v = b.vertices();
  std::size_t i = 0, j = 0;
  while (i < u.size() && j < v.size()) {
    if (u[i] == v[j]) return true;
    if (u[i] < v[j])
      ++i;
    else
      ++j;
  }
  return false;
}

std::vector<int> vertex_intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

namespace {

std::vector<Simplex> sorted_unique(std::vector<Simplex> simplices) {
  std::sort(simplices.begin(), simplices.end(), SimplexLess{});
  simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
  return simplices;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_set(std::vector<Simplex> simplices) {
  SimplicialComplex k;
  k.simplices_ = sorted_unique(std::move(simplices));
  return k;
}

SimplicialComplex SimplicialComplex::closure_of(const std::vector<Simplex>& simplices) {
  std::vector<Simplex> all;
  for (const Simplex& s : simplices) {
    const auto& v = s.vertices();
    const std::size_t k = v.size();
    if (k > 20) throw std::invalid_argument("simplex too large for closure: " + s.to_string());
    for (unsigned long mask = 1; mask < (1ul << k); ++mask) {
      std::vector<int> sub;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1ul << i)) sub.push_back(v[i]);
      all.emplace_back(std::move(sub));
    }
  }
  return from_set(std::move(all));
}

SimplicialComplex SimplicialComplex::closure(const std::vector<std::vector<int>>& vertex_lists) {
  std::vector<Simplex> top;
  top.reserve(vertex_lists.size());
  for (const auto& vl : vertex_lists) top.push_back(Simplex::from_vertices(vl));
  return closure_of(top);
}

bool SimplicialComplex::contains(const Simplex& s) const {
  return std::binary_search(simplices_.begin(), simplices_.end(), s, SimplexLess{});
}

int SimplicialComplex::dim() const {
  return simplices_.empty() ? -1 : simplices_.back().dim();
}

bool SimplicialComplex::is_face_closed() const {
  for (const Simplex& s : simplices_) {
    for (int r = 0; r <= s.dim() && s.dim() >= 1; ++r)
      if (!contains(s.face(r))) return false;
  }
  return true;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
  for (const Simplex& s : simplices_)
    if (!other.contains(s)) return false;
  return true;
}

std::vector<int> SimplicialComplex::vertex_ids() const {
  std::vector<int> out;
  for (const Simplex& s : simplices_) {
    if (s.dim() != 0) break;  // vertices come first in graded order
    out.push_back(s.vertices()[0]);
  }
  return out;
}

std::vector<Simplex> SimplicialComplex::simplices_of_dim(int d) const {
  std::vector<Simplex> out;
  for (const Simplex& s : simplices_) {
    if (s.dim() > d) break;
    if (s.dim() == d) out.push_back(s);
  }
  return out;
}

SimplicialComplex union_of(const std::vector<SimplicialComplex>& complexes) {
  std::vector<Simplex> all;
  for (const auto& k : complexes)
    all.insert(all.end(), k.simplices().begin(), k.simplices().end());
  return SimplicialComplex::from_set(std::move(all));
}

}  // namespace itop

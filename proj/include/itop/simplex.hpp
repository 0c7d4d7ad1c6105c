#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace itop {

// An abstract simplex: a nonempty, strictly increasing list of non-negative
// vertex ids.  The default-constructed object is the empty placeholder and is
// never produced by the factories below.
class Simplex {
 public:
  Simplex() = default;
  // `vertices` must already be strictly increasing and non-negative.
  explicit Simplex(std::vector<int> vertices);
  // Sorts first; throws std::invalid_argument on duplicates, negatives, or
  // an empty list.
  static Simplex from_vertices(std::vector<int> vertices);

  int dim() const { return static_cast<int>(verts_.size()) - 1; }
  const std::vector<int>& vertices() const { return verts_; }
  bool contains(int v) const;
  // The r-th codimension-one face (drop the r-th vertex); requires dim() >= 1.
  Simplex face(int r) const;
  std::string to_string() const;

  bool operator==(const Simplex&) const = default;

 private:
  std::vector<int> verts_;
};

// Graded lexicographic order: lower dimension first, then lexicographic on
// the vertex lists.
bool simplex_less(const Simplex& a, const Simplex& b);

struct SimplexLess {
  bool operator()(const Simplex& a, const Simplex& b) const { return simplex_less(a, b); }
};

bool vertex_sets_intersect(const Simplex& a, const Simplex& b);
std::vector<int> vertex_intersection(const std::vector<int>& a, const std::vector<int>& b);

// A finite simplicial complex stored as its full, graded-lex-sorted simplex
// list.  Factories guarantee sortedness and uniqueness; face closure is only
// guaranteed by `closure`/`closure_of` (and preserved by unions).
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // Builds the downward closure of the given vertex lists (which need not be
  // sorted).  Every list must be a valid simplex after sorting.
  static SimplicialComplex closure(const std::vector<std::vector<int>>& vertex_lists);
  static SimplicialComplex closure_of(const std::vector<Simplex>& simplices);
  // Stores the given set verbatim (sorted, deduplicated) with no closure;
  // used where face-closure itself is the property under inspection.
  static SimplicialComplex from_set(std::vector<Simplex> simplices);

  const std::vector<Simplex>& simplices() const { return simplices_; }
  bool contains(const Simplex& s) const;
  bool empty() const { return simplices_.empty(); }
  std::size_t size() const { return simplices_.size(); }
  // Top dimension; -1 for the empty complex.
  int dim() const;
  bool is_face_closed() const;
  bool is_subcomplex_of(const SimplicialComplex& other) const;
  std::vector<int> vertex_ids() const;
  // Simplices of a fixed dimension, in order.
  std::vector<Simplex> simplices_of_dim(int d) const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  std::vector<Simplex> simplices_;
};

SimplicialComplex union_of(const std::vector<SimplicialComplex>& complexes);

}  // namespace itop

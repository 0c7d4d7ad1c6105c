#pragma once

#include "itop/numbers.hpp"
#include "itop/simplex.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace itop {

// A simplicial complex together with a finite covering by subcomplexes whose
// union is the whole complex.  The number of parts fixes the tuple arity for
// the interaction theory built on top.
struct InteractionSpace {
  SimplicialComplex total;
  std::vector<SimplicialComplex> parts;

  std::size_t arity() const { return parts.size(); }
  bool operator==(const InteractionSpace&) const = default;
};

// The covering of `k` by n copies of itself.
InteractionSpace self_covering(const SimplicialComplex& k, std::size_t n);

struct ValidationIssue {
  std::string kind;    // stable machine-readable tag
  std::string detail;  // human-oriented description
  bool operator==(const ValidationIssue&) const = default;
};

struct ValidationReport {
  std::vector<ValidationIssue> violations;
  std::vector<ValidationIssue> warnings;
  bool valid() const { return violations.empty(); }
};

// Checks that every part is a face-closed subcomplex of `total` and that the
// parts cover `total`.  Empty parts are legal but reported as warnings, since
// one empty part kills every interaction tuple.
ValidationReport validate_interaction_space(const SimplicialComplex& total,
                                            const std::vector<SimplicialComplex>& parts);
ValidationReport validate_interaction_space(const InteractionSpace& space);

// An ordered tuple (s_1, ..., s_n) with s_i drawn from part i.  Tuples are
// the basis monomials of the interaction chain groups; only interacting
// tuples (common vertex intersection nonempty) survive the quotient.
struct InteractionTuple {
  std::vector<Simplex> members;

  int degree() const;
  std::string to_string() const;
  bool operator==(const InteractionTuple&) const = default;
};

// Memberwise comparison, each member compared graded-lexicographically.
bool tuple_less(const InteractionTuple& a, const InteractionTuple& b);

struct TupleLess {
  bool operator()(const InteractionTuple& a, const InteractionTuple& b) const {
    return tuple_less(a, b);
  }
};

struct TupleHash {
  std::size_t operator()(const InteractionTuple& t) const;
};

bool tuple_interacts(const std::vector<Simplex>& members);
std::vector<int> common_vertices(const std::vector<Simplex>& members);

// All interacting tuples of the given total degree, in canonical order.
std::vector<InteractionTuple> enumerate_interacting_tuples(const InteractionSpace& space,
                                                           int degree);

// Visits every interacting tuple of every degree once (no truncation), in an
// unspecified order.
void visit_interacting_tuples(const InteractionSpace& space,
                              const std::function<void(const InteractionTuple&)>& fn);

// Alternating count sum_t (-1)^{degree(t)} over all interacting tuples.
Int signed_interacting_tuple_count(const InteractionSpace& space);

// Largest degree any interacting tuple of this space can have.
int max_tuple_degree(const InteractionSpace& space);

}  // namespace itop

#include "itop/chain.hpp"

#include <functional>
#include <stdexcept>

namespace itop {

void FormalSum::add(const InteractionTuple& t, const Rat& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(t, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

FormalSum boundary_of_tuple(const InteractionTuple& t) {
  if (!tuple_interacts(t.members))
    throw std::invalid_argument("boundary_of_tuple: tuple does not interact");
  FormalSum out;
  int koszul = 1;
  for (std::size_t i = 0; i < t.members.size(); ++i) {
    const Simplex& s = t.members[i];
    if (s.dim() >= 1) {
      for (int r = 0; r <= s.dim(); ++r) {
        InteractionTuple face = t;
        face.members[i] = s.face(r);
        if (tuple_interacts(face.members))
          out.add(face, Rat(koszul * (r % 2 == 0 ? 1 : -1)));
      }
    }
    if (s.dim() % 2 == 1) koszul = -koszul;
  }
  return out;
}

long long ChainComplexRep::basis_size(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(bases.size())) return 0;
  return static_cast<long long>(bases[degree].size());
}

std::optional<int> ChainComplexRep::index_of(int degree, const InteractionTuple& t) const {
  if (degree < 0 || degree >= static_cast<int>(index.size())) return std::nullopt;
  auto it = index[degree].find(t);
  if (it == index[degree].end()) return std::nullopt;
  return it->second;
}

namespace {

// Shared assembly: fills boundary matrices for the given bases, with an
// optional filter deleting boundary terms (used by the relative complex), and
// verifies d∘d = 0 over the rationals.
ChainComplexRep assemble(int p_max, std::vector<std::vector<InteractionTuple>> bases,
                         const std::function<bool(const InteractionTuple&)>& keep) {
  ChainComplexRep rep;
  rep.p_max = p_max;
  rep.bases = std::move(bases);
  rep.index.resize(rep.bases.size());
  for (std::size_t p = 0; p < rep.bases.size(); ++p)
    for (int i = 0; i < static_cast<int>(rep.bases[p].size()); ++i)
      rep.index[p].emplace(rep.bases[p][i], i);

  rep.boundaries.resize(rep.bases.size());
  rep.boundaries[0] = SparseMatrix(0, static_cast<int>(rep.bases[0].size()));
  for (std::size_t p = 1; p < rep.bases.size(); ++p) {
    SparseMatrix m(static_cast<int>(rep.bases[p - 1].size()),
                   static_cast<int>(rep.bases[p].size()));
    for (int j = 0; j < static_cast<int>(rep.bases[p].size()); ++j) {
      FormalSum b = boundary_of_tuple(rep.bases[p][j]);
      for (const auto& [face, coeff] : b.terms()) {
        if (!keep(face)) continue;
        auto row = rep.index_of(static_cast<int>(p) - 1, face);
        if (!row)
          throw std::logic_error("chain complex: boundary term missing from basis: " +
                                 face.to_string());
        m.add(*row, j, coeff);
      }
    }
    rep.boundaries[p] = std::move(m);
  }

  for (std::size_t p = 2; p < rep.boundaries.size(); ++p)
    if (!rep.boundaries[p - 1].multiplied_by(rep.boundaries[p]).is_zero())
      throw std::logic_error("chain complex: d∘d != 0 at degree " + std::to_string(p));
  return rep;
}

}  // namespace

ChainComplexRep build_chain_complex(const InteractionSpace& space, int p_max) {
  if (p_max < 0) throw std::invalid_argument("build_chain_complex: p_max must be >= 0");
  std::vector<std::vector<InteractionTuple>> bases(p_max + 2);
  for (int p = 0; p <= p_max + 1; ++p) bases[p] = enumerate_interacting_tuples(space, p);
  return assemble(p_max, std::move(bases), [](const InteractionTuple&) { return true; });
}

bool tuple_in_subspace(const InteractionTuple& t, const InteractionSpace& sub) {
  if (t.members.size() != sub.arity()) return false;
  for (std::size_t i = 0; i < t.members.size(); ++i)
    if (!sub.parts[i].contains(t.members[i])) return false;
  return true;
}

ChainComplexRep build_relative_complex(const InteractionSpace& space, const InteractionSpace& sub,
                                       int p_max) {
  if (p_max < 0) throw std::invalid_argument("build_relative_complex: p_max must be >= 0");
  if (sub.arity() != space.arity())
    throw std::invalid_argument("build_relative_complex: part counts differ");
  for (std::size_t i = 0; i < space.arity(); ++i)
    if (!sub.parts[i].is_subcomplex_of(space.parts[i]))
      throw std::invalid_argument("build_relative_complex: part " + std::to_string(i) +
                                  " of the sub-covering is not contained in the ambient part");
  if (!sub.total.is_subcomplex_of(space.total))
    throw std::invalid_argument("build_relative_complex: sub complex not contained in total");

  std::vector<std::vector<InteractionTuple>> bases(p_max + 2);
  for (int p = 0; p <= p_max + 1; ++p) {
    for (InteractionTuple& t : enumerate_interacting_tuples(space, p))
      if (!tuple_in_subspace(t, sub)) bases[p].push_back(std::move(t));
  }
  return assemble(p_max, std::move(bases),
                  [&sub](const InteractionTuple& t) { return !tuple_in_subspace(t, sub); });
}

}  // namespace itop

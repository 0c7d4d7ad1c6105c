#include "itop/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace itop {

namespace {

void require_field(const CoefficientRing& ring, const char* where) {
  if (!ring.is_field()) throw std::invalid_argument(std::string(where) + ": field required");
}

std::vector<std::vector<Int>> no_torsion(int p_max) {
  return std::vector<std::vector<Int>>(p_max + 1);
}

}  // namespace

std::vector<long long> betti_of_complex(const ChainComplexRep& cc, const CoefficientRing& field) {
  require_field(field, "betti_of_complex");
  std::vector<long long> ranks(cc.boundaries.size(), 0);
  for (std::size_t p = 0; p < cc.boundaries.size(); ++p)
    ranks[p] = rank(cc.boundaries[p], field);
  std::vector<long long> out(cc.p_max + 1, 0);
  for (int p = 0; p <= cc.p_max; ++p) out[p] = cc.basis_size(p) - ranks[p] - ranks[p + 1];
  return out;
}

std::vector<long long> cobetti_of_complex(const ChainComplexRep& cc,
                                          const CoefficientRing& field) {
  require_field(field, "cobetti_of_complex");
  std::vector<long long> ranks(cc.boundaries.size(), 0);
  for (std::size_t p = 0; p < cc.boundaries.size(); ++p)
    ranks[p] = rank(cc.boundaries[p].transposed(), field);
  std::vector<long long> out(cc.p_max + 1, 0);
  for (int p = 0; p <= cc.p_max; ++p) out[p] = cc.basis_size(p) - ranks[p] - ranks[p + 1];
  return out;
}

std::pair<std::vector<long long>, std::vector<std::vector<Int>>> integer_homology_of_complex(
    const ChainComplexRep& cc) {
  std::vector<std::vector<Int>> factors(cc.boundaries.size());
  for (std::size_t p = 0; p < cc.boundaries.size(); ++p)
    factors[p] = smith_normal_form(cc.boundaries[p]);
  std::vector<long long> betti(cc.p_max + 1, 0);
  std::vector<std::vector<Int>> torsion(cc.p_max + 1);
  for (int p = 0; p <= cc.p_max; ++p) {
    betti[p] = cc.basis_size(p) - static_cast<long long>(factors[p].size()) -
               static_cast<long long>(factors[p + 1].size());
    for (const Int& f : factors[p + 1])
      if (f > 1) torsion[p].push_back(f);
  }
  return {std::move(betti), std::move(torsion)};
}

HomologySummary betti(const InteractionSpace& space, int p_max, const CoefficientRing& field) {
  require_field(field, "betti");
  ChainComplexRep cc = build_chain_complex(space, p_max);
  HomologySummary s;
  s.ring = field;
  s.p_max = p_max;
  s.betti = betti_of_complex(cc, field);
  s.torsion = no_torsion(p_max);
  s.euler = signed_interacting_tuple_count(space);
  return s;
}

HomologySummary integer_homology(const InteractionSpace& space, int p_max) {
  ChainComplexRep cc = build_chain_complex(space, p_max);
  auto [b, t] = integer_homology_of_complex(cc);
  HomologySummary s;
  s.ring = CoefficientRing::integers();
  s.p_max = p_max;
  s.betti = std::move(b);
  s.torsion = std::move(t);
  s.euler = signed_interacting_tuple_count(space);
  return s;
}

Int interaction_euler(const InteractionSpace& space) {
  return signed_interacting_tuple_count(space);
}

Int wu_characteristic(const SimplicialComplex& k) {
  if (k.empty()) throw std::invalid_argument("wu_characteristic: empty complex");
  long long even = 0, odd = 0;
  const auto& simplices = k.simplices();
  for (const Simplex& s : simplices)
    for (const Simplex& t : simplices) {
      if (!vertex_sets_intersect(s, t)) continue;
      if ((s.dim() + t.dim()) % 2 == 0)
        ++even;
      else
        ++odd;
    }
  return Int(even) - Int(odd);
}

HomologySummary cohomology_betti(const InteractionSpace& space, int p_max,
                                 const CoefficientRing& field) {
  require_field(field, "cohomology_betti");
  ChainComplexRep cc = build_chain_complex(space, p_max);
  HomologySummary s;
  s.ring = field;
  s.p_max = p_max;
  s.betti = cobetti_of_complex(cc, field);
  s.torsion = no_torsion(p_max);
  s.euler = signed_interacting_tuple_count(space);
  return s;
}

HomologySummary relative_betti(const InteractionSpace& space, const InteractionSpace& sub,
                               int p_max, const CoefficientRing& field) {
  require_field(field, "relative_betti");
  ChainComplexRep cc = build_relative_complex(space, sub, p_max);
  HomologySummary s;
  s.ring = field;
  s.p_max = p_max;
  s.betti = betti_of_complex(cc, field);
  s.torsion = no_torsion(p_max);
  s.euler = signed_interacting_tuple_count(space) - signed_interacting_tuple_count(sub);
  return s;
}

HomologySummary relative_integer_homology(const InteractionSpace& space,
                                          const InteractionSpace& sub, int p_max) {
  ChainComplexRep cc = build_relative_complex(space, sub, p_max);
  auto [b, t] = integer_homology_of_complex(cc);
  HomologySummary s;
  s.ring = CoefficientRing::integers();
  s.p_max = p_max;
  s.betti = std::move(b);
  s.torsion = std::move(t);
  s.euler = signed_interacting_tuple_count(space) - signed_interacting_tuple_count(sub);
  return s;
}

HomologyCoordinates::HomologyCoordinates(const ChainComplexRep& cc, const CoefficientRing& field) {
  require_field(field, "HomologyCoordinates");
  degrees_.reserve(cc.p_max + 1);
  for (int p = 0; p <= cc.p_max; ++p) {
    const int rows = static_cast<int>(cc.basis_size(p));
    DegreeData dd{ColumnReducer(rows, field, false), {}, {}};
    const SparseMatrix& d_in = cc.boundaries[p + 1];
    for (int c = 0; c < d_in.cols(); ++c) dd.reducer.add_column(d_in.column_vec(c));
    for (const SparseVec& z : kernel_basis(cc.boundaries[p], field)) {
      const int id = dd.reducer.columns_added();
      if (dd.reducer.add_column(z)) {
        dd.rep_ids.push_back(id);
        dd.reps.push_back(dd.reducer.reduced_column(id));
      }
    }
    degrees_.push_back(std::move(dd));
  }
}

int HomologyCoordinates::dim(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(degrees_.size())) return 0;
  return static_cast<int>(degrees_[degree].reps.size());
}

const std::vector<SparseVec>& HomologyCoordinates::representatives(int degree) const {
  return degrees_.at(degree).reps;
}

std::optional<std::vector<Rat>> HomologyCoordinates::coordinates(int degree,
                                                                 const SparseVec& cycle) const {
  const DegreeData& dd = degrees_.at(degree);
  auto a = dd.reducer.express_in_reduced(cycle);
  if (!a) return std::nullopt;
  std::vector<Rat> out;
  out.reserve(dd.rep_ids.size());
  for (int id : dd.rep_ids) out.push_back((*a)[id]);
  return out;
}

bool ExactnessReport::all_exact() const {
  for (const auto& n : nodes)
    if (!n.exact) return false;
  return true;
}

namespace {

// Re-indexes a chain supported on `from` bases into `to` bases at the same
// degree; every supported tuple must exist in `to`.
SparseVec transport(const SparseVec& v, int degree, const ChainComplexRep& from,
                    const ChainComplexRep& to, const char* what) {
  SparseVec out;
  out.dim = static_cast<int>(to.basis_size(degree));
  for (const auto& [i, val] : v.entries) {
    auto idx = to.index_of(degree, from.bases[degree][i]);
    if (!idx) throw std::logic_error(std::string(what) + ": tuple missing from target basis");
    out.entries.push_back({*idx, val});
  }
  std::sort(out.entries.begin(), out.entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

SparseMatrix coords_matrix(int target_dim, const std::vector<std::vector<Rat>>& columns) {
  SparseMatrix m(target_dim, static_cast<int>(columns.size()));
  for (int j = 0; j < static_cast<int>(columns.size()); ++j)
    for (int i = 0; i < static_cast<int>(columns[j].size()); ++i)
      m.add(i, j, columns[j][i]);
  return m;
}

struct NodeCheck {
  const SparseMatrix* f;  // incoming
  const SparseMatrix* g;  // outgoing
};

}  // namespace

ExactnessReport les_check(const InteractionSpace& space, const InteractionSpace& sub, int p_max,
                          const CoefficientRing& field) {
  require_field(field, "les_check");
  if (p_max < 0) throw std::invalid_argument("les_check: p_max must be >= 0");
  const int P = p_max + 1;
  ChainComplexRep cc_sub = build_chain_complex(sub, P);
  ChainComplexRep cc_tot = build_chain_complex(space, P);
  ChainComplexRep cc_rel = build_relative_complex(space, sub, P);
  HomologyCoordinates h_sub(cc_sub, field);
  HomologyCoordinates h_tot(cc_tot, field);
  HomologyCoordinates h_rel(cc_rel, field);

  std::vector<SparseMatrix> incl(P + 1), proj(P + 1), conn(P + 1);
  for (int p = 0; p <= P; ++p) {
    {  // H_p(sub) -> H_p(total): re-index the representative cycles
      std::vector<std::vector<Rat>> cols;
      for (const SparseVec& rep : h_sub.representatives(p)) {
        SparseVec z = transport(rep, p, cc_sub, cc_tot, "inclusion map");
        auto c = h_tot.coordinates(p, z);
        if (!c) throw std::logic_error("inclusion map: image is not a cycle");
        cols.push_back(std::move(*c));
      }
      incl[p] = coords_matrix(h_tot.dim(p), cols);
    }
    {  // H_p(total) -> H_p(relative): delete the terms inside `sub`
      std::vector<std::vector<Rat>> cols;
      for (const SparseVec& rep : h_tot.representatives(p)) {
        SparseVec z;
        z.dim = static_cast<int>(cc_rel.basis_size(p));
        for (const auto& [i, val] : rep.entries) {
          auto idx = cc_rel.index_of(p, cc_tot.bases[p][i]);
          if (idx) z.entries.push_back({*idx, val});
        }
        std::sort(z.entries.begin(), z.entries.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        auto c = h_rel.coordinates(p, z);
        if (!c) throw std::logic_error("quotient map: image is not a relative cycle");
        cols.push_back(std::move(*c));
      }
      proj[p] = coords_matrix(h_rel.dim(p), cols);
    }
    if (p == 0) {
      conn[0] = SparseMatrix(0, h_rel.dim(0));  // lands in H_{-1} = 0
    } else {  // H_p(relative) -> H_{p-1}(sub): lift, take the ambient boundary
      std::vector<std::vector<Rat>> cols;
      for (const SparseVec& rep : h_rel.representatives(p)) {
        SparseVec lift = transport(rep, p, cc_rel, cc_tot, "connecting map");
        SparseVec w = cc_tot.boundaries[p].apply(lift);
        SparseVec z;
        z.dim = static_cast<int>(cc_sub.basis_size(p - 1));
        for (const auto& [i, val] : w.entries) {
          auto idx = cc_sub.index_of(p - 1, cc_tot.bases[p - 1][i]);
          if (!idx)
            throw std::logic_error("connecting map: boundary escapes the sub-covering");
          z.entries.push_back({*idx, val});
        }
        std::sort(z.entries.begin(), z.entries.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        auto c = h_sub.coordinates(p - 1, z);
        if (!c) throw std::logic_error("connecting map: image is not a cycle");
        cols.push_back(std::move(*c));
      }
      conn[p] = coords_matrix(h_sub.dim(p - 1), cols);
    }
  }

  ExactnessReport report;
  report.p_max = p_max;
  for (int p = 0; p <= p_max; ++p) {
    const NodeCheck checks[3] = {
        {&conn[p + 1], &incl[p]},  // at H_p(sub)
        {&incl[p], &proj[p]},      // at H_p(total)
        {&proj[p], &conn[p]},      // at H_p(relative)
    };
    const char* names[3] = {"sub", "total", "relative"};
    for (int k = 0; k < 3; ++k) {
      const SparseMatrix& f = *checks[k].f;
      const SparseMatrix& g = *checks[k].g;
      if (f.rows() != g.cols())
        throw std::logic_error("les_check: map shapes disagree at a node");
      ExactnessNode node;
      node.degree = p;
      node.node = names[k];
      node.incoming_rank = rank(f, field);
      node.kernel_dim = g.cols() - rank(g, field);
      node.exact =
          is_zero_over(g.multiplied_by(f), field) && node.incoming_rank == node.kernel_dim;
      report.nodes.push_back(std::move(node));
    }
  }
  return report;
}

}  // namespace itop

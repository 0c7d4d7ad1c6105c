#include "itop/space.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace itop {

InteractionSpace self_covering(const SimplicialComplex& k, std::size_t n) {
  if (n == 0) throw std::invalid_argument("self_covering: need at least one part");
  InteractionSpace s;
  s.total = k;
  s.parts.assign(n, k);
  return s;
}

ValidationReport validate_interaction_space(const SimplicialComplex& total,
                                            const std::vector<SimplicialComplex>& parts) {
  ValidationReport report;
  if (parts.empty()) {
    report.violations.push_back({"no_parts", "covering has no parts"});
    return report;
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& part = parts[i];
    for (const Simplex& s : part.simplices()) {
      if (!total.contains(s))
        report.violations.push_back(
            {"part_not_subcomplex",
             "part " + std::to_string(i) + ": simplex " + s.to_string() + " not in total complex"});
      for (int r = 0; s.dim() >= 1 && r <= s.dim(); ++r) {
        Simplex f = s.face(r);
        if (!part.contains(f))
          report.violations.push_back({"part_not_face_closed",
                                       "part " + std::to_string(i) + ": face " + f.to_string() +
                                           " of " + s.to_string() + " missing"});
      }
    }
    if (part.empty())
      report.warnings.push_back(
          {"empty_part",
           "part " + std::to_string(i) + " is empty; no interacting tuples exist"});
  }
  for (const Simplex& s : total.simplices()) {
    bool covered = false;
    for (const auto& part : parts)
      if (part.contains(s)) {
        covered = true;
        break;
      }
    if (!covered)
      report.violations.push_back(
          {"covering_gap", "simplex " + s.to_string() + " not covered by any part"});
  }
  return report;
}

ValidationReport validate_interaction_space(const InteractionSpace& space) {
  return validate_interaction_space(space.total, space.parts);
}

int InteractionTuple::degree() const {
  int d = 0;
  for (const Simplex& s : members) d += s.dim();
  return d;
}

std::string InteractionTuple::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ",";
    out += members[i].to_string();
  }
  out += ")";
  return out;
}

bool tuple_less(const InteractionTuple& a, const InteractionTuple& b) {
  const std::size_t n = std::min(a.members.size(), b.members.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (simplex_less(a.members[i], b.members[i])) return true;
    if (simplex_less(b.members[i], a.members[i])) return false;
  }
  return a.members.size() < b.members.size();
}

std::size_t TupleHash::operator()(const InteractionTuple& t) const {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::size_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  for (const Simplex& s : t.members) {
    mix(static_cast<std::size_t>(s.dim() + 2));
    for (int v : s.vertices()) mix(static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull);
  }
  return h;
}

std::vector<int> common_vertices(const std::vector<Simplex>& members) {
  if (members.empty()) return {};
  std::vector<int> acc = members[0].vertices();
  for (std::size_t i = 1; i < members.size() && !acc.empty(); ++i)
    acc = vertex_intersection(acc, members[i].vertices());
  return acc;
}

bool tuple_interacts(const std::vector<Simplex>& members) {
  if (members.empty()) return false;
  return !common_vertices(members).empty();
}

namespace {

// Per-part lookup tables: simplex ids grouped by dimension, and for each
// vertex the ids of the simplices containing it, again grouped by dimension.
struct PartIndex {
  const SimplicialComplex* part = nullptr;
  std::vector<std::vector<int>> by_dim;
  std::unordered_map<int, std::vector<std::vector<int>>> star;
  int top_dim = -1;

  explicit PartIndex(const SimplicialComplex& p) : part(&p), top_dim(p.dim()) {
    by_dim.assign(top_dim + 1, {});
    const auto& simplices = p.simplices();
    for (int id = 0; id < static_cast<int>(simplices.size()); ++id) {
      const Simplex& s = simplices[id];
      by_dim[s.dim()].push_back(id);
      for (int v : s.vertices()) {
        auto it = star.find(v);
        if (it == star.end()) it = star.emplace(v, std::vector<std::vector<int>>(top_dim + 1)).first;
        it->second[s.dim()].push_back(id);
      }
    }
  }

  const Simplex& simplex(int id) const { return part->simplices()[id]; }
};

class TupleWalker {
 public:
  explicit TupleWalker(const InteractionSpace& space) : space_(space) {
    idx_.reserve(space.arity());
    for (const auto& part : space.parts) idx_.emplace_back(part);
    suffix_max_.assign(space.arity() + 1, 0);
    for (int i = static_cast<int>(space.arity()) - 1; i >= 0; --i)
      suffix_max_[i] = suffix_max_[i + 1] + std::max(0, idx_[i].top_dim);
    members_.resize(space.arity());
  }

  // Calls fn once per interacting tuple of the given degree (or of every
  // degree when degree < 0).
  void walk(int degree, const std::function<void(const std::vector<const Simplex*>&)>& fn) {
    if (space_.arity() == 0) return;
    for (const auto& part : space_.parts)
      if (part.empty()) return;
    if (degree >= 0 && degree > suffix_max_[0]) return;
    fn_ = &fn;
    descend(0, degree, {});
    fn_ = nullptr;
  }

 private:
  void descend(std::size_t i, int remaining, const std::vector<int>& common) {
    const std::size_t n = space_.arity();
    if (i == n) {
      (*fn_)(members_);
      return;
    }
    const PartIndex& pi = idx_[i];
    int lo = 0, hi = pi.top_dim;
    if (remaining >= 0) {
      hi = std::min(hi, remaining);
      lo = std::max(0, remaining - suffix_max_[i + 1]);
    }
    for (int p = lo; p <= hi; ++p) {
      const std::vector<int>* candidates = nullptr;
      std::vector<int> scratch;
      if (i == 0) {
        candidates = &pi.by_dim[p];
      } else {
        for (int v : common) {
          auto it = pi.star.find(v);
          if (it != pi.star.end())
            scratch.insert(scratch.end(), it->second[p].begin(), it->second[p].end());
        }
        std::sort(scratch.begin(), scratch.end());
        scratch.erase(std::unique(scratch.begin(), scratch.end()), scratch.end());
        candidates = &scratch;
      }
      for (int id : *candidates) {
        const Simplex& s = pi.simplex(id);
        std::vector<int> next_common =
            i == 0 ? s.vertices() : vertex_intersection(common, s.vertices());
        if (next_common.empty()) continue;
        members_[i] = &s;
        descend(i + 1, remaining < 0 ? remaining : remaining - p, next_common);
      }
    }
  }

  const InteractionSpace& space_;
  std::vector<PartIndex> idx_;
  std::vector<int> suffix_max_;
  std::vector<const Simplex*> members_;
  const std::function<void(const std::vector<const Simplex*>&)>* fn_ = nullptr;
};

InteractionTuple materialize(const std::vector<const Simplex*>& members) {
  InteractionTuple t;
  t.members.reserve(members.size());
  for (const Simplex* s : members) t.members.push_back(*s);
  return t;
}

}  // namespace

std::vector<InteractionTuple> enumerate_interacting_tuples(const InteractionSpace& space,
                                                           int degree) {
  if (degree < 0) throw std::invalid_argument("enumerate_interacting_tuples: negative degree");
  std::vector<InteractionTuple> out;
  TupleWalker walker(space);
  walker.walk(degree, [&out](const std::vector<const Simplex*>& m) { out.push_back(materialize(m)); });
  std::sort(out.begin(), out.end(), TupleLess{});
  return out;
}

void visit_interacting_tuples(const InteractionSpace& space,
                              const std::function<void(const InteractionTuple&)>& fn) {
  TupleWalker walker(space);
  walker.walk(-1, [&fn](const std::vector<const Simplex*>& m) { fn(materialize(m)); });
}

Int signed_interacting_tuple_count(const InteractionSpace& space) {
  long long even = 0, odd = 0;
  TupleWalker walker(space);
  walker.walk(-1, [&](const std::vector<const Simplex*>& m) {
    int d = 0;
    for (const Simplex* s : m) d += s->dim();
    if (d % 2 == 0)
      ++even;
    else
      ++odd;
  });
  return Int(even) - Int(odd);
}

int max_tuple_degree(const InteractionSpace& space) {
  if (space.arity() == 0) return -1;
  int total = 0;
  for (const auto& part : space.parts) {
    if (part.empty()) return -1;
    total += part.dim();
  }
  return total;
}

}  // namespace itop

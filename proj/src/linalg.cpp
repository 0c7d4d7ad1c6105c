#include "itop/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace itop {

CoefficientRing CoefficientRing::prime_field(long long p) {
  if (p < 2 || p >= (1LL << 31)) throw std::invalid_argument("prime_field: prime out of range");
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("prime_field: " + std::to_string(p) + " is not prime");
  return {Kind::prime_field, p};
}

std::string CoefficientRing::name() const {
  switch (kind) {
    case Kind::rationals:
      return "Q";
    case Kind::prime_field:
      return "GF(" + std::to_string(prime) + ")";
    case Kind::integers:
      return "Z";
  }
  return "?";
}

void SparseVec::add(int index, const Rat& value) {
  if (index < 0 || index >= dim) throw std::out_of_range("SparseVec::add: index out of range");
  if (value == 0) return;
  auto it = std::lower_bound(entries.begin(), entries.end(), index,
                             [](const auto& e, int i) { return e.first < i; });
  if (it != entries.end() && it->first == index) {
    it->second += value;
    if (it->second == 0) entries.erase(it);
  } else {
    entries.insert(it, {index, value});
  }
}

Rat SparseVec::at(int index) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), index,
                             [](const auto& e, int i) { return e.first < i; });
  if (it != entries.end() && it->first == index) return it->second;
  return Rat(0);
}

std::vector<Rat> SparseVec::to_dense() const {
  std::vector<Rat> out(dim, Rat(0));
  for (const auto& [i, v] : entries) out[i] = v;
  return out;
}

SparseVec SparseVec::unit(int dim, int index) {
  SparseVec v;
  v.dim = dim;
  v.add(index, Rat(1));
  return v;
}

SparseMatrix::SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), columns_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("SparseMatrix: negative size");
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

bool SparseMatrix::is_zero() const { return nnz() == 0; }

void SparseMatrix::add(int row, int col, const Rat& value) {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
    throw std::out_of_range("SparseMatrix::add: index out of range");
  if (value == 0) return;
  auto& c = columns_[col];
  auto it = std::lower_bound(c.begin(), c.end(), row,
                             [](const auto& e, int r) { return e.first < r; });
  if (it != c.end() && it->first == row) {
    it->second += value;
    if (it->second == 0) c.erase(it);
  } else {
    c.insert(it, {row, value});
  }
}

Rat SparseMatrix::at(int row, int col) const {
  const auto& c = columns_.at(col);
  auto it = std::lower_bound(c.begin(), c.end(), row,
                             [](const auto& e, int r) { return e.first < r; });
  if (it != c.end() && it->first == row) return it->second;
  return Rat(0);
}

SparseVec SparseMatrix::column_vec(int c) const {
  SparseVec v;
  v.dim = rows_;
  v.entries = columns_.at(c);
  return v;
}

void SparseMatrix::set_column(int c, const SparseVec& v) {
  if (v.dim != rows_) throw std::invalid_argument("SparseMatrix::set_column: dimension mismatch");
  columns_.at(c) = v.entries;
}

SparseMatrix SparseMatrix::transposed() const {
  SparseMatrix t(cols_, rows_);
  for (int c = 0; c < cols_; ++c)
    for (const auto& [r, v] : columns_[c]) t.columns_[r].push_back({c, v});
  return t;
}

SparseMatrix SparseMatrix::multiplied_by(const SparseMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("SparseMatrix::multiplied_by: shape mismatch");
  SparseMatrix out(rows_, rhs.cols_);
  std::vector<Rat> acc(rows_, Rat(0));
  std::vector<int> touched;
  for (int c = 0; c < rhs.cols_; ++c) {
    for (const auto& [k, v] : rhs.columns_[c]) {
      for (const auto& [r, w] : columns_[k]) {
        if (acc[r] == 0) touched.push_back(r);
        acc[r] += v * w;
      }
    }
    std::sort(touched.begin(), touched.end());
    for (int r : touched) {
      if (acc[r] != 0) out.columns_[c].push_back({r, acc[r]});
      acc[r] = 0;
    }
    touched.clear();
  }
  return out;
}

SparseVec SparseMatrix::apply(const SparseVec& x) const {
  if (x.dim != cols_) throw std::invalid_argument("SparseMatrix::apply: dimension mismatch");
  SparseVec out;
  out.dim = rows_;
  std::vector<Rat> acc(rows_, Rat(0));
  std::vector<int> touched;
  for (const auto& [k, v] : x.entries) {
    for (const auto& [r, w] : columns_[k]) {
      if (acc[r] == 0) touched.push_back(r);
      acc[r] += v * w;
    }
  }
  std::sort(touched.begin(), touched.end());
  for (int r : touched)
    if (acc[r] != 0) out.entries.push_back({r, acc[r]});
  return out;
}

bool SparseMatrix::integer_entries() const {
  for (const auto& c : columns_)
    for (const auto& [r, v] : c)
      if (boost::multiprecision::denominator(v) != 1) return false;
  return true;
}

std::vector<std::vector<Rat>> SparseMatrix::to_dense() const {
  std::vector<std::vector<Rat>> out(rows_, std::vector<Rat>(cols_, Rat(0)));
  for (int c = 0; c < cols_; ++c)
    for (const auto& [r, v] : columns_[c]) out[r][c] = v;
  return out;
}

SparseMatrix SparseMatrix::identity(int n) {
  SparseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.columns_[i].push_back({i, Rat(1)});
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<long long>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  SparseMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw std::invalid_argument("SparseMatrix::from_dense: ragged rows");
    for (int j = 0; j < c; ++j)
      if (rows[i][j] != 0) m.add(i, j, Rat(rows[i][j]));
  }
  return m;
}

namespace {

struct RatOps {
  using Scalar = Rat;
  bool is_zero(const Scalar& a) const { return a == 0; }
  Scalar from_rat(const Rat& r) const { return r; }
  Rat to_rat(const Scalar& a) const { return a; }
  Scalar neg(const Scalar& a) const { return -a; }
  Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
  Scalar div(const Scalar& a, const Scalar& b) const { return a / b; }
  Scalar sub_mul(const Scalar& a, const Scalar& c, const Scalar& b) const { return a - c * b; }
};

struct FpOps {
  using Scalar = long long;  // canonical residue in [0, p)
  long long p = 2;

  bool is_zero(Scalar a) const { return a == 0; }
  Scalar norm(long long a) const {
    a %= p;
    return a < 0 ? a + p : a;
  }
  Scalar mul(Scalar a, Scalar b) const { return (a * b) % p; }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p - a; }
  Scalar pow(Scalar base, long long e) const {
    Scalar r = 1 % p;
    while (e > 0) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
  Scalar inv(Scalar a) const {
    if (a == 0) throw std::invalid_argument("GF(p): division by zero");
    return pow(a, p - 2);
  }
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }
  Scalar sub_mul(Scalar a, Scalar c, Scalar b) const { return norm(a - mul(c, b)); }
  Scalar from_rat(const Rat& r) const {
    const Int num = boost::multiprecision::numerator(r) % p;
    const Int den = boost::multiprecision::denominator(r) % p;
    const Scalar n = norm(num.convert_to<long long>());
    const Scalar d = norm(den.convert_to<long long>());
    if (d == 0)
      throw std::invalid_argument("GF(" + std::to_string(p) + "): denominator not invertible");
    return mul(n, inv(d));
  }
  Rat to_rat(Scalar a) const { return Rat(a); }
};

template <class Ops>
using Col = std::vector<std::pair<int, typename Ops::Scalar>>;

// result = a - c * b, all columns sorted by row index.
template <class Ops>
Col<Ops> axpy(const Ops& ops, const Col<Ops>& a, const typename Ops::Scalar& c,
              const Col<Ops>& b) {
  Col<Ops> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back({b[j].first, ops.neg(ops.mul(c, b[j].second))});
      ++j;
    } else {
      auto v = ops.sub_mul(a[i].second, c, b[j].second);
      if (!ops.is_zero(v)) out.push_back({a[i].first, v});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

struct ColumnReducer::Impl {
  virtual ~Impl() = default;
  virtual bool add(const SparseVec& column) = 0;
  virtual int rank() const = 0;
  virtual int added() const = 0;
  virtual bool survived(int k) const = 0;
  virtual SparseVec reduced_column(int k) const = 0;
  virtual SparseVec combination(int k) const = 0;
  virtual std::optional<std::vector<Rat>> express_reduced(const SparseVec& v) const = 0;
  virtual std::optional<std::vector<Rat>> express_original(const SparseVec& v) const = 0;
};

namespace {

template <class Ops>
struct ReducerImpl final : ColumnReducer::Impl {
  Ops ops;
  int rows;
  bool track;
  int rank_ = 0;
  std::vector<Col<Ops>> reduced;
  std::vector<Col<Ops>> combo;  // indexed like `reduced`; entries over original column ids
  std::vector<char> alive;
  std::unordered_map<int, int> pivot_of_row;

  ReducerImpl(const Ops& o, int r, bool t) : ops(o), rows(r), track(t) {}

  Col<Ops> to_col(const SparseVec& v) const {
    if (v.dim != rows) throw std::invalid_argument("ColumnReducer: dimension mismatch");
    Col<Ops> c;
    c.reserve(v.entries.size());
    for (const auto& [r, value] : v.entries) {
      auto s = ops.from_rat(value);
      if (!ops.is_zero(s)) c.push_back({r, s});
    }
    return c;
  }

  SparseVec to_vec(const Col<Ops>& c, int dim) const {
    SparseVec v;
    v.dim = dim;
    v.entries.reserve(c.size());
    for (const auto& [r, s] : c) v.entries.push_back({r, ops.to_rat(s)});
    return v;
  }

  bool add(const SparseVec& column) override {
    Col<Ops> c = to_col(column);
    const int id = static_cast<int>(reduced.size());
    Col<Ops> v;
    if (track) v.push_back({id, ops.from_rat(Rat(1))});
    while (!c.empty()) {
      auto it = pivot_of_row.find(c.back().first);
      if (it == pivot_of_row.end()) break;
      const int k = it->second;
      const auto coef = ops.div(c.back().second, reduced[k].back().second);
      c = axpy(ops, c, coef, reduced[k]);
      if (track) v = axpy(ops, v, coef, combo[k]);
    }
    const bool ok = !c.empty();
    if (ok) {
      pivot_of_row.emplace(c.back().first, id);
      ++rank_;
    }
    reduced.push_back(std::move(c));
    if (track) combo.push_back(std::move(v));
    alive.push_back(ok ? 1 : 0);
    return ok;
  }

  int rank() const override { return rank_; }
  int added() const override { return static_cast<int>(reduced.size()); }
  bool survived(int k) const override { return alive.at(k) != 0; }
  SparseVec reduced_column(int k) const override { return to_vec(reduced.at(k), rows); }
  SparseVec combination(int k) const override {
    if (!track) throw std::logic_error("ColumnReducer: combination tracking disabled");
    return to_vec(combo.at(k), added());
  }

  // Reduces a copy of v, recording the coefficient used at each pivot.
  std::optional<std::vector<typename Ops::Scalar>> reduce_against(const SparseVec& v) const {
    Col<Ops> c = to_col(v);
    std::vector<typename Ops::Scalar> coeffs(reduced.size(), ops.from_rat(Rat(0)));
    while (!c.empty()) {
      auto it = pivot_of_row.find(c.back().first);
      if (it == pivot_of_row.end()) return std::nullopt;
      const int k = it->second;
      const auto coef = ops.div(c.back().second, reduced[k].back().second);
      coeffs[k] = coef;
      c = axpy(ops, c, coef, reduced[k]);
    }
    return coeffs;
  }

  std::optional<std::vector<Rat>> express_reduced(const SparseVec& v) const override {
    auto coeffs = reduce_against(v);
    if (!coeffs) return std::nullopt;
    std::vector<Rat> out(coeffs->size(), Rat(0));
    for (std::size_t k = 0; k < coeffs->size(); ++k) out[k] = ops.to_rat((*coeffs)[k]);
    return out;
  }

  std::optional<std::vector<Rat>> express_original(const SparseVec& v) const override {
    if (!track) throw std::logic_error("ColumnReducer: combination tracking disabled");
    auto coeffs = reduce_against(v);
    if (!coeffs) return std::nullopt;
    std::vector<typename Ops::Scalar> out(reduced.size(), ops.from_rat(Rat(0)));
    for (std::size_t k = 0; k < coeffs->size(); ++k) {
      if (ops.is_zero((*coeffs)[k])) continue;
      for (const auto& [j, s] : combo[k])
        out[j] = ops.sub_mul(out[j], ops.neg((*coeffs)[k]), s);  // out[j] += coef * s
    }
    std::vector<Rat> res(out.size(), Rat(0));
    for (std::size_t j = 0; j < out.size(); ++j) res[j] = ops.to_rat(out[j]);
    return res;
  }
};

std::unique_ptr<ColumnReducer::Impl> make_impl(int rows, const CoefficientRing& field,
                                               bool track) {
  switch (field.kind) {
    case CoefficientRing::Kind::rationals:
      return std::make_unique<ReducerImpl<RatOps>>(RatOps{}, rows, track);
    case CoefficientRing::Kind::prime_field:
      return std::make_unique<ReducerImpl<FpOps>>(FpOps{field.prime}, rows, track);
    case CoefficientRing::Kind::integers:
      throw std::invalid_argument("ColumnReducer: field required (Q or GF(p))");
  }
  throw std::invalid_argument("ColumnReducer: unknown ring");
}

}  // namespace

ColumnReducer::ColumnReducer(int rows, const CoefficientRing& field, bool track_combinations)
    : impl_(make_impl(rows, field, track_combinations)) {}
ColumnReducer::~ColumnReducer() = default;
ColumnReducer::ColumnReducer(ColumnReducer&&) noexcept = default;
ColumnReducer& ColumnReducer::operator=(ColumnReducer&&) noexcept = default;

bool ColumnReducer::add_column(const SparseVec& column) { return impl_->add(column); }
int ColumnReducer::rank() const { return impl_->rank(); }
int ColumnReducer::columns_added() const { return impl_->added(); }
bool ColumnReducer::survived(int k) const { return impl_->survived(k); }
SparseVec ColumnReducer::reduced_column(int k) const { return impl_->reduced_column(k); }
SparseVec ColumnReducer::combination(int k) const { return impl_->combination(k); }
std::optional<std::vector<Rat>> ColumnReducer::express_in_reduced(const SparseVec& v) const {
  return impl_->express_reduced(v);
}
std::optional<std::vector<Rat>> ColumnReducer::express_in_original(const SparseVec& v) const {
  return impl_->express_original(v);
}

int rank(const SparseMatrix& m, const CoefficientRing& field) {
  ColumnReducer red(m.rows(), field, false);
  for (int c = 0; c < m.cols(); ++c) red.add_column(m.column_vec(c));
  return red.rank();
}

bool is_zero_over(const SparseMatrix& m, const CoefficientRing& field) {
  if (field.kind != CoefficientRing::Kind::prime_field) return m.is_zero();
  for (int c = 0; c < m.cols(); ++c) {
    for (const auto& [r, val] : m.column(c)) {
      const Int num = boost::multiprecision::numerator(val);
      const Int den = boost::multiprecision::denominator(val);
      if (den % field.prime == 0)
        throw std::invalid_argument("is_zero_over: denominator not invertible mod p");
      if (num % field.prime != 0) return false;
    }
  }
  return true;
}

std::vector<SparseVec> kernel_basis(const SparseMatrix& m, const CoefficientRing& field) {
  ColumnReducer red(m.rows(), field, true);
  std::vector<SparseVec> out;
  for (int c = 0; c < m.cols(); ++c) {
    if (!red.add_column(m.column_vec(c))) {
      SparseVec v = red.combination(c);
      v.dim = m.cols();
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::optional<SparseVec> solve(const SparseMatrix& m, const SparseVec& b,
                               const CoefficientRing& field) {
  if (b.dim != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
  ColumnReducer red(m.rows(), field, true);
  for (int c = 0; c < m.cols(); ++c) red.add_column(m.column_vec(c));
  auto coeffs = red.express_in_original(b);
  if (!coeffs) return std::nullopt;
  SparseVec x;
  x.dim = m.cols();
  for (int j = 0; j < m.cols(); ++j)
    if ((*coeffs)[j] != 0) x.entries.push_back({j, (*coeffs)[j]});
  return x;
}

std::vector<Int> smith_normal_form(const SparseMatrix& m) {
  if (!m.integer_entries())
    throw std::invalid_argument("smith_normal_form: matrix entries must be integers");
  const int R = m.rows();
  const int C = m.cols();
  std::vector<std::vector<Int>> a(R, std::vector<Int>(C, Int(0)));
  for (int c = 0; c < C; ++c)
    for (const auto& [r, v] : m.column(c)) a[r][c] = Int(boost::multiprecision::numerator(v));

  auto negate_row = [&](int i) {
    for (int j = 0; j < C; ++j) a[i][j] = -a[i][j];
  };
  auto swap_cols = [&](int j1, int j2) {
    for (int i = 0; i < R; ++i) std::swap(a[i][j1], a[i][j2]);
  };

  std::vector<Int> factors;
  int t = 0;
  const int limit = std::min(R, C);
  while (t < limit) {
    // Pick the smallest-magnitude nonzero pivot in the trailing block,
    // preferring a unit to keep intermediate entries from growing.
    int pi = -1, pj = -1;
    Int best;
    for (int i = t; i < R && !(pi >= 0 && best == 1); ++i)
      for (int j = t; j < C; ++j) {
        if (a[i][j] == 0) continue;
        Int v = boost::multiprecision::abs(a[i][j]);
        if (pi < 0 || v < best) {
          best = v;
          pi = i;
          pj = j;
          if (best == 1) break;
        }
      }
    if (pi < 0) break;  // trailing block is zero
    std::swap(a[t], a[pi]);
    if (pj != t) swap_cols(t, pj);
    if (a[t][t] < 0) negate_row(t);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < R; ++i) {
        if (a[i][t] == 0) continue;
        Int q = a[i][t] / a[t][t];
        for (int j = t; j < C; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {  // remainder became the smaller pivot
          std::swap(a[t], a[i]);
          if (a[t][t] < 0) negate_row(t);
          clean = false;
        }
      }
      for (int j = t + 1; j < C; ++j) {
        if (a[t][j] == 0) continue;
        Int q = a[t][j] / a[t][t];
        for (int i = t; i < R; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          swap_cols(t, j);
          if (a[t][t] < 0) {
            for (int i = t; i < R; ++i) a[i][t] = -a[i][t];
          }
          clean = false;
        }
      }
    }

    // Divisibility fix-up: the pivot must divide every trailing entry.
    bool divides = true;
    for (int i = t + 1; i < R && divides; ++i)
      for (int j = t + 1; j < C; ++j)
        if (a[i][j] % a[t][t] != 0) {
          for (int jj = t; jj < C; ++jj) a[t][jj] += a[i][jj];
          divides = false;
          break;
        }
    if (!divides) continue;  // re-eliminate at the same t

    factors.push_back(a[t][t]);
    ++t;
  }

  for (std::size_t i = 1; i < factors.size(); ++i)
    if (factors[i] % factors[i - 1] != 0)
      throw std::logic_error("smith_normal_form: divisibility chain broken");
  return factors;
}

}  // namespace itop

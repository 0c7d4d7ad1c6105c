#include "support/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace oracle {

std::vector<std::vector<Rat>> to_dense(const itop::SparseMatrix& m) { return m.to_dense(); }

std::vector<std::vector<Int>> to_dense_int(const itop::SparseMatrix& m) {
  if (!m.integer_entries()) throw std::invalid_argument("to_dense_int: non-integer entries");
  std::vector<std::vector<Int>> out(m.rows(), std::vector<Int>(m.cols(), Int(0)));
  for (int c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : m.column(c)) out[r][c] = Int(boost::multiprecision::numerator(v));
  return out;
}

int dense_rank_q(std::vector<std::vector<Rat>> m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      const Rat factor = m[r][col] / m[rank][col];
      for (int c = col; c < cols; ++c) m[r][c] -= factor * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

namespace {

long long mod_norm(long long a, long long p) {
  a %= p;
  return a < 0 ? a + p : a;
}

long long mod_pow(long long b, long long e, long long p) {
  long long r = 1 % p;
  b = mod_norm(b, p);
  while (e > 0) {
    if (e & 1) r = (r * b) % p;
    b = (b * b) % p;
    e >>= 1;
  }
  return r;
}

long long residue(const Rat& v, long long p) {
  const Int num = boost::multiprecision::numerator(v) % p;
  const Int den = boost::multiprecision::denominator(v) % p;
  const long long n = mod_norm(num.convert_to<long long>(), p);
  const long long d = mod_norm(den.convert_to<long long>(), p);
  if (d == 0) throw std::invalid_argument("residue: denominator divisible by p");
  return (n * mod_pow(d, p - 2, p)) % p;
}

}  // namespace

int dense_rank_gfp(const std::vector<std::vector<Rat>>& m, long long p) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  std::vector<std::vector<long long>> a(rows, std::vector<long long>(cols, 0));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) a[r][c] = residue(m[r][c], p);
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    const long long inv = mod_pow(a[rank][col], p - 2, p);
    for (int r = rank + 1; r < rows; ++r) {
      if (a[r][col] == 0) continue;
      const long long factor = (a[r][col] * inv) % p;
      for (int c = col; c < cols; ++c)
        a[r][c] = mod_norm(a[r][c] - factor * a[rank][c] % p, p);
    }
    ++rank;
  }
  return rank;
}

std::vector<Int> dense_snf(std::vector<std::vector<Int>> m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  std::vector<Int> factors;
  int t = 0;
  while (t < std::min(rows, cols)) {
    // Locate the smallest nonzero entry of the trailing block.
    int pi = -1, pj = -1;
    Int best;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        if (m[i][j] == 0) continue;
        const Int v = boost::multiprecision::abs(m[i][j]);
        if (pi < 0 || v < best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    std::swap(m[t], m[pi]);
    for (int i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);
    if (m[t][t] < 0)
      for (int j = 0; j < cols; ++j) m[t][j] = -m[t][j];

    bool dirty = false;
    for (int i = t + 1; i < rows; ++i) {
      if (m[i][t] == 0) continue;
      const Int q = m[i][t] / m[t][t];
      for (int j = 0; j < cols; ++j) m[i][j] -= q * m[t][j];
      if (m[i][t] != 0) dirty = true;
    }
    for (int j = t + 1; j < cols; ++j) {
      if (m[t][j] == 0) continue;
      const Int q = m[t][j] / m[t][t];
      for (int i = 0; i < rows; ++i) m[i][j] -= q * m[i][t];
      if (m[t][j] != 0) dirty = true;
    }
    if (dirty) continue;  // smaller remainders exist; re-pick the pivot

    bool divides = true;
    for (int i = t + 1; i < rows && divides; ++i)
      for (int j = t + 1; j < cols; ++j)
        if (m[i][j] % m[t][t] != 0) {
          for (int jj = 0; jj < cols; ++jj) m[t][jj] += m[i][jj];
          divides = false;
          break;
        }
    if (!divides) continue;

    factors.push_back(m[t][t]);
    ++t;
  }
  return factors;
}

namespace {

Int det_bareiss(std::vector<std::vector<Int>> a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return Int(1);
  Int prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return Int(0);
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

void minors_rec(const std::vector<std::vector<Int>>& m, int k, std::vector<int>& rows,
                std::vector<int>& cols, int next_row, int next_col, bool pick_rows, Int& g) {
  if (pick_rows) {
    if (static_cast<int>(rows.size()) == k) {
      minors_rec(m, k, rows, cols, 0, 0, false, g);
      return;
    }
    for (int r = next_row; r < static_cast<int>(m.size()); ++r) {
      rows.push_back(r);
      minors_rec(m, k, rows, cols, r + 1, 0, true, g);
      rows.pop_back();
    }
    return;
  }
  if (static_cast<int>(cols.size()) == k) {
    std::vector<std::vector<Int>> sub(k, std::vector<Int>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub[i][j] = m[rows[i]][cols[j]];
    g = boost::multiprecision::gcd(g, det_bareiss(std::move(sub)));
    return;
  }
  const int total_cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  for (int c = next_col; c < total_cols; ++c) {
    cols.push_back(c);
    minors_rec(m, k, rows, cols, 0, c + 1, false, g);
    cols.pop_back();
  }
}

}  // namespace

std::vector<Int> minor_gcd_snf(const std::vector<std::vector<Int>>& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  std::vector<Int> factors;
  Int prev_gcd(1);
  for (int k = 1; k <= std::min(rows, cols); ++k) {
    Int g(0);
    std::vector<int> rsel, csel;
    minors_rec(m, k, rsel, csel, 0, 0, true, g);
    g = boost::multiprecision::abs(g);
    if (g == 0) break;  // rank is k-1
    factors.push_back(g / prev_gcd);
    prev_gcd = g;
  }
  return factors;
}

std::vector<std::vector<Rat>> ordinary_boundary(const itop::SimplicialComplex& k, int p) {
  using itop::Simplex;
  const std::vector<Simplex> rows_basis = k.simplices_of_dim(p - 1);
  const std::vector<Simplex> cols_basis = k.simplices_of_dim(p);
  std::vector<std::vector<Rat>> m(rows_basis.size(), std::vector<Rat>(cols_basis.size(), Rat(0)));
  auto row_of = [&rows_basis](const Simplex& s) {
    auto it = std::lower_bound(rows_basis.begin(), rows_basis.end(), s, itop::SimplexLess{});
    return static_cast<int>(it - rows_basis.begin());
  };
  for (std::size_t j = 0; j < cols_basis.size(); ++j) {
    const Simplex& s = cols_basis[j];
    if (s.dim() < 1) continue;
    for (int r = 0; r <= s.dim(); ++r)
      m[row_of(s.face(r))][j] += Rat(r % 2 == 0 ? 1 : -1);
  }
  return m;
}

OrdinaryHomology simplicial_homology(const itop::SimplicialComplex& k, int p_max) {
  OrdinaryHomology out;
  std::vector<long long> sizes(p_max + 2, 0);
  for (int p = 0; p <= p_max + 1; ++p)
    sizes[p] = static_cast<long long>(k.simplices_of_dim(p).size());
  std::vector<long long> ranks(p_max + 2, 0);
  std::vector<std::vector<Int>> snfs(p_max + 2);
  for (int p = 1; p <= p_max + 1; ++p) {
    const auto b = ordinary_boundary(k, p);
    ranks[p] = dense_rank_q(b);
    std::vector<std::vector<Int>> bi(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
      bi[i].reserve(b[i].size());
      for (const Rat& v : b[i]) bi[i].push_back(Int(boost::multiprecision::numerator(v)));
    }
    snfs[p] = dense_snf(std::move(bi));
  }
  out.betti.assign(p_max + 1, 0);
  out.torsion.assign(p_max + 1, {});
  for (int p = 0; p <= p_max; ++p) {
    out.betti[p] = sizes[p] - ranks[p] - ranks[p + 1];
    for (const Int& f : snfs[p + 1])
      if (f > 1) out.torsion[p].push_back(f);
  }
  return out;
}

}  // namespace oracle

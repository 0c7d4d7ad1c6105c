#pragma once

#include "itop/numbers.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace itop {

struct CoefficientRing {
  enum class Kind { rationals, prime_field, integers };

  Kind kind = Kind::rationals;
  long long prime = 0;  // set iff kind == prime_field

  static CoefficientRing rationals() { return {Kind::rationals, 0}; }
  static CoefficientRing prime_field(long long p);  // throws unless p is prime
  static CoefficientRing integers() { return {Kind::integers, 0}; }

  bool is_field() const { return kind != Kind::integers; }
  std::string name() const;  // "Q", "GF(p)", "Z"
  bool operator==(const CoefficientRing&) const = default;
};

// A sparse vector: entries sorted by index, no explicit zeros.
struct SparseVec {
  int dim = 0;
  std::vector<std::pair<int, Rat>> entries;

  void add(int index, const Rat& value);
  Rat at(int index) const;
  bool is_zero() const { return entries.empty(); }
  std::vector<Rat> to_dense() const;
  static SparseVec unit(int dim, int index);
  bool operator==(const SparseVec&) const = default;
};

// Column-major sparse matrix with exact rational entries.  GF(p) routines
// interpret the entries through reduction mod p (denominators must stay
// invertible mod p).
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t nnz() const;
  bool is_zero() const;

  void add(int row, int col, const Rat& value);  // accumulates; drops exact zeros
  Rat at(int row, int col) const;
  const std::vector<std::pair<int, Rat>>& column(int c) const { return columns_[c]; }
  SparseVec column_vec(int c) const;
  void set_column(int c, const SparseVec& v);

  SparseMatrix transposed() const;
  SparseMatrix multiplied_by(const SparseMatrix& rhs) const;  // this * rhs
  SparseVec apply(const SparseVec& x) const;                  // this * x
  bool integer_entries() const;
  std::vector<std::vector<Rat>> to_dense() const;

  static SparseMatrix identity(int n);
  static SparseMatrix from_dense(const std::vector<std::vector<long long>>& rows);

  bool operator==(const SparseMatrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::vector<std::pair<int, Rat>>> columns_;
};

// Incremental left-to-right column reduction over a field.  Columns are added
// one at a time; each is reduced against the pivots recorded so far.  A column
// that survives (stays nonzero) contributes a new pivot; a column reduced to
// zero witnesses a linear relation.  Optionally tracks, for every added
// column, a combination of the originally added columns producing its reduced
// form, which yields kernel vectors and solutions to linear systems.
class ColumnReducer {
 public:
  ColumnReducer(int rows, const CoefficientRing& field, bool track_combinations);
  ~ColumnReducer();
  ColumnReducer(ColumnReducer&&) noexcept;
  ColumnReducer& operator=(ColumnReducer&&) noexcept;
  ColumnReducer(const ColumnReducer&) = delete;
  ColumnReducer& operator=(const ColumnReducer&) = delete;

  // Returns true when the column was independent of those added before.
  bool add_column(const SparseVec& column);

  int rank() const;
  int columns_added() const;
  bool survived(int k) const;
  // The reduced form of column k (zero vector if it did not survive).
  SparseVec reduced_column(int k) const;
  // Combination c (over the original columns) with  sum_j c_j col_j equal to
  // reduced_column(k).  Requires combination tracking.
  SparseVec combination(int k) const;
  // Writes v as a combination of the *reduced* columns; nullopt when v is not
  // in their span.  The k-th coefficient multiplies reduced_column(k).
  std::optional<std::vector<Rat>> express_in_reduced(const SparseVec& v) const;
  // Writes v as a combination of the *original* columns (requires tracking).
  std::optional<std::vector<Rat>> express_in_original(const SparseVec& v) const;

  struct Impl;

 private:
  std::unique_ptr<Impl> impl_;
};

// Rank over a field (rationals or GF(p)).
int rank(const SparseMatrix& m, const CoefficientRing& field);

// Whether every entry vanishes in the field: literally zero over the
// rationals, divisible by p over GF(p).
bool is_zero_over(const SparseMatrix& m, const CoefficientRing& field);

// Canonical kernel basis over a field, ordered by the index of the dependent
// column each vector witnesses.
std::vector<SparseVec> kernel_basis(const SparseMatrix& m, const CoefficientRing& field);

// One solution of m x = b over a field, if any.
std::optional<SparseVec> solve(const SparseMatrix& m, const SparseVec& b,
                               const CoefficientRing& field);

// Invariant factors d_1 | d_2 | ... | d_r of an integer matrix (positive,
// ascending divisibility; r = rank).  Entries must be integers.
std::vector<Int> smith_normal_form(const SparseMatrix& m);

}  // namespace itop

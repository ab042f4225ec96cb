#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "babyverma/field.hpp"

namespace bv {

using Vec = std::vector<Elem>;

bool is_zero(std::span<const Elem> v);

struct DenseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Elem> data;

  DenseMatrix() = default;
  DenseMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {}
  static DenseMatrix identity(int n);

  Elem& operator()(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  Elem operator()(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
  std::span<Elem> row(int r) { return {data.data() + static_cast<std::size_t>(r) * cols, static_cast<std::size_t>(cols)}; }
  std::span<const Elem> row(int r) const {
    return {data.data() + static_cast<std::size_t>(r) * cols, static_cast<std::size_t>(cols)};
  }
  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;
};

DenseMatrix multiply(const Field& F, const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix add(const Field& F, const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix scaled(const Field& F, const DenseMatrix& a, Elem c);
DenseMatrix transpose(const DenseMatrix& a);
Vec apply(const Field& F, const DenseMatrix& a, std::span<const Elem> v);

// Entries of one sparse column: (row, value) with distinct rows.
using SparseColumn = std::vector<std::pair<std::uint32_t, Elem>>;

// Column-major sparse square-or-rectangular matrix.
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<SparseColumn> columns;

  SparseMatrix() = default;
  SparseMatrix(int r, int c) : rows(r), cols(c), columns(c) {}
  static SparseMatrix from_dense(const DenseMatrix& d);
  DenseMatrix to_dense() const;
  std::size_t nonzeros() const;
  bool is_diagonal() const;
  Elem at(int r, int c) const;
};

Vec apply(const Field& F, const SparseMatrix& a, std::span<const Elem> v);
SparseMatrix transpose(const SparseMatrix& a);
SparseMatrix multiply(const Field& F, const SparseMatrix& a, const SparseMatrix& b);
// a + c * b
SparseMatrix add(const Field& F, const SparseMatrix& a, const SparseMatrix& b, Elem c = Field::one());
SparseMatrix sparse_identity(int n);

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(const Field& F, DenseMatrix& a);
int rank(const Field& F, DenseMatrix a);
// Basis of {x : a x = 0}.
std::vector<Vec> nullspace(const Field& F, DenseMatrix a);
// Characteristic polynomial det(xI - a), lowest degree first, monic.
std::vector<Elem> charpoly(const Field& F, const DenseMatrix& a);
Elem eval_poly(const Field& F, std::span<const Elem> poly, Elem x);

// Incrementally built echelon basis of a subspace of F^n. Stored rows have a
// leading 1 at their pivot and zeros at the pivots of earlier rows.
class EchelonBasis {
 public:
  EchelonBasis(Field F, int n) : F_(std::move(F)), n_(n) {}

  int ambient() const { return n_; }
  int size() const { return static_cast<int>(rows_.size()); }
  bool full() const { return size() == n_; }
  // Reduce v against the basis in place; true when v reduces to zero.
  bool reduce(Vec& v) const;
  // Insert v; returns true when it enlarged the span.
  bool insert(Vec v);
  bool contains(Vec v) const { return reduce(v); }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

 private:
  Field F_;
  int n_;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

// Solves for coordinates of vectors in the span of a fixed independent list.
class SpanSolver {
 public:
  SpanSolver(Field F, const std::vector<Vec>& basis);
  // Coefficients c with sum c_i basis_i = v, or nullopt when v is outside.
  std::optional<Vec> coordinates(std::span<const Elem> v) const;

 private:
  Field F_;
  int k_ = 0;
  std::vector<Vec> rows_;   // echelon rows
  std::vector<Vec> combo_;  // rows_[i] = sum combo_[i][j] basis_j
  std::vector<int> pivots_;
};

}  // namespace bv

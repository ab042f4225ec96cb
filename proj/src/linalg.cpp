#include "babyverma/linalg.hpp"

#include <algorithm>

namespace bv {

bool is_zero(std::span<const Elem> v) {
  return std::all_of(v.begin(), v.end(), [](Elem e) { return e.v == 0; });
}

DenseMatrix DenseMatrix::identity(int n) {
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Field::one();
  return m;
}

DenseMatrix multiply(const Field& F, const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      Elem aik = a(i, k);
      if (aik.v) F.axpy(c.row(i), aik, b.row(k));
    }
  return c;
}

DenseMatrix add(const Field& F, const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix c = a;
  F.axpy(c.data, Field::one(), b.data);
  return c;
}

DenseMatrix scaled(const Field& F, const DenseMatrix& a, Elem c) {
  DenseMatrix r = a;
  F.scale(r.data, c);
  return r;
}

DenseMatrix transpose(const DenseMatrix& a) {
  DenseMatrix t(a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) t(j, i) = a(i, j);
  return t;
}

Vec apply(const Field& F, const DenseMatrix& a, std::span<const Elem> v) {
  Vec out(a.rows);
  for (int i = 0; i < a.rows; ++i) {
    Elem s{};
    auto r = a.row(i);
    for (int j = 0; j < a.cols; ++j)
      if (r[j].v && v[j].v) s = F.add(s, F.mul(r[j], v[j]));
    out[i] = s;
  }
  return out;
}

SparseMatrix SparseMatrix::from_dense(const DenseMatrix& d) {
  SparseMatrix s(d.rows, d.cols);
  for (int j = 0; j < d.cols; ++j)
    for (int i = 0; i < d.rows; ++i)
      if (d(i, j).v) s.columns[j].emplace_back(static_cast<std::uint32_t>(i), d(i, j));
  return s;
}

DenseMatrix SparseMatrix::to_dense() const {
  DenseMatrix d(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (auto [i, v] : columns[j]) d(static_cast<int>(i), j) = v;
  return d;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns) n += c.size();
  return n;
}

bool SparseMatrix::is_diagonal() const {
  for (int j = 0; j < cols; ++j)
    for (auto [i, v] : columns[j])
      if (static_cast<int>(i) != j && v.v) return false;
  return true;
}

Elem SparseMatrix::at(int r, int c) const {
  for (auto [i, v] : columns[c])
    if (static_cast<int>(i) == r) return v;
  return Field::zero();
}

Vec apply(const Field& F, const SparseMatrix& a, std::span<const Elem> v) {
  Vec out(a.rows);
  for (int j = 0; j < a.cols; ++j) {
    if (!v[j].v) continue;
    for (auto [i, x] : a.columns[j]) out[i] = F.add(out[i], F.mul(x, v[j]));
  }
  return out;
}

SparseMatrix transpose(const SparseMatrix& a) {
  SparseMatrix t(a.cols, a.rows);
  for (int j = 0; j < a.cols; ++j)
    for (auto [i, v] : a.columns[j]) t.columns[i].emplace_back(static_cast<std::uint32_t>(j), v);
  return t;
}

namespace {

// Scatter-gather accumulator for building sparse columns.
struct ColumnAccumulator {
  std::vector<Elem> dense;
  std::vector<std::uint32_t> touched;
  explicit ColumnAccumulator(int n) : dense(n) {}
  void add(const Field& F, std::uint32_t i, Elem v) {
    if (!dense[i].v) touched.push_back(i);
    dense[i] = F.add(dense[i], v);
  }
  SparseColumn take() {
    std::sort(touched.begin(), touched.end());
    SparseColumn c;
    for (auto i : touched) {
      if (dense[i].v) c.emplace_back(i, dense[i]);
      dense[i] = Field::zero();
    }
    touched.clear();
    return c;
  }
};

}  // namespace

SparseMatrix multiply(const Field& F, const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix c(a.rows, b.cols);
  ColumnAccumulator acc(a.rows);
  for (int j = 0; j < b.cols; ++j) {
    for (auto [k, v] : b.columns[j])
      for (auto [i, x] : a.columns[k]) acc.add(F, i, F.mul(x, v));
    c.columns[j] = acc.take();
  }
  return c;
}

SparseMatrix add(const Field& F, const SparseMatrix& a, const SparseMatrix& b, Elem c) {
  SparseMatrix r(a.rows, a.cols);
  ColumnAccumulator acc(a.rows);
  for (int j = 0; j < a.cols; ++j) {
    for (auto [i, x] : a.columns[j]) acc.add(F, i, x);
    for (auto [i, x] : b.columns[j]) acc.add(F, i, F.mul(c, x));
    r.columns[j] = acc.take();
  }
  return r;
}

SparseMatrix sparse_identity(int n) {
  SparseMatrix s(n, n);
  for (int i = 0; i < n; ++i) s.columns[i].emplace_back(static_cast<std::uint32_t>(i), Field::one());
  return s;
}

std::vector<int> rref(const Field& F, DenseMatrix& a) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < a.cols && r < a.rows; ++c) {
    int piv = -1;
    for (int i = r; i < a.rows; ++i)
      if (a(i, c).v) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) std::swap_ranges(a.row(piv).begin(), a.row(piv).end(), a.row(r).begin());
    F.scale(a.row(r), F.inv(a(r, c)));
    for (int i = 0; i < a.rows; ++i)
      if (i != r && a(i, c).v) F.axpy(a.row(i), F.neg(a(i, c)), a.row(r));
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(const Field& F, DenseMatrix a) { return static_cast<int>(rref(F, a).size()); }

std::vector<Vec> nullspace(const Field& F, DenseMatrix a) {
  auto pivots = rref(F, a);
  std::vector<bool> is_pivot(a.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < a.cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(a.cols);
    v[free] = Field::one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(a(static_cast<int>(r), free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Elem> charpoly(const Field& F, const DenseMatrix& input) {
  const int n = input.rows;
  DenseMatrix h = input;
  // Similarity reduction to upper Hessenberg form.
  for (int j = 0; j + 2 < n; ++j) {
    int piv = -1;
    for (int i = j + 1; i < n; ++i)
      if (h(i, j).v) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != j + 1) {
      std::swap_ranges(h.row(piv).begin(), h.row(piv).end(), h.row(j + 1).begin());
      for (int r = 0; r < n; ++r) std::swap(h(r, piv), h(r, j + 1));
    }
    Elem pinv = F.inv(h(j + 1, j));
    for (int k = j + 2; k < n; ++k) {
      if (!h(k, j).v) continue;
      Elem u = F.mul(h(k, j), pinv);
      F.axpy(h.row(k), F.neg(u), h.row(j + 1));
      for (int r = 0; r < n; ++r)
        if (h(r, k).v) h(r, j + 1) = F.add(h(r, j + 1), F.mul(u, h(r, k)));
    }
  }
  // p_m(x) = (x - h_mm) p_{m-1} - sum_{i<m} h_im (prod_{j=i+1..m} h_{j,j-1}) p_{i-1}
  std::vector<std::vector<Elem>> polys(n + 1);
  polys[0] = {Field::one()};
  for (int m = 1; m <= n; ++m) {
    std::vector<Elem> pm(m + 1);
    const auto& prev = polys[m - 1];
    for (int d = 0; d < m; ++d) {
      pm[d + 1] = F.add(pm[d + 1], prev[d]);
      pm[d] = F.sub(pm[d], F.mul(h(m - 1, m - 1), prev[d]));
    }
    Elem prod = Field::one();
    for (int i = m - 1; i >= 1; --i) {
      prod = F.mul(prod, h(i, i - 1));
      if (!prod.v) break;
      Elem coef = F.mul(h(i - 1, m - 1), prod);
      if (!coef.v) continue;
      const auto& pi = polys[i - 1];
      for (std::size_t d = 0; d < pi.size(); ++d) pm[d] = F.sub(pm[d], F.mul(coef, pi[d]));
    }
    polys[m] = std::move(pm);
  }
  return polys[n];
}

Elem eval_poly(const Field& F, std::span<const Elem> poly, Elem x) {
  Elem r{};
  for (std::size_t i = poly.size(); i-- > 0;) r = F.add(F.mul(r, x), poly[i]);
  return r;
}

bool EchelonBasis::reduce(Vec& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Elem c = v[pivots_[i]];
    if (c.v) F_.axpy(v, F_.neg(c), rows_[i]);
  }
  return is_zero(v);
}

bool EchelonBasis::insert(Vec v) {
  if (reduce(v)) return false;
  int piv = 0;
  while (!v[piv].v) ++piv;
  F_.scale(v, F_.inv(v[piv]));
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

SpanSolver::SpanSolver(Field F, const std::vector<Vec>& basis) : F_(std::move(F)), k_(static_cast<int>(basis.size())) {
  for (int j = 0; j < k_; ++j) {
    Vec v = basis[j];
    Vec c(k_);
    c[j] = Field::one();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      Elem a = v[pivots_[i]];
      if (!a.v) continue;
      F_.axpy(v, F_.neg(a), rows_[i]);
      F_.axpy(c, F_.neg(a), combo_[i]);
    }
    int piv = 0;
    while (piv < static_cast<int>(v.size()) && !v[piv].v) ++piv;
    if (piv == static_cast<int>(v.size())) continue;  // dependent input; ignored
    Elem s = F_.inv(v[piv]);
    F_.scale(v, s);
    F_.scale(c, s);
    rows_.push_back(std::move(v));
    combo_.push_back(std::move(c));
    pivots_.push_back(piv);
  }
}

std::optional<Vec> SpanSolver::coordinates(std::span<const Elem> input) const {
  Vec v(input.begin(), input.end());
  Vec c(k_);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Elem a = v[pivots_[i]];
    if (!a.v) continue;
    F_.axpy(v, F_.neg(a), rows_[i]);
    F_.axpy(c, a, combo_[i]);
  }
  if (!is_zero(v)) return std::nullopt;
  return c;
}

}  // namespace bv

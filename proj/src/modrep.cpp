#include "babyverma/modrep.hpp"

#include <algorithm>
#include <sstream>

#include "babyverma/errors.hpp"
#include "babyverma/meataxe.hpp"

namespace bv {

Elem Weight::on_coroot(const Field& F, const RootSystem& sys, int alpha) const {
  Elem s{};
  const auto& k = sys.coroot_coeffs(alpha);
  for (std::size_t i = 0; i < k.size(); ++i) s = F.add(s, F.mul(F.from_int(k[i]), x[i]));
  return s;
}

bool Weight::compatible(const Field& F, const Character& chi) const {
  if (x.size() != chi.chi_h.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (F.artin_schreier(x[i]) != F.pow(chi.chi_h[i], F.p())) return false;
  return true;
}

std::vector<Weight> compatible_weights(const Field& F, const Character& chi) {
  const int l = static_cast<int>(chi.chi_h.size());
  std::vector<std::vector<Elem>> sols(l);
  for (int i = 0; i < l; ++i) {
    Elem target = F.pow(chi.chi_h[i], F.p());
    for (int v = 0; v < F.order(); ++v)
      if (F.artin_schreier(F.element(v)) == target) sols[i].push_back(F.element(v));
    if (sols[i].empty()) return {};
  }
  std::vector<Weight> out;
  std::vector<std::size_t> pos(l, 0);
  while (true) {
    Weight w;
    for (int i = 0; i < l; ++i) w.x.push_back(sols[i][pos[i]]);
    out.push_back(std::move(w));
    int i = l - 1;
    while (i >= 0 && ++pos[i] == sols[i].size()) pos[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

std::vector<SparseMatrix> ModuleRep::generator_matrices() const {
  std::vector<SparseMatrix> g;
  for (int lab : generators) g.push_back(action.at(lab));
  return g;
}

InductionContext InductionContext::make(Field F, std::shared_ptr<const StructureConstants> sc, Character chi,
                                        std::vector<int> I) {
  require_good_prime(sc->system().kind(), F.p());
  if (chi.chi_h.size() != static_cast<std::size_t>(sc->rank()) || chi.chi_f.size() != static_cast<std::size_t>(sc->t()))
    throw ConfigError("character has the wrong number of values");
  InductionContext ctx{std::move(F), sc, std::move(chi), parabolic_data(sc->system(), std::move(I))};
  ctx.chi.require_vanishing_on_nilradical(*sc, ctx.pd);
  return ctx;
}

void axpy_sparse(const Field& F, SparseVec& acc, Elem c, const SparseVec& x) {
  if (!c.v || x.empty()) return;
  SparseVec out;
  out.reserve(acc.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < acc.size() || j < x.size()) {
    if (j == x.size() || (i < acc.size() && acc[i].first < x[j].first)) {
      out.push_back(acc[i++]);
    } else if (i == acc.size() || x[j].first < acc[i].first) {
      out.emplace_back(x[j].first, F.mul(c, x[j].second));
      ++j;
    } else {
      Elem v = F.add(acc[i].second, F.mul(c, x[j].second));
      if (v.v) out.emplace_back(acc[i].first, v);
      ++i;
      ++j;
    }
  }
  acc = std::move(out);
}

InducedAction::InducedAction(Field F, std::shared_ptr<const StructureConstants> sc, Character chi,
                             std::vector<int> free_roots, int inner_dim, std::vector<DenseMatrix> inner)
    : F_(std::move(F)), sc_(std::move(sc)), chi_(std::move(chi)), free_(std::move(free_roots)),
      inner_dim_(inner_dim), inner_(std::move(inner)) {
  const int p = F_.p();
  inner_.resize(sc_->dim());
  free_pos_.assign(sc_->dim(), -1);
  for (std::size_t i = 0; i < free_.size(); ++i) free_pos_[sc_->F(free_[i])] = static_cast<int>(i);
  std::uint64_t s = inner_dim_;
  for (std::size_t i = 0; i < free_.size(); ++i) {
    stride_.push_back(s);
    s *= p;
    if (s > (1ull << 32)) throw ResourceError("induced module too large to index");
  }
  dim_ = s;
  binom_.assign(p * p, Field::zero());
  for (int a = 0; a < p; ++a) {
    binom_[a * p] = Field::one();
    for (int k = 1; k <= a; ++k)
      binom_[a * p + k] = F_.add(binom_[(a - 1) * p + k - 1], k <= a - 1 ? binom_[(a - 1) * p + k] : Field::zero());
  }
}

BasisEntry InducedAction::decode(std::uint32_t b) const {
  BasisEntry e;
  e.levi_index = static_cast<int>(b % inner_dim_);
  std::uint64_t q = b / inner_dim_;
  for (std::size_t i = 0; i < free_.size(); ++i) {
    e.exponents.push_back(static_cast<std::uint8_t>(q % F_.p()));
    q /= F_.p();
  }
  return e;
}

const SparseVec& InducedAction::act(int label, std::uint32_t b) {
  const std::uint64_t key = static_cast<std::uint64_t>(label) * dim_ + b;
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  SparseVec v = compute(label, b);
  return memo_.emplace(key, std::move(v)).first->second;
}

SparseVec InducedAction::act(int label, const SparseVec& v) {
  SparseVec out;
  for (auto [b, c] : v) axpy_sparse(F_, out, c, act(label, b));
  return out;
}

SparseVec InducedAction::act_lie(const std::vector<std::pair<int, Elem>>& y, std::uint32_t b) {
  SparseVec out;
  for (auto [lab, c] : y) axpy_sparse(F_, out, c, act(lab, b));
  return out;
}

SparseVec InducedAction::compute(int label, std::uint32_t b) {
  const int p = F_.p();
  const int k = static_cast<int>(free_.size());
  std::vector<int> a(k);
  std::uint64_t q = b / inner_dim_;
  for (int i = 0; i < k; ++i) {
    a[i] = static_cast<int>(q % p);
    q /= p;
  }
  int first = 0;
  while (first < k && !a[first]) ++first;

  const int fp = free_pos_[label];
  if (fp >= 0 && fp < first) return {{static_cast<std::uint32_t>(b + stride_[fp]), Field::one()}};
  if (fp >= 0 && fp == first) {
    if (a[fp] + 1 < p) return {{static_cast<std::uint32_t>(b + stride_[fp]), Field::one()}};
    Elem c = F_.pow(chi_.value(*sc_, label), p);
    if (!c.v) return {};
    return {{static_cast<std::uint32_t>(b - (p - 1) * stride_[fp]), c}};
  }
  if (first == k) {
    const DenseMatrix& m = inner_[label];
    if (m.rows == 0) return {};
    const int j = static_cast<int>(b);
    SparseVec out;
    for (int r = 0; r < inner_dim_; ++r)
      if (m(r, j).v) out.emplace_back(static_cast<std::uint32_t>(r), m(r, j));
    return out;
  }

  // z w^m = sum_k (-1)^k C(m,k) w^{m-k} ad_w^k(z)
  const int w = sc_->F(free_[first]);
  const int m = a[first];
  const std::uint32_t rest = static_cast<std::uint32_t>(b - m * stride_[first]);
  std::vector<std::pair<int, Elem>> y = {{label, Field::one()}};
  SparseVec out;
  for (int kk = 0; kk <= m && !y.empty(); ++kk) {
    Elem coef = binom_[m * p + kk];
    if (kk % 2) coef = F_.neg(coef);
    SparseVec v = act_lie(y, rest);
    for (int r = 0; r < m - kk && !v.empty(); ++r) v = act(w, v);
    axpy_sparse(F_, out, coef, v);
    std::vector<Elem> acc(sc_->dim());
    for (auto [lab, c] : y)
      for (auto [tgt, x] : sc_->bracket_mod(F_, w, lab)) acc[tgt] = F_.add(acc[tgt], F_.mul(c, x));
    y.clear();
    for (int i = 0; i < sc_->dim(); ++i)
      if (acc[i].v) y.emplace_back(i, acc[i]);
  }
  return out;
}

namespace {

ModuleRep materialise(const Field& F, std::shared_ptr<const StructureConstants> sc, InducedAction& act,
                      const std::vector<int>& labels, std::vector<int> generators) {
  ModuleRep M;
  M.field = F;
  M.sc = sc;
  M.dim = static_cast<int>(act.dim());
  M.free_roots = act.free_roots();
  M.action.assign(sc->dim(), SparseMatrix());
  for (int lab : labels) {
    SparseMatrix s(M.dim, M.dim);
    for (int b = 0; b < M.dim; ++b) s.columns[b] = act.act(lab, static_cast<std::uint32_t>(b));
    M.action[lab] = std::move(s);
  }
  for (int b = 0; b < M.dim; ++b) M.basis.push_back(act.decode(static_cast<std::uint32_t>(b)));
  M.highest_vector = 0;
  M.generators = std::move(generators);
  return M;
}

std::uint64_t power(int p, int k) {
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) r *= p;
  return r;
}

}  // namespace

ModuleRep levi_simple(const InductionContext& ctx, const Weight& lambda, const ModuleOptions& opt) {
  const Field& F = ctx.field;
  const auto& sc = *ctx.sc;
  if (!lambda.compatible(F, ctx.chi)) throw ConfigError("lambda is not compatible with chi: x^p - x != chi(h)^p");
  if (power(F.p(), ctx.pd.s) > opt.size_bound) throw ResourceError("Levi baby Verma module exceeds the size bound");

  std::vector<DenseMatrix> inner(sc.dim());
  for (int i = 0; i < sc.rank(); ++i) {
    inner[sc.H(i)] = DenseMatrix(1, 1);
    inner[sc.H(i)](0, 0) = lambda.x[i];
  }
  InducedAction verma(F, ctx.sc, ctx.chi, ctx.pd.phi_I_plus, 1, inner);
  std::vector<int> labels, gens;
  for (int a : ctx.pd.phi_I_plus) {
    labels.push_back(sc.E(a));
    labels.push_back(sc.F(a));
  }
  for (int i = 0; i < sc.rank(); ++i) labels.push_back(sc.H(i));
  for (int i : ctx.pd.I) {
    gens.push_back(sc.E(i));
    gens.push_back(sc.F(i));
  }
  for (int i = 0; i < sc.rank(); ++i) gens.push_back(sc.H(i));
  ModuleRep V = materialise(F, ctx.sc, verma, labels, gens);

  // Largest submodule inside ker(phi), phi = coordinate of v_lambda, is the
  // annihilator of the u-span of phi in the dual.
  std::vector<SparseMatrix> gensT;
  for (int lab : gens) gensT.push_back(transpose(V.action[lab]));
  Vec phi(V.dim);
  phi[0] = Field::one();
  auto S = spin(F, gensT, {phi});
  DenseMatrix rows(static_cast<int>(S.size()), V.dim);
  for (int i = 0; i < rows.rows; ++i) std::copy(S[i].begin(), S[i].end(), rows.row(i).begin());
  auto piv = rref(F, rows);
  if (piv.empty() || piv[0] != 0) throw FalsifiedError("phi is missing from its own spin");
  const int d = rows.rows;

  ModuleRep L;
  L.field = F;
  L.sc = ctx.sc;
  L.dim = d;
  L.action.assign(sc.dim(), SparseMatrix());
  for (int lab : labels) {
    SparseMatrix At = transpose(V.action[lab]);
    DenseMatrix C(d, d);
    for (int i = 0; i < d; ++i) {
      Vec u = apply(F, At, rows.row(i));
      for (int k = 0; k < d; ++k) C(i, k) = u[piv[k]];
      for (int k = 0; k < d; ++k)
        if (C(i, k).v) F.axpy(u, F.neg(C(i, k)), rows.row(k));
      if (!is_zero(u)) throw FalsifiedError("dual spin is not invariant");
    }
    L.action[lab] = SparseMatrix::from_dense(C);
  }
  for (int k = 0; k < d; ++k) L.basis.push_back(BasisEntry{{}, k});
  L.generators = gens;
  L.highest_vector = 0;

  OracleOptions oo;
  oo.seed = opt.seed;
  oo.dense_limit = opt.dense_oracle_limit;
  auto w = is_simple(L, oo);
  if (!w.simple) throw FalsifiedError("head of the Levi baby Verma module is not simple");
  if (w.endomorphism_dim != 1)
    throw FalsifiedError("Levi module is simple but not absolutely simple; use a larger extension degree");
  return L;
}

InducedAction induced_action(const InductionContext& ctx, const ModuleRep& L) {
  const auto& sc = *ctx.sc;
  std::vector<DenseMatrix> inner(sc.dim());
  for (int lab = 0; lab < sc.dim(); ++lab)
    if (L.has(lab)) inner[lab] = L.action[lab].to_dense();
  return InducedAction(ctx.field, ctx.sc, ctx.chi, ctx.pd.complement, L.dim, std::move(inner));
}

std::uint64_t induced_dim(const InductionContext& ctx, const ModuleRep& L) {
  return power(ctx.field.p(), ctx.pd.k) * static_cast<std::uint64_t>(L.dim);
}

ModuleRep induce(const InductionContext& ctx, const ModuleRep& L, const ModuleOptions& opt) {
  if (induced_dim(ctx, L) > opt.size_bound)
    throw ResourceError("induced module of dimension " + std::to_string(induced_dim(ctx, L)) +
                        " exceeds the size bound " + std::to_string(opt.size_bound));
  const auto& sc = *ctx.sc;
  InducedAction Z = induced_action(ctx, L);
  std::vector<int> labels, gens;
  for (int lab = 0; lab < sc.dim(); ++lab) labels.push_back(lab);
  for (int i = 0; i < sc.rank(); ++i) {
    gens.push_back(sc.E(i));
    gens.push_back(sc.F(i));
  }
  for (int i = 0; i < sc.rank(); ++i) gens.push_back(sc.H(i));
  return materialise(ctx.field, ctx.sc, Z, labels, gens);
}

Elem r_by_straightening(InducedAction& Z) {
  const auto& sc = Z.constants();
  const auto& roots = Z.free_roots();
  const int p = Z.field().p();
  SparseVec v = {{0u, Field::one()}};
  for (auto it = roots.rbegin(); it != roots.rend(); ++it)
    for (int r = 0; r < p - 1; ++r) v = Z.act(sc.F(*it), v);
  for (auto it = roots.rbegin(); it != roots.rend() && !v.empty(); ++it)
    for (int r = 0; r < p - 1 && !v.empty(); ++r) v = Z.act(sc.E(*it), v);
  if (v.empty()) return Field::zero();
  if (v.size() != 1 || v[0].first != 0) throw FalsifiedError("straightened image is not a multiple of 1 (x) v");
  return v[0].second;
}

Elem r_by_straightening(const InductionContext& ctx, const Weight& lambda, const ModuleOptions& opt) {
  ModuleRep L = levi_simple(ctx, lambda, opt);
  InducedAction Z = induced_action(ctx, L);
  return r_by_straightening(Z);
}

std::string check_module_relations(const ModuleRep& M, const Character& chi) {
  const Field& F = M.field;
  const auto& sc = *M.sc;
  const int p = F.p();
  std::vector<int> labels;
  for (int lab = 0; lab < sc.dim(); ++lab)
    if (M.has(lab)) labels.push_back(lab);
  for (int x : labels)
    for (int y : labels) {
      if (y <= x) continue;
      SparseMatrix lhs = add(F, multiply(F, M.action[x], M.action[y]), multiply(F, M.action[y], M.action[x]),
                             F.neg(Field::one()));
      bool known = true;
      for (auto [z, c] : sc.bracket_mod(F, x, y)) {
        if (!M.has(z)) {
          known = false;
          break;
        }
        lhs = add(F, lhs, M.action[z], F.neg(c));
      }
      if (known && lhs.nonzeros()) return "[" + sc.name(x) + ", " + sc.name(y) + "] is not respected";
    }
  for (int x : labels) {
    SparseMatrix pw = sparse_identity(M.dim);
    for (int r = 0; r < p; ++r) pw = multiply(F, M.action[x], pw);
    if (sc.kind(x) == LabelKind::H) pw = add(F, pw, M.action[x], F.neg(Field::one()));
    pw = add(F, pw, sparse_identity(M.dim), F.neg(F.pow(chi.value(sc, x), p)));
    if (pw.nonzeros()) return "p-th power relation fails for " + sc.name(x);
  }
  return {};
}

bool top_vector_generates(const ModuleRep& Z) {
  const int p = Z.field.p();
  std::uint64_t idx = 0, stride = Z.dim;
  for (std::size_t i = 0; i < Z.free_roots.size(); ++i) stride /= p;
  for (std::size_t i = 0; i < Z.free_roots.size(); ++i) {
    idx += (p - 1) * stride;
    stride *= p;
  }
  Vec v(Z.dim);
  v[idx] = Field::one();
  return static_cast<int>(spin(Z.field, Z.generator_matrices(), {v}).size()) == Z.dim;
}

std::string dump_matrix(const ModuleRep& M, int label) {
  const SparseMatrix& A = M.action.at(label);
  std::ostringstream os;
  os << "%%babyverma " << M.sc->name(label) << ' ' << M.dim << ' ' << A.nonzeros() << '\n';
  for (int c = 0; c < A.cols; ++c)
    for (auto [r, x] : A.columns[c]) os << r + 1 << ' ' << c + 1 << ' ' << M.field.format(x) << '\n';
  return os.str();
}

}  // namespace bv

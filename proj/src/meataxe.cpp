#include "babyverma/meataxe.hpp"

#include <deque>
#include <map>
#include <random>

#include "babyverma/errors.hpp"

namespace bv {

std::vector<Vec> spin(const Field& F, const std::vector<SparseMatrix>& gens, const std::vector<Vec>& seeds) {
  if (seeds.empty()) return {};
  const int n = static_cast<int>(seeds[0].size());
  EchelonBasis B(F, n);
  std::deque<Vec> todo;
  for (const auto& s : seeds)
    if (B.insert(s)) todo.push_back(s);
  while (!todo.empty() && !B.full()) {
    Vec v = std::move(todo.front());
    todo.pop_front();
    for (const auto& g : gens) {
      Vec w = apply(F, g, v);
      if (B.insert(w)) todo.push_back(std::move(w));
      if (B.full()) break;
    }
  }
  return B.rows();
}

bool is_invariant(const Field& F, const std::vector<SparseMatrix>& gens, const std::vector<Vec>& basis) {
  if (basis.empty()) return true;
  EchelonBasis B(F, static_cast<int>(basis[0].size()));
  for (const auto& v : basis) B.insert(v);
  for (const auto& g : gens)
    for (const auto& v : basis)
      if (!B.contains(apply(F, g, v))) return false;
  return true;
}

int commutant_dim(const Field& F, const std::vector<SparseMatrix>& gens, int dim) {
  const int n2 = dim * dim;
  EchelonBasis eqs(F, n2);
  std::vector<DenseMatrix> G;
  for (const auto& g : gens) G.push_back(g.to_dense());
  // Unknown X(i,k) at i*dim+k; equation (XG - GX)(i,j) = 0.
  for (const auto& g : G)
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        Vec row(n2);
        for (int k = 0; k < dim; ++k) {
          row[i * dim + k] = F.add(row[i * dim + k], g(k, j));
          row[k * dim + j] = F.sub(row[k * dim + j], g(i, k));
        }
        eqs.insert(std::move(row));
        if (eqs.full()) return 0;
      }
  return n2 - eqs.size();
}

namespace {

DenseMatrix dense_sum(const Field& F, int dim, const std::vector<DenseMatrix>& words, const std::vector<Elem>& c) {
  DenseMatrix X(dim, dim);
  for (std::size_t i = 0; i < words.size(); ++i)
    if (c[i].v) X = add(F, X, scaled(F, words[i], c[i]));
  return X;
}

std::vector<SparseMatrix> transposes(const std::vector<SparseMatrix>& gens) {
  std::vector<SparseMatrix> t;
  for (const auto& g : gens) t.push_back(transpose(g));
  return t;
}

}  // namespace

std::optional<SimplicityWitness> norton_test(const Field& F, const std::vector<SparseMatrix>& gens, int dim,
                                             const OracleOptions& opt) {
  if (dim == 0) return SimplicityWitness{false, std::vector<Vec>{}, 0, "norton"};
  if (dim == 1) return SimplicityWitness{true, std::nullopt, 1, "norton"};
  std::mt19937_64 rng(opt.seed);
  auto rand_elem = [&] { return F.element(static_cast<int>(rng() % F.order())); };
  std::vector<DenseMatrix> words;
  for (const auto& g : gens) words.push_back(g.to_dense());
  const auto gensT = transposes(gens);
  const std::size_t ngen = words.size();

  for (int attempt = 0; attempt < opt.attempts; ++attempt) {
    // A few more products of generators each round widen the search.
    if (ngen > 0 && words.size() < ngen + 12) {
      const auto& a = words[rng() % words.size()];
      const auto& b = words[rng() % ngen];
      words.push_back(multiply(F, a, b));
    }
    std::vector<Elem> c(words.size());
    for (auto& x : c) x = rand_elem();
    DenseMatrix X = dense_sum(F, dim, words, c);
    auto cp = charpoly(F, X);
    for (int r = 0; r < F.order(); ++r) {
      Elem mu = F.element(r);
      if (eval_poly(F, cp, mu).v) continue;
      DenseMatrix theta = X;
      for (int i = 0; i < dim; ++i) theta(i, i) = F.sub(theta(i, i), mu);
      auto ker = nullspace(F, theta);
      if (ker.size() != 1) continue;
      auto S = spin(F, gens, {ker[0]});
      if (static_cast<int>(S.size()) < dim) return SimplicityWitness{false, S, 0, "norton"};
      auto kerT = nullspace(F, transpose(theta));
      auto ST = spin(F, gensT, {kerT[0]});
      if (static_cast<int>(ST.size()) < dim) {
        DenseMatrix rows(static_cast<int>(ST.size()), dim);
        for (int i = 0; i < rows.rows; ++i) std::copy(ST[i].begin(), ST[i].end(), rows.row(i).begin());
        return SimplicityWitness{false, nullspace(F, rows), 0, "norton"};
      }
      return SimplicityWitness{true, std::nullopt, 1, "norton"};
    }
  }
  return std::nullopt;
}

namespace {

struct WeightGrading {
  std::vector<int> weight_of;            // basis index -> weight id
  std::vector<int> local_of;             // basis index -> position in its weight space
  std::vector<std::vector<int>> members;  // weight id -> basis indices
};

WeightGrading grade(const ModuleRep& M, const std::vector<int>& hs) {
  WeightGrading g;
  g.weight_of.resize(M.dim);
  g.local_of.resize(M.dim);
  std::map<std::vector<std::uint16_t>, int> ids;
  for (int b = 0; b < M.dim; ++b) {
    std::vector<std::uint16_t> key;
    for (int h : hs) key.push_back(M.action[h].at(b, b).v);
    auto [it, fresh] = ids.emplace(key, static_cast<int>(g.members.size()));
    if (fresh) g.members.emplace_back();
    g.weight_of[b] = it->second;
    g.local_of[b] = static_cast<int>(g.members[it->second].size());
    g.members[it->second].push_back(b);
  }
  return g;
}

// Image of a weight vector (local coordinates in weight w) under a weight-homogeneous map.
std::pair<int, Vec> apply_graded(const Field& F, const SparseMatrix& A, const WeightGrading& g, int w,
                                 const Vec& v) {
  int target = -1;
  Vec out;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (!v[j].v) continue;
    for (auto [r, x] : A.columns[g.members[w][j]]) {
      if (target < 0) {
        target = g.weight_of[r];
        out.assign(g.members[target].size(), Field::zero());
      }
      if (g.weight_of[r] != target) throw DomainError("generator does not respect the weight grading");
      int lr = g.local_of[r];
      out[lr] = F.add(out[lr], F.mul(v[j], x));
    }
  }
  if (target >= 0 && is_zero(out)) target = -1;
  return {target, std::move(out)};
}

// Graded spin of one weight vector; returns the per-weight echelon bases.
std::vector<EchelonBasis> graded_spin(const Field& F, const std::vector<const SparseMatrix*>& moves,
                                      const WeightGrading& g, int w, const Vec& seed, int dim, int& total) {
  std::vector<EchelonBasis> B;
  for (const auto& m : g.members) B.emplace_back(F, static_cast<int>(m.size()));
  std::deque<std::pair<int, Vec>> todo;
  total = 0;
  if (B[w].insert(seed)) {
    ++total;
    todo.emplace_back(w, seed);
  }
  while (!todo.empty() && total < dim) {
    auto [u, v] = std::move(todo.front());
    todo.pop_front();
    for (const auto* A : moves) {
      auto [t, x] = apply_graded(F, *A, g, u, v);
      if (t < 0 || B[t].full()) continue;
      if (B[t].insert(x)) {
        ++total;
        todo.emplace_back(t, std::move(x));
      }
    }
  }
  return B;
}

// Lines of F^d as (0..0, 1, tail). The leading position runs from the last
// coordinate down, so lines avoiding the first basis vector come first.
struct LineIter {
  int q, lead;
  std::vector<int> tail;  // F.element indices for positions lead+1..d-1

  LineIter(int q_, int d) : q(q_), lead(d - 1), tail(d - 1, 0) {}
  bool next() {
    for (int i = static_cast<int>(tail.size()) - 1; i >= lead; --i) {
      if (++tail[i] < q) return true;
      tail[i] = 0;
    }
    return --lead >= 0;
  }
  Vec coeffs(const Field& F) const {
    Vec c(tail.size() + 1);
    c[lead] = Field::one();
    for (std::size_t i = lead; i < tail.size(); ++i) c[i + 1] = F.element(tail[i]);
    return c;
  }
};

}  // namespace

SimplicityWitness weight_spin_test(const ModuleRep& M, const OracleOptions& opt) {
  const Field& F = M.field;
  const auto& sc = *M.sc;
  std::vector<int> hs, raising;
  std::vector<const SparseMatrix*> moves;
  for (int lab : M.generators) {
    if (sc.kind(lab) == LabelKind::H) {
      if (!M.action[lab].is_diagonal()) throw DomainError("weight-spin test needs diagonal Cartan generators");
      hs.push_back(lab);
      continue;
    }
    if (sc.kind(lab) == LabelKind::E) raising.push_back(lab);
    moves.push_back(&M.action[lab]);
  }
  SimplicityWitness out;
  out.method = "weight-spin";
  if (M.dim == 0) return out;
  const WeightGrading g = grade(M, hs);
  int min_inv = -1;

  for (std::size_t w = 0; w < g.members.size(); ++w) {
    const int dw = static_cast<int>(g.members[w].size());
    // Kernel of the raising generators on this weight space, one generator at a time.
    std::vector<Vec> K;
    for (int j = 0; j < dw; ++j) {
      Vec e(dw);
      e[j] = Field::one();
      K.push_back(std::move(e));
    }
    for (int lab : raising) {
      if (K.empty()) break;
      std::map<std::uint32_t, int> rowid;
      std::vector<std::vector<std::pair<std::uint32_t, Elem>>> cols(K.size());
      for (std::size_t k = 0; k < K.size(); ++k) {
        std::map<std::uint32_t, Elem> acc;
        for (int j = 0; j < dw; ++j) {
          if (!K[k][j].v) continue;
          for (auto [r, x] : M.action[lab].columns[g.members[w][j]]) acc[r] = F.add(acc[r], F.mul(K[k][j], x));
        }
        for (auto [r, x] : acc)
          if (x.v) {
            rowid.emplace(r, static_cast<int>(rowid.size()));
            cols[k].emplace_back(r, x);
          }
      }
      if (rowid.empty()) continue;
      DenseMatrix A(static_cast<int>(rowid.size()), static_cast<int>(K.size()));
      for (std::size_t k = 0; k < K.size(); ++k)
        for (auto [r, x] : cols[k]) A(rowid[r], static_cast<int>(k)) = x;
      std::vector<Vec> next;
      for (const auto& c : nullspace(F, A)) {
        Vec v(dw);
        for (std::size_t k = 0; k < K.size(); ++k)
          if (c[k].v) F.axpy(v, c[k], K[k]);
        next.push_back(std::move(v));
      }
      K = std::move(next);
    }
    if (K.empty()) continue;
    const int d = static_cast<int>(K.size());
    {
      // Echelon form: only K[0] can involve the lowest-index basis vector
      // (the generating vector of an induced module), and it is tried last.
      DenseMatrix R(d, dw);
      for (int k = 0; k < d; ++k) std::copy(K[k].begin(), K[k].end(), R.row(k).begin());
      rref(F, R);
      for (int k = 0; k < d; ++k) K[k].assign(R.row(k).begin(), R.row(k).end());
    }
    if (min_inv < 0 || d < min_inv) min_inv = d;

    LineIter line(F.order(), d);
    int lines = 0;
    do {
      if (++lines > opt.max_lines)
        throw ResourceError("too many highest-weight lines to spin (" + std::to_string(d) + "-dimensional space)");
      Vec v(dw);
      const Vec c = line.coeffs(F);
      for (int k = 0; k < d; ++k)
        if (c[k].v) F.axpy(v, c[k], K[k]);
      int total = 0;
      auto B = graded_spin(F, moves, g, static_cast<int>(w), v, M.dim, total);
      if (total < M.dim) {
        out.simple = false;
        if (M.dim <= 4 * opt.dense_limit) {
          std::vector<Vec> basis;
          for (std::size_t u = 0; u < B.size(); ++u)
            for (const auto& r : B[u].rows()) {
              Vec full(M.dim);
              for (std::size_t j = 0; j < r.size(); ++j) full[g.members[u][j]] = r[j];
              basis.push_back(std::move(full));
            }
          out.proper_submodule_basis = std::move(basis);
        }
        return out;
      }
    } while (line.next());
  }
  if (min_inv < 0) throw FalsifiedError("no highest-weight vector found");
  out.simple = true;
  if (min_inv == 1)
    out.endomorphism_dim = 1;
  else if (M.dim <= 40)
    out.endomorphism_dim = commutant_dim(F, M.generator_matrices(), M.dim);
  else
    out.endomorphism_dim = min_inv;  // upper bound
  return out;
}

SimplicityWitness is_simple(const ModuleRep& M, const OracleOptions& opt) {
  const auto gens = M.generator_matrices();
  if (M.dim <= opt.dense_limit)
    if (auto w = norton_test(M.field, gens, M.dim, opt)) return *w;
  return weight_spin_test(M, opt);
}

}  // namespace bv

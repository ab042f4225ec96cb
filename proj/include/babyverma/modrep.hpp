#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "babyverma/chevalley.hpp"
#include "babyverma/envalg.hpp"
#include "babyverma/linalg.hpp"
#include "babyverma/rootsys.hpp"

namespace bv {

// Highest weight by its values x_i = lambda(h_i).
struct Weight {
  std::vector<Elem> x;

  // lambda(h_a) = sum k_i x_i.
  Elem on_coroot(const Field& F, const RootSystem& sys, int alpha) const;
  // x_i^p - x_i = chi(h_i)^p for every i.
  bool compatible(const Field& F, const Character& chi) const;
};

// All weights compatible with chi over F, in lexicographic order of the
// element indices. Empty when some x^p - x = chi(h_i)^p has no solution in F.
std::vector<Weight> compatible_weights(const Field& F, const Character& chi);

struct BasisEntry {
  std::vector<std::uint8_t> exponents;  // over ModuleRep::free_roots
  int levi_index = 0;
};

// A finite-dimensional module given by sparse action matrices per basis label.
struct ModuleRep {
  Field field;
  std::shared_ptr<const StructureConstants> sc;
  int dim = 0;
  std::vector<SparseMatrix> action;  // indexed by label; empty (0 x 0) when absent
  std::vector<int> free_roots;
  std::vector<BasisEntry> basis;
  int highest_vector = 0;
  std::vector<int> generators;  // labels generating the acting algebra

  bool has(int label) const { return label < static_cast<int>(action.size()) && action[label].cols == dim; }
  const SparseMatrix& matrix(int label) const { return action.at(label); }
  // Matrices of the generators, for the simplicity oracle.
  std::vector<SparseMatrix> generator_matrices() const;
};

// Everything fixed for one (type, p^e, chi, I).
struct InductionContext {
  Field field;
  std::shared_ptr<const StructureConstants> sc;
  Character chi;
  ParabolicData pd;

  // Validates chi against pd and the field against the type.
  static InductionContext make(Field F, std::shared_ptr<const StructureConstants> sc, Character chi,
                               std::vector<int> I);
  const RootSystem& system() const { return sc->system(); }
};

using SparseVec = std::vector<std::pair<std::uint32_t, Elem>>;

// Lazily evaluated action on u_chi(s) (x) V where s is spanned by the f's of
// `free_roots` (ascending height) and V is a module for the remaining labels.
// Basis index of f^a (x) v_j is j + inner_dim * sum_i a_i p^i.
class InducedAction {
 public:
  // inner[label] is the action on V (inner_dim square) or empty for zero.
  InducedAction(Field F, std::shared_ptr<const StructureConstants> sc, Character chi, std::vector<int> free_roots,
                int inner_dim, std::vector<DenseMatrix> inner);

  std::uint64_t dim() const { return dim_; }
  int inner_dim() const { return inner_dim_; }
  const std::vector<int>& free_roots() const { return free_; }
  const StructureConstants& constants() const { return *sc_; }
  const Field& field() const { return F_; }
  const SparseVec& act(int label, std::uint32_t b);
  SparseVec act(int label, const SparseVec& v);
  BasisEntry decode(std::uint32_t b) const;
  std::size_t memo_size() const { return memo_.size(); }

 private:
  SparseVec act_lie(const std::vector<std::pair<int, Elem>>& y, std::uint32_t b);
  SparseVec compute(int label, std::uint32_t b);

  Field F_;
  std::shared_ptr<const StructureConstants> sc_;
  Character chi_;
  std::vector<int> free_;
  std::vector<int> free_pos_;  // label -> exponent position, -1 if not a free f
  int inner_dim_;
  std::vector<DenseMatrix> inner_;
  std::uint64_t dim_ = 0;
  std::vector<std::uint64_t> stride_;
  std::vector<Elem> binom_;
  std::unordered_map<std::uint64_t, SparseVec> memo_;
};

// Adds c * x into acc (both sorted by index); result sorted with no zeros.
void axpy_sparse(const Field& F, SparseVec& acc, Elem c, const SparseVec& x);

struct ModuleOptions {
  std::uint64_t size_bound = 20000;
  std::uint64_t seed = 0x5eed;
  int dense_oracle_limit = 400;
};

// The simple u_chi(p_I)-module generated by a maximal vector of weight lambda:
// head of the Levi baby Verma module, verified absolutely simple. Its
// highest vector is basis vector 0. Throws ConfigError when lambda is not
// compatible with chi and FalsifiedError when the computed head is not
// absolutely simple.
ModuleRep levi_simple(const InductionContext& ctx, const Weight& lambda, const ModuleOptions& opt = {});

// Action engine for Z_I(lambda) = u_chi(g) (x)_{u_chi(p_I)} L.
InducedAction induced_action(const InductionContext& ctx, const ModuleRep& L);
// Materialised Z_I(lambda); ResourceError beyond opt.size_bound.
ModuleRep induce(const InductionContext& ctx, const ModuleRep& L, const ModuleOptions& opt = {});
std::uint64_t induced_dim(const InductionContext& ctx, const ModuleRep& L);

// R^I(lambda): e_{b1}^{p-1}...e_{bk}^{p-1} f_{b1}^{p-1}...f_{bk}^{p-1} (1 (x) v) = R (1 (x) v).
// Throws FalsifiedError when the image is not a multiple of 1 (x) v.
Elem r_by_straightening(InducedAction& Z);
Elem r_by_straightening(const InductionContext& ctx, const Weight& lambda, const ModuleOptions& opt = {});

// Commutator and reduced-algebra identities of a module; empty when all hold,
// otherwise a description of the first failure. Checks every pair of
// provided labels.
std::string check_module_relations(const ModuleRep& M, const Character& chi);

// Whether the submodule generated by f_{b1}^{p-1}...f_{bk}^{p-1} (x) v is everything.
bool top_vector_generates(const ModuleRep& Z);

// Text dump: "%%babyverma <label> <dim> <nnz>" then 1-based "row col value" lines.
std::string dump_matrix(const ModuleRep& M, int label);

}  // namespace bv

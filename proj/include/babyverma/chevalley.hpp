#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "babyverma/field.hpp"
#include "babyverma/linalg.hpp"
#include "babyverma/rootsys.hpp"

namespace bv {

// Throws ConfigError unless p is a good prime for the type (p odd for type A).
void require_good_prime(RootKind kind, int p);
bool is_good_prime(RootKind kind, int p);

enum class LabelKind { E, F, H };

// Integer combination of basis labels.
using IntCombo = std::vector<std::pair<int, int>>;

// Chevalley basis {x_a : a in Phi} u {h_i} with integer structure constants
// fixed by extraspecial pairs (positive value on each extraspecial pair).
//
// Basis labels are integers: E(a) = x_a for 0 <= a < t, F(a) = x_{-a} at
// t + a, H(i) at 2t + i. With this choice [E(a), F(a)] = h_a.
class StructureConstants {
 public:
  explicit StructureConstants(std::shared_ptr<const RootSystem> sys);

  const RootSystem& system() const { return *sys_; }
  std::shared_ptr<const RootSystem> system_ptr() const { return sys_; }
  int t() const { return t_; }
  int rank() const { return l_; }
  int dim() const { return 2 * t_ + l_; }

  int E(int a) const { return a; }
  int F(int a) const { return t_ + a; }
  int H(int i) const { return 2 * t_ + i; }
  LabelKind kind(int label) const {
    return label < t_ ? LabelKind::E : label < 2 * t_ ? LabelKind::F : LabelKind::H;
  }
  // Root index for E/F labels, simple index for H labels.
  int index(int label) const { return label < t_ ? label : label < 2 * t_ ? label - t_ : label - 2 * t_; }
  // "e[11]", "f[01]", "h[2]" (h indices 1-based).
  std::string name(int label) const;

  // N_{a,b} for positive roots a, b (0 when a + b is not a root).
  int n_pos(int a, int b) const { return npos_[a * t_ + b]; }
  // N_{a,-b} for positive roots a, b (0 when a - b is not a nonzero root).
  int n_mixed(int a, int b) const { return nmix_[a * t_ + b]; }

  const IntCombo& bracket(int x, int y) const { return table_[x * dim() + y]; }
  IntCombo bracket(const IntCombo& x, const IntCombo& y) const;
  // Bracket reduced into a field, as sparse (label, value) pairs.
  std::vector<std::pair<int, Elem>> bracket_mod(const Field& F, int x, int y) const;
  // The restricted p-map on a basis label: x_a -> 0, h_i -> h_i.
  IntCombo p_power(int label) const;

  // Copy with [x, y] (and [y, x] negated) replaced; for negative controls.
  StructureConstants with_override(int x, int y, IntCombo value) const;

  // CSV with header alpha,beta,target,coefficient over root-vector pairs.
  std::string to_csv() const;

 private:
  std::shared_ptr<const RootSystem> sys_;
  int t_ = 0, l_ = 0;
  std::vector<int> npos_, nmix_;
  std::vector<IntCombo> table_;
};

struct ChevalleyReport {
  bool ok = true;
  std::string failure;  // first counterexample
  long long triples_checked = 0;
  int max_abs_coefficient = 0;
};

// Antisymmetry, Jacobi on all basis triples, the |N_{a,b}| = r+1 law on root
// vectors, and [E(a), F(a)] against the coroot expansion.
ChevalleyReport verify_chevalley(const StructureConstants& sc);

}  // namespace bv

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "babyverma/chevalley.hpp"
#include "babyverma/field.hpp"
#include "babyverma/rootsys.hpp"

namespace bv {

// A p-character with chi(n^+) = 0: values on the simple coroots and on the
// negative root vectors F(a).
struct Character {
  std::vector<Elem> chi_h;  // chi(h_i), length l
  std::vector<Elem> chi_f;  // chi(F(a)), one per positive root

  static Character zero(const RootSystem& sys);
  // chi(h_a) through the coroot expansion.
  Elem h_value(const Field& F, const RootSystem& sys, int alpha) const;
  // Value on a basis label (zero on E labels).
  Elem value(const StructureConstants& sc, int label) const;
  Character semisimple_part() const;
  Character nilpotent_part() const;
  bool is_semisimple() const;
  // Throws ConfigError unless chi(F(b)) = 0 for every complement root b.
  void require_vanishing_on_nilradical(const StructureConstants& sc, const ParabolicData& pd) const;
};

// Exponents indexed by generator slot.
using Monomial = std::vector<std::uint8_t>;

struct PBWElement {
  std::map<Monomial, Elem> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const Field& F, const Monomial& m, Elem c);
  void add(const Field& F, const PBWElement& x, Elem c = Field::one());
  friend bool operator==(const PBWElement&, const PBWElement&) = default;
};

// u_chi(g) with PBW basis prod f^a * prod h^b * prod e^c, exponents < p. The
// order of the f's is configurable; h's and e's follow the canonical order.
//
// Products are memoized per instance. An instance must not be used from two
// threads at once; copies start with an empty cache.
class EnvelopingAlgebra {
 public:
  EnvelopingAlgebra(Field F, std::shared_ptr<const StructureConstants> sc, Character chi,
                    std::vector<int> f_order = {});
  EnvelopingAlgebra(const EnvelopingAlgebra& o);
  EnvelopingAlgebra& operator=(const EnvelopingAlgebra&) = delete;

  const Field& field() const { return F_; }
  const StructureConstants& constants() const { return *sc_; }
  const Character& character() const { return chi_; }
  int slot(int label) const { return slot_of_[label]; }
  int label_at(int slot) const { return label_at_[slot]; }

  PBWElement one() const;
  PBWElement scalar(Elem c) const;
  PBWElement generator(int label) const;
  // x_{l1}^{a1} x_{l2}^{a2} ... in the given factor order (straightened).
  PBWElement word(const std::vector<std::pair<int, int>>& factors) const;
  PBWElement multiply(const PBWElement& x, const PBWElement& y) const;
  PBWElement commutator(const PBWElement& x, const PBWElement& y) const;
  PBWElement subtract(const PBWElement& x, const PBWElement& y) const;
  // Degree-zero coefficient when x is a scalar multiple of one.
  std::optional<Elem> as_scalar(const PBWElement& x) const;

  // Terms joined by " + ", each "c f[b]^a h[i]^b e[g]^c" with exponents > 1
  // written explicitly; "0" for the zero element.
  std::string format(const PBWElement& x) const;

  std::size_t cache_size() const { return cache_->size(); }

 private:
  PBWElement gen_times(int label, const Monomial& m) const;
  PBWElement left_multiply(int label, const PBWElement& x) const;
  std::vector<std::pair<int, Elem>> ad(int w, const std::vector<std::pair<int, Elem>>& y) const;

  Field F_;
  std::shared_ptr<const StructureConstants> sc_;
  Character chi_;
  std::vector<int> slot_of_, label_at_;
  std::vector<Elem> binom_;  // binom_[a * p + k] = C(a, k) mod p
  mutable std::shared_ptr<std::unordered_map<std::string, PBWElement>> cache_;
};

// Product of f_g^{p-1} over the extended alpha-string through beta, in string order.
PBWElement ftilde(const EnvelopingAlgebra& U, int alpha, int beta);
// [e_alpha, ftilde] == 0.
bool ftilde_commutes(const EnvelopingAlgebra& U, int alpha, int beta);

// Product of f_b^{p-1} over the nilradical roots in the given order.
PBWElement f_product(const EnvelopingAlgebra& U, const std::vector<int>& roots);
// Canonical-order product over pd.complement.
PBWElement full_f_product(const EnvelopingAlgebra& U, const ParabolicData& pd);
// c with (product in permuted order) = c * (canonical product); perm lists
// positions into pd.complement. Throws FalsifiedError when not proportional.
Elem reorder_constant(const EnvelopingAlgebra& U, const ParabolicData& pd, const std::vector<int>& perm);
// [e_a, F] = [f_a, F] = 0 for all a in Phi_I^+, F the canonical full product.
bool levi_commutes_with_product(const EnvelopingAlgebra& U, const ParabolicData& pd);
// Whether [x, y] vanishes for a basis label x.
bool commutes_with(const EnvelopingAlgebra& U, int label, const PBWElement& y);

// Inserting f_{order[k]} at position `insert_at` into prod f_{order[j]}^{exps[j]}
// gives zero when every exponent at height >= ht(order[k]) equals p - 1.
// Returns true when the product vanishes.
bool insertion_vanishes(const EnvelopingAlgebra& U, const std::vector<int>& order, const std::vector<int>& exps, int k,
                   int insert_at);

}  // namespace bv

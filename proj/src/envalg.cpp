#include "babyverma/envalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "babyverma/errors.hpp"

namespace bv {

Character Character::zero(const RootSystem& sys) {
  Character c;
  c.chi_h.assign(sys.rank(), Field::zero());
  c.chi_f.assign(sys.num_positive(), Field::zero());
  return c;
}

Elem Character::h_value(const Field& F, const RootSystem& sys, int alpha) const {
  Elem s{};
  const auto& k = sys.coroot_coeffs(alpha);
  for (std::size_t i = 0; i < k.size(); ++i) s = F.add(s, F.mul(F.from_int(k[i]), chi_h[i]));
  return s;
}

Elem Character::value(const StructureConstants& sc, int label) const {
  switch (sc.kind(label)) {
    case LabelKind::E: return Field::zero();
    case LabelKind::F: return chi_f[sc.index(label)];
    case LabelKind::H: return chi_h[sc.index(label)];
  }
  return Field::zero();
}

Character Character::semisimple_part() const {
  Character c = *this;
  std::fill(c.chi_f.begin(), c.chi_f.end(), Field::zero());
  return c;
}

Character Character::nilpotent_part() const {
  Character c = *this;
  std::fill(c.chi_h.begin(), c.chi_h.end(), Field::zero());
  return c;
}

bool Character::is_semisimple() const {
  return std::all_of(chi_f.begin(), chi_f.end(), [](Elem e) { return e.v == 0; });
}

void Character::require_vanishing_on_nilradical(const StructureConstants& sc, const ParabolicData& pd) const {
  for (int b : pd.complement)
    if (chi_f[b].v)
      throw ConfigError("chi must vanish on the nilradical u', but chi(" + sc.name(sc.F(b)) + ") != 0");
}

void PBWElement::add(const Field& F, const Monomial& m, Elem c) {
  if (!c.v) return;
  auto [it, fresh] = terms.try_emplace(m, c);
  if (fresh) return;
  it->second = F.add(it->second, c);
  if (!it->second.v) terms.erase(it);
}

void PBWElement::add(const Field& F, const PBWElement& x, Elem c) {
  if (!c.v) return;
  for (const auto& [m, v] : x.terms) add(F, m, F.mul(v, c));
}

EnvelopingAlgebra::EnvelopingAlgebra(Field F, std::shared_ptr<const StructureConstants> sc, Character chi,
                                     std::vector<int> f_order)
    : F_(std::move(F)), sc_(std::move(sc)), chi_(std::move(chi)),
      cache_(std::make_shared<std::unordered_map<std::string, PBWElement>>()) {
  const int t = sc_->t(), l = sc_->rank();
  if (f_order.empty()) {
    f_order.resize(t);
    std::iota(f_order.begin(), f_order.end(), 0);
  }
  std::vector<int> check = f_order;
  std::sort(check.begin(), check.end());
  for (int i = 0; i < t; ++i)
    if (static_cast<int>(check.size()) != t || check[i] != i) throw DomainError("f-order is not a permutation of the positive roots");
  if (static_cast<int>(chi_.chi_h.size()) != l || static_cast<int>(chi_.chi_f.size()) != t)
    throw DomainError("character has the wrong shape");
  for (int s = 0; s < t; ++s) label_at_.push_back(sc_->F(f_order[s]));
  for (int i = 0; i < l; ++i) label_at_.push_back(sc_->H(i));
  for (int a = 0; a < t; ++a) label_at_.push_back(sc_->E(a));
  slot_of_.assign(sc_->dim(), 0);
  for (int s = 0; s < sc_->dim(); ++s) slot_of_[label_at_[s]] = s;

  const int p = F_.p();
  binom_.assign(p * p, Field::zero());
  for (int a = 0; a < p; ++a) {
    binom_[a * p] = Field::one();
    for (int k = 1; k <= a; ++k)
      binom_[a * p + k] = F_.add(binom_[(a - 1) * p + k - 1], k <= a - 1 ? binom_[(a - 1) * p + k] : Field::zero());
  }
}

EnvelopingAlgebra::EnvelopingAlgebra(const EnvelopingAlgebra& o)
    : F_(o.F_), sc_(o.sc_), chi_(o.chi_), slot_of_(o.slot_of_), label_at_(o.label_at_), binom_(o.binom_),
      cache_(std::make_shared<std::unordered_map<std::string, PBWElement>>()) {}

PBWElement EnvelopingAlgebra::one() const { return scalar(Field::one()); }

PBWElement EnvelopingAlgebra::scalar(Elem c) const {
  PBWElement x;
  x.add(F_, Monomial(sc_->dim(), 0), c);
  return x;
}

PBWElement EnvelopingAlgebra::generator(int label) const { return gen_times(label, Monomial(sc_->dim(), 0)); }

PBWElement EnvelopingAlgebra::word(const std::vector<std::pair<int, int>>& factors) const {
  PBWElement x = one();
  for (auto it = factors.rbegin(); it != factors.rend(); ++it)
    for (int r = 0; r < it->second; ++r) x = left_multiply(it->first, x);
  return x;
}

std::vector<std::pair<int, Elem>> EnvelopingAlgebra::ad(int w, const std::vector<std::pair<int, Elem>>& y) const {
  std::vector<Elem> acc(sc_->dim());
  for (auto [lab, c] : y)
    for (auto [tgt, v] : sc_->bracket_mod(F_, w, lab)) acc[tgt] = F_.add(acc[tgt], F_.mul(c, v));
  std::vector<std::pair<int, Elem>> out;
  for (int i = 0; i < sc_->dim(); ++i)
    if (acc[i].v) out.emplace_back(i, acc[i]);
  return out;
}

PBWElement EnvelopingAlgebra::left_multiply(int label, const PBWElement& x) const {
  PBWElement out;
  for (const auto& [m, c] : x.terms) out.add(F_, gen_times(label, m), c);
  return out;
}

PBWElement EnvelopingAlgebra::gen_times(int label, const Monomial& m) const {
  const int n = static_cast<int>(m.size());
  const int sg = slot(label);
  int first = 0;
  while (first < n && !m[first]) ++first;
  if (sg < first) {
    Monomial r = m;
    r[sg] = 1;
    PBWElement out;
    if (F_.p() > 1) out.add(F_, r, Field::one());
    return out;
  }

  std::string key(reinterpret_cast<const char*>(m.data()), m.size());
  key.push_back(static_cast<char>(label & 0xff));
  key.push_back(static_cast<char>(label >> 8));
  if (auto it = cache_->find(key); it != cache_->end()) return it->second;

  const int p = F_.p();
  PBWElement out;
  if (sg == first) {
    Monomial r = m;
    if (r[sg] + 1 < p) {
      r[sg] += 1;
      out.add(F_, r, Field::one());
    } else {
      // x^p = x^[p] + chi(x)^p
      r[sg] = 0;
      out.add(F_, r, F_.pow(chi_.value(*sc_, label), p));
      if (sc_->kind(label) == LabelKind::H) {
        Monomial h = r;
        h[sg] = 1;
        out.add(F_, h, Field::one());
      }
    }
  } else {
    // z w^a = sum_k (-1)^k C(a,k) w^{a-k} ad_w^k(z)
    const int w = label_at(first);
    const int a = m[first];
    Monomial rest = m;
    rest[first] = 0;
    std::vector<std::pair<int, Elem>> y = {{label, Field::one()}};
    for (int k = 0; k <= a && !y.empty(); ++k) {
      Elem coef = binom_[a * p + k];
      if (k % 2) coef = F_.neg(coef);
      PBWElement term;
      for (auto [lab, c] : y) term.add(F_, gen_times(lab, rest), c);
      for (int r = 0; r < a - k; ++r) term = left_multiply(w, term);
      out.add(F_, term, coef);
      y = ad(w, y);
    }
  }
  cache_->emplace(std::move(key), out);
  return out;
}

PBWElement EnvelopingAlgebra::multiply(const PBWElement& x, const PBWElement& y) const {
  PBWElement out;
  for (const auto& [m, c] : x.terms) {
    PBWElement acc = y;
    for (int s = static_cast<int>(m.size()) - 1; s >= 0; --s)
      for (int r = 0; r < m[s]; ++r) acc = left_multiply(label_at(s), acc);
    out.add(F_, acc, c);
  }
  return out;
}

PBWElement EnvelopingAlgebra::subtract(const PBWElement& x, const PBWElement& y) const {
  PBWElement out = x;
  out.add(F_, y, F_.neg(Field::one()));
  return out;
}

PBWElement EnvelopingAlgebra::commutator(const PBWElement& x, const PBWElement& y) const {
  return subtract(multiply(x, y), multiply(y, x));
}

std::optional<Elem> EnvelopingAlgebra::as_scalar(const PBWElement& x) const {
  if (x.terms.empty()) return Field::zero();
  if (x.terms.size() != 1) return std::nullopt;
  const auto& [m, c] = *x.terms.begin();
  if (std::any_of(m.begin(), m.end(), [](std::uint8_t e) { return e != 0; })) return std::nullopt;
  return c;
}

std::string EnvelopingAlgebra::format(const PBWElement& x) const {
  if (x.terms.empty()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (const auto& [m, c] : x.terms) {
    if (!first_term) os << " + ";
    first_term = false;
    os << F_.format(c);
    for (int s = 0; s < static_cast<int>(m.size()); ++s) {
      if (!m[s]) continue;
      os << ' ' << sc_->name(label_at(s));
      if (m[s] > 1) os << '^' << int(m[s]);
    }
  }
  return os.str();
}

PBWElement ftilde(const EnvelopingAlgebra& U, int alpha, int beta) {
  const auto& sc = U.constants();
  auto ext = extended_alpha_string(sc.system(), alpha, beta);
  std::vector<std::pair<int, int>> factors;
  for (int g : ext.members) factors.emplace_back(sc.F(g), U.field().p() - 1);
  return U.word(factors);
}

bool ftilde_commutes(const EnvelopingAlgebra& U, int alpha, int beta) {
  return commutes_with(U, U.constants().E(alpha), ftilde(U, alpha, beta));
}

bool commutes_with(const EnvelopingAlgebra& U, int label, const PBWElement& y) {
  return U.commutator(U.generator(label), y).is_zero();
}

PBWElement f_product(const EnvelopingAlgebra& U, const std::vector<int>& roots) {
  std::vector<std::pair<int, int>> factors;
  for (int b : roots) factors.emplace_back(U.constants().F(b), U.field().p() - 1);
  return U.word(factors);
}

PBWElement full_f_product(const EnvelopingAlgebra& U, const ParabolicData& pd) {
  U.character().require_vanishing_on_nilradical(U.constants(), pd);
  return f_product(U, pd.complement);
}

Elem reorder_constant(const EnvelopingAlgebra& U, const ParabolicData& pd, const std::vector<int>& perm) {
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i)
    if (sorted[i] != i || sorted.size() != pd.complement.size()) throw DomainError("not a permutation of the nilradical roots");
  PBWElement canon = full_f_product(U, pd);
  std::vector<int> roots;
  for (int i : perm) roots.push_back(pd.complement[i]);
  PBWElement permuted = f_product(U, roots);
  if (canon.terms.size() != 1) throw FalsifiedError("canonical f-product is not a single monomial");
  const auto& [m, c] = *canon.terms.begin();
  if (permuted.terms.size() != 1 || permuted.terms.begin()->first != m)
    throw FalsifiedError("reordered f-product is not proportional to the canonical one");
  return U.field().div(permuted.terms.begin()->second, c);
}

bool levi_commutes_with_product(const EnvelopingAlgebra& U, const ParabolicData& pd) {
  const auto& sc = U.constants();
  PBWElement F = full_f_product(U, pd);
  for (int a : pd.phi_I_plus)
    if (!commutes_with(U, sc.E(a), F) || !commutes_with(U, sc.F(a), F)) return false;
  return true;
}

bool insertion_vanishes(const EnvelopingAlgebra& U, const std::vector<int>& order, const std::vector<int>& exps, int k,
                   int insert_at) {
  const auto& sc = U.constants();
  const RootSystem& S = sc.system();
  if (exps.size() != order.size() || k < 0 || k >= static_cast<int>(order.size()) || insert_at < 0 ||
      insert_at > static_cast<int>(order.size()))
    throw DomainError("bad insertion data");
  const int h = S.root(order[k]).height;
  for (std::size_t j = 0; j < order.size(); ++j)
    if (S.root(order[j]).height >= h && exps[j] != U.field().p() - 1)
      throw DomainError("exponents at height >= ht(alpha_k) must be p-1");
  std::vector<std::pair<int, int>> factors;
  for (int j = 0; j <= static_cast<int>(order.size()); ++j) {
    if (j == insert_at) factors.emplace_back(sc.F(order[k]), 1);
    if (j < static_cast<int>(order.size())) factors.emplace_back(sc.F(order[j]), exps[j]);
  }
  return U.word(factors).is_zero();
}

}  // namespace bv

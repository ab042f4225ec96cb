#include "babyverma/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>

#include "babyverma/errors.hpp"
#include "json.hpp"

namespace bv {

char kind_letter(RootKind k) { return "ABCDEFG"[static_cast<int>(k)]; }

Root::Root(std::vector<int> c) : coords(std::move(c)) {
  height = std::accumulate(coords.begin(), coords.end(), 0);
}

bool Root::positive() const {
  return height > 0 && std::all_of(coords.begin(), coords.end(), [](int x) { return x >= 0; });
}

std::pair<RootKind, int> parse_type(std::string_view text) {
  if (text.size() < 2) throw ConfigError("malformed root system type '" + std::string(text) + "'");
  char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (c < 'A' || c > 'G') throw ConfigError("unknown root system kind '" + std::string(1, text[0]) + "'");
  int rank = 0;
  for (char d : text.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(d)) || rank > 100)
      throw ConfigError("malformed root system type '" + std::string(text) + "'");
    rank = rank * 10 + (d - '0');
  }
  return {static_cast<RootKind>(c - 'A'), rank};
}

std::vector<std::vector<int>> cartan_matrix(RootKind kind, int l) {
  std::vector<std::vector<int>> a(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (kind) {
    case RootKind::A:
      for (int i = 0; i + 1 < l; ++i) link(i, i + 1);
      break;
    case RootKind::B:
      for (int i = 0; i + 1 < l; ++i) link(i, i + 1);
      a[l - 1][l - 2] = -2;
      break;
    case RootKind::C:
      for (int i = 0; i + 1 < l; ++i) link(i, i + 1);
      a[l - 2][l - 1] = -2;
      break;
    case RootKind::D:
      for (int i = 0; i + 2 < l; ++i) link(i, i + 1);
      link(l - 3, l - 1);
      break;
    case RootKind::E:
      // Bourbaki: 1-3-4-5-6-..., 2 attached to 4
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < l; ++i) link(i, i + 1);
      break;
    case RootKind::F:
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a[2][1] = -2;
      break;
    case RootKind::G:
      a[0][1] = -3;
      a[1][0] = -1;
      break;
  }
  return a;
}

namespace {

void check_supported(RootKind kind, int rank, int max_rank) {
  bool ok = false;
  switch (kind) {
    case RootKind::A: ok = rank >= 1; break;
    case RootKind::B: ok = rank >= 2; break;
    case RootKind::C: ok = rank >= 2; break;
    case RootKind::D: ok = rank >= 4; break;
    case RootKind::E: ok = rank == 6; break;
    case RootKind::F: ok = rank == 4; break;
    case RootKind::G: ok = rank == 2; break;
  }
  std::string label = std::string(1, kind_letter(kind)) + std::to_string(rank);
  if (!ok) throw ConfigError("unsupported root system type " + label);
  if (kind != RootKind::G && rank > max_rank)
    throw ConfigError("type " + label + " exceeds the rank bound " + std::to_string(max_rank));
}

bool canonical_less(const Root& a, const Root& b) {
  if (a.height != b.height) return a.height < b.height;
  return a.coords > b.coords;
}

}  // namespace

RootSystem build_root_system(RootKind kind, int rank, int max_rank) {
  check_supported(kind, rank, max_rank);
  RootSystem s;
  s.kind_ = kind;
  s.rank_ = rank;
  s.cartan_ = cartan_matrix(kind, rank);
  const auto& A = s.cartan_;
  const int l = rank;

  // d_i proportional to (alpha_i, alpha_i), from d_i A_ij = d_j A_ji.
  std::vector<int> d(l, 0);
  d[0] = 6;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j)
        if (d[i] && !d[j] && A[i][j] != 0) {
          d[j] = d[i] * A[i][j] / A[j][i];
          changed = true;
        }
  }
  int dmin = *std::min_element(d.begin(), d.end());
  s.simple_len2_.resize(l);
  for (int i = 0; i < l; ++i) s.simple_len2_[i] = 2 * d[i] / dmin;

  // Closure by strings, height by height.
  std::set<std::vector<int>> known;
  std::vector<Root> layer;
  for (int i = 0; i < l; ++i) {
    std::vector<int> c(l, 0);
    c[i] = 1;
    known.insert(c);
    layer.emplace_back(c);
  }
  std::vector<Root> all = layer;
  while (!layer.empty()) {
    std::set<std::vector<int>> next;
    for (const Root& r : layer)
      for (int i = 0; i < l; ++i) {
        int down = 0;
        std::vector<int> c = r.coords;
        while (true) {
          c[i] -= 1;
          if (!known.count(c)) break;
          ++down;
        }
        int pair = 0;
        for (int j = 0; j < l; ++j) pair += r.coords[j] * A[i][j];
        if (down - pair > 0) {
          std::vector<int> up = r.coords;
          up[i] += 1;
          next.insert(up);
        }
      }
    layer.clear();
    for (const auto& c : next) {
      known.insert(c);
      layer.emplace_back(c);
      all.emplace_back(c);
    }
  }
  std::sort(all.begin(), all.end(), canonical_less);
  s.roots_ = std::move(all);
  for (int i = 0; i < static_cast<int>(s.roots_.size()); ++i) s.index_[s.roots_[i].coords] = i;

  // Coroots: w(alpha_j)^vee = w(alpha_j^vee), walking simple reflections.
  const int t = s.num_positive();
  s.coroots_.assign(t, {});
  std::deque<int> queue;
  for (int i = 0; i < l; ++i) {
    s.coroots_[i].assign(l, 0);
    s.coroots_[i][i] = 1;
    queue.push_back(i);
  }
  while (!queue.empty()) {
    int idx = queue.front();
    queue.pop_front();
    const auto& r = s.roots_[idx].coords;
    const auto& k = s.coroots_[idx];
    for (int i = 0; i < l; ++i) {
      int ri = 0, ki = 0;
      for (int j = 0; j < l; ++j) {
        ri += r[j] * A[i][j];
        ki += k[j] * A[j][i];
      }
      std::vector<int> r2 = r;
      r2[i] -= ri;
      auto it = s.index_.find(r2);
      if (it == s.index_.end() || !s.coroots_[it->second].empty()) continue;
      std::vector<int> k2 = k;
      k2[i] -= ki;
      s.coroots_[it->second] = std::move(k2);
      queue.push_back(it->second);
    }
  }
  return s;
}

RootSystem build_root_system(std::string_view type, int max_rank) {
  auto [kind, rank] = parse_type(type);
  return build_root_system(kind, rank, max_rank);
}

std::string RootSystem::label() const { return std::string(1, kind_letter(kind_)) + std::to_string(rank_); }

std::optional<int> RootSystem::find(const std::vector<int>& coords) const {
  auto it = index_.find(coords);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool RootSystem::is_root(const std::vector<int>& coords) const {
  if (index_.count(coords)) return true;
  std::vector<int> neg(coords.size());
  std::transform(coords.begin(), coords.end(), neg.begin(), [](int x) { return -x; });
  return index_.count(neg) > 0;
}

int RootSystem::simple_pairing(const std::vector<int>& beta, int i) const {
  int s = 0;
  for (int j = 0; j < rank_; ++j) s += beta[j] * cartan_[i][j];
  return s;
}

int RootSystem::pairing(const std::vector<int>& beta, int alpha_idx) const {
  const auto& k = coroots_[alpha_idx];
  int s = 0;
  for (int i = 0; i < rank_; ++i)
    if (k[i]) s += k[i] * simple_pairing(beta, i);
  return s;
}

int RootSystem::inner(const std::vector<int>& a, const std::vector<int>& b) const {
  // (alpha_i, alpha_j) = A_ij |alpha_i|^2 / 2
  int s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < rank_; ++j) s += a[i] * b[j] * cartan_[i][j] * simple_len2_[i] / 2;
  }
  return s;
}

int RootSystem::length2(const std::vector<int>& coords) const { return inner(coords, coords); }

namespace {

std::vector<int> shifted(const std::vector<int>& c, int i, int m) {
  std::vector<int> r = c;
  r[i] += m;
  return r;
}

void check_pair(const RootSystem& sys, int alpha, int beta) {
  if (!sys.is_simple(alpha)) throw DomainError("alpha must be a simple root");
  if (beta < 0 || beta >= sys.num_positive()) throw DomainError("beta is not a positive root");
  if (beta == alpha) throw DomainError("beta must differ from alpha");
}

}  // namespace

AlphaString alpha_string(const RootSystem& sys, int alpha, int beta) {
  check_pair(sys, alpha, beta);
  std::vector<int> top = sys.root(beta).coords;
  while (sys.find(shifted(top, alpha, 1))) top[alpha] += 1;
  AlphaString s;
  s.alpha = alpha;
  s.base = *sys.find(top);
  for (auto c = top; auto idx = sys.find(c); c[alpha] -= 1) s.members.push_back(*idx);
  s.isolated = s.members.size() == 1;
  return s;
}

ExtendedAlphaString extended_alpha_string(const RootSystem& sys, int alpha, int beta) {
  AlphaString plain = alpha_string(sys, alpha, beta);
  if (plain.isolated) throw DomainError("extended strings need a non-isolated alpha-string");
  ExtendedAlphaString e;
  e.alpha = alpha;
  e.base = plain.base;
  const auto& b = sys.root(plain.base).coords;
  const int hmax = sys.max_height();
  for (int l = hmax; l >= 1; --l)
    for (int m = hmax; m >= -hmax; --m) {
      std::vector<int> c(b.size());
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = l * b[i];
      c[alpha] += m;
      if (auto idx = sys.find(c)) e.members.push_back(*idx);
    }
  return e;
}

bool ParabolicData::in_I(int simple) const { return std::binary_search(I.begin(), I.end(), simple); }

bool ParabolicData::in_levi(int root_idx) const {
  return std::find(phi_I_plus.begin(), phi_I_plus.end(), root_idx) != phi_I_plus.end();
}

bool ParabolicData::in_complement(int root_idx) const {
  return std::find(complement.begin(), complement.end(), root_idx) != complement.end();
}

ParabolicData parabolic_data(const RootSystem& sys, std::vector<int> I) {
  std::sort(I.begin(), I.end());
  if (std::adjacent_find(I.begin(), I.end()) != I.end()) throw DomainError("I has repeated simple roots");
  for (int i : I)
    if (i < 0 || i >= sys.rank()) throw DomainError("I contains an index outside the simple roots");
  if (static_cast<int>(I.size()) == sys.rank()) throw DomainError("I must be a proper subset of the simple roots");
  ParabolicData pd;
  pd.I = std::move(I);
  for (int idx = 0; idx < sys.num_positive(); ++idx) {
    const auto& c = sys.root(idx).coords;
    bool levi = true;
    for (int i = 0; i < sys.rank(); ++i)
      if (c[i] && !pd.in_I(i)) levi = false;
    (levi ? pd.phi_I_plus : pd.complement).push_back(idx);
  }
  pd.t = sys.num_positive();
  pd.s = static_cast<int>(pd.phi_I_plus.size());
  pd.k = pd.t - pd.s;
  if (!is_closed_subset(sys, pd.complement)) throw FalsifiedError("complement of a parabolic is not closed");
  return pd;
}

std::vector<int> alpha_order(const RootSystem& sys, const ParabolicData& pd, int alpha) {
  if (!pd.in_I(alpha)) throw DomainError("alpha must belong to I");
  std::vector<std::vector<int>> blocks;
  for (int b : pd.complement) {
    if (sys.find(shifted(sys.root(b).coords, alpha, 1))) continue;
    if (alpha_string(sys, alpha, b).isolated) continue;
    blocks.push_back(extended_alpha_string(sys, alpha, b).members);
  }
  auto contains = [](const std::vector<int>& big, const std::vector<int>& small) {
    return std::all_of(small.begin(), small.end(),
                       [&](int x) { return std::find(big.begin(), big.end(), x) != big.end(); });
  };
  std::vector<std::vector<int>> kept;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < blocks.size() && !dominated; ++j)
      if (i != j && contains(blocks[j], blocks[i]) && (blocks[i].size() < blocks[j].size() || j < i))
        dominated = true;
    if (!dominated) kept.push_back(blocks[i]);
  }
  auto pos = [&](int idx) { return std::find(pd.complement.begin(), pd.complement.end(), idx) - pd.complement.begin(); };
  std::sort(kept.begin(), kept.end(), [&](const auto& a, const auto& b) { return pos(a.back()) < pos(b.back()); });

  std::vector<int> order;
  std::vector<bool> used(sys.num_positive(), false);
  for (const auto& blk : kept)
    for (int x : blk) {
      if (used[x]) throw FalsifiedError("overlapping extended alpha-strings");
      if (!pd.in_complement(x)) throw FalsifiedError("extended alpha-string leaves the nilradical");
      used[x] = true;
      order.push_back(x);
    }
  for (int x : pd.complement)
    if (!used[x]) order.push_back(x);
  return order;
}

bool is_closed_subset(const RootSystem& sys, const std::vector<int>& subset) {
  std::vector<bool> in(sys.num_positive(), false);
  for (int x : subset) in[x] = true;
  for (int a : subset)
    for (int b : subset) {
      std::vector<int> c = sys.root(a).coords;
      for (std::size_t i = 0; i < c.size(); ++i) c[i] += sys.root(b).coords[i];
      if (auto idx = sys.find(c); idx && !in[*idx]) return false;
    }
  return true;
}

int rho_pairing(const RootSystem& sys, int alpha) {
  if (alpha < 0 || alpha >= sys.num_positive()) throw DomainError("alpha is not a positive root");
  const auto& k = sys.coroot_coeffs(alpha);
  return std::accumulate(k.begin(), k.end(), 0);
}

int rho_I_pairing(const RootSystem& sys, const ParabolicData& pd, int alpha) {
  if (alpha < 0 || alpha >= sys.num_positive()) throw DomainError("alpha is not a positive root");
  int twice = 0;
  for (int g : pd.phi_I_plus) twice += sys.pairing(sys.root(g).coords, alpha);
  if (twice % 2) throw FalsifiedError("2 rho_I paired with a coroot is odd");
  return twice / 2;
}

std::string to_json(const RootSystem& sys) {
  nlohmann::json j;
  j["kind"] = std::string(1, kind_letter(sys.kind()));
  j["rank"] = sys.rank();
  j["cartan"] = sys.cartan();
  auto roots = nlohmann::json::array();
  for (const Root& r : sys.positive_roots()) roots.push_back(r.coords);
  j["positive_roots"] = roots;
  return j.dump();
}

std::string root_token(const Root& r) {
  std::string s;
  for (int c : r.coords) s += std::to_string(c);
  return s;
}

int parse_root_token(const RootSystem& sys, std::string_view token) {
  if (static_cast<int>(token.size()) != sys.rank())
    throw ConfigError("root '" + std::string(token) + "' needs " + std::to_string(sys.rank()) + " digits");
  std::vector<int> c;
  for (char ch : token) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) throw ConfigError("malformed root '" + std::string(token) + "'");
    c.push_back(ch - '0');
  }
  auto idx = sys.find(c);
  if (!idx) throw ConfigError("'" + std::string(token) + "' is not a positive root of " + sys.label());
  return *idx;
}

}  // namespace bv

#include "babyverma/chevalley.hpp"

#include <climits>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "babyverma/errors.hpp"

namespace bv {

bool is_good_prime(RootKind kind, int p) {
  if (!is_prime(p) || p == 2) return false;
  switch (kind) {
    case RootKind::A:
    case RootKind::B:
    case RootKind::C:
    case RootKind::D:
      return true;
    case RootKind::E:
    case RootKind::F:
    case RootKind::G:
      return p != 3;
  }
  return false;
}

void require_good_prime(RootKind kind, int p) {
  if (!is_prime(p)) throw ConfigError("p = " + std::to_string(p) + " is not prime");
  if (!is_good_prime(kind, p))
    throw ConfigError("p = " + std::to_string(p) + " is not a good prime for type " + std::string(1, kind_letter(kind)));
}

namespace {

std::vector<int> plus(const std::vector<int>& a, const std::vector<int>& b, int sign = 1) {
  std::vector<int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + sign * b[i];
  return c;
}

std::vector<int> negated(std::vector<int> a) {
  for (int& x : a) x = -x;
  return a;
}

}  // namespace

StructureConstants::StructureConstants(std::shared_ptr<const RootSystem> sys) : sys_(std::move(sys)) {
  const RootSystem& S = *sys_;
  t_ = S.num_positive();
  l_ = S.rank();
  const int t = t_;
  auto coords = [&](int a) -> const std::vector<int>& { return S.root(a).coords; };
  auto len2 = [&](int a) { return S.length2(coords(a)); };

  std::vector<int> sum(t * t, -1);
  for (int a = 0; a < t; ++a)
    for (int b = 0; b < t; ++b)
      if (auto s = S.find(plus(coords(a), coords(b)))) sum[a * t + b] = *s;

  // Extraspecial pair of each non-simple positive root: least r with xi - r positive.
  std::vector<int> ex_r(t, -1);
  for (int xi = 0; xi < t; ++xi)
    for (int r = 0; r < t && ex_r[xi] < 0; ++r)
      if (S.find(plus(coords(xi), coords(r), -1))) ex_r[xi] = r;

  npos_.assign(t * t, INT_MIN);
  std::function<int(int, int)> Npos;
  std::function<int(int, int)> Nmix = [&](int a, int b) -> int {
    if (a == b) return 0;
    auto c = plus(coords(a), coords(b), -1);
    if (auto ci = S.find(c)) {
      int num = -len2(*ci) * Npos(b, *ci);
      if (num % len2(a)) throw FalsifiedError("non-integral structure constant");
      return num / len2(a);
    }
    if (auto ci = S.find(negated(c))) {
      int num = len2(*ci) * Npos(*ci, a);
      if (num % len2(b)) throw FalsifiedError("non-integral structure constant");
      return num / len2(b);
    }
    return 0;
  };
  Npos = [&](int a, int b) -> int {
    int xi = sum[a * t + b];
    if (xi < 0) return 0;
    int& memo = npos_[a * t + b];
    if (memo != INT_MIN) return memo;
    if (a > b) return memo = -Npos(b, a);
    int r1 = ex_r[xi];
    int s1 = *S.find(plus(coords(xi), coords(r1), -1));
    if (a == r1) {
      int p = 0;
      for (auto c = plus(coords(s1), coords(r1), -1); S.is_root(c); c = plus(c, coords(r1), -1)) ++p;
      return memo = p + 1;
    }
    // Four-root identity on (a, b, -r1, -s1).
    long long num = 0, den = 1;
    int nes = Npos(r1, s1);
    auto d1 = plus(coords(b), coords(r1), -1);  // b - r1
    auto d2 = plus(coords(a), coords(r1), -1);  // a - r1
    long long L1 = S.is_root(d1) ? S.length2(d1) : 0;
    long long L2 = S.is_root(d2) ? S.length2(d2) : 0;
    long long A = L1 ? static_cast<long long>(Nmix(b, r1)) * Nmix(a, s1) : 0;
    long long B = L2 ? static_cast<long long>(-Nmix(a, r1)) * Nmix(b, s1) : 0;
    if (L1 && L2) {
      num = A * L2 + B * L1;
      den = L1 * L2;
    } else if (L1) {
      num = A;
      den = L1;
    } else if (L2) {
      num = B;
      den = L2;
    }
    num *= len2(xi);
    den *= nes;
    if (num % den) throw FalsifiedError("non-integral structure constant");
    return memo = static_cast<int>(num / den);
  };

  for (int a = 0; a < t; ++a)
    for (int b = 0; b < t; ++b) npos_[a * t + b] = sum[a * t + b] < 0 ? 0 : Npos(a, b);
  nmix_.assign(t * t, 0);
  for (int a = 0; a < t; ++a)
    for (int b = 0; b < t; ++b) nmix_[a * t + b] = Nmix(a, b);

  const int n = dim();
  table_.assign(n * n, {});
  auto root_bracket = [&](int x, int y) -> IntCombo {
    bool xe = x < t, ye = y < t;
    int a = index(x), b = index(y);
    if (xe && ye) {
      int s = sum[a * t + b];
      return s < 0 ? IntCombo{} : IntCombo{{E(s), n_pos(a, b)}};
    }
    if (!xe && !ye) {
      int s = sum[a * t + b];
      return s < 0 ? IntCombo{} : IntCombo{{F(s), -n_pos(a, b)}};
    }
    int sign = 1;
    if (!xe) {
      std::swap(a, b);
      sign = -1;
    }
    // [x_a, x_{-b}]
    if (a == b) {
      IntCombo h;
      const auto& k = S.coroot_coeffs(a);
      for (int i = 0; i < l_; ++i)
        if (k[i]) h.emplace_back(H(i), sign * k[i]);
      return h;
    }
    int nm = n_mixed(a, b);
    if (!nm) return {};
    auto c = plus(coords(a), coords(b), -1);
    if (auto ci = S.find(c)) return {{E(*ci), sign * nm}};
    return {{F(*S.find(negated(c))), sign * nm}};
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      IntCombo v;
      LabelKind kx = kind(x), ky = kind(y);
      if (kx != LabelKind::H && ky != LabelKind::H) {
        v = root_bracket(x, y);
      } else if (kx == LabelKind::H && ky != LabelKind::H) {
        int w = S.simple_pairing(coords(index(y)), index(x));
        if (ky == LabelKind::F) w = -w;
        if (w) v = {{y, w}};
      } else if (kx != LabelKind::H && ky == LabelKind::H) {
        int w = S.simple_pairing(coords(index(x)), index(y));
        if (kx == LabelKind::F) w = -w;
        if (w) v = {{x, -w}};
      }
      table_[x * n + y] = std::move(v);
    }
}

std::string StructureConstants::name(int label) const {
  switch (kind(label)) {
    case LabelKind::E: return "e[" + root_token(sys_->root(index(label))) + "]";
    case LabelKind::F: return "f[" + root_token(sys_->root(index(label))) + "]";
    case LabelKind::H: return "h[" + std::to_string(index(label) + 1) + "]";
  }
  return {};
}

IntCombo StructureConstants::bracket(const IntCombo& x, const IntCombo& y) const {
  std::vector<long long> acc(dim(), 0);
  for (auto [a, ca] : x)
    for (auto [b, cb] : y)
      for (auto [c, cc] : bracket(a, b)) acc[c] += static_cast<long long>(ca) * cb * cc;
  IntCombo out;
  for (int i = 0; i < dim(); ++i)
    if (acc[i]) out.emplace_back(i, static_cast<int>(acc[i]));
  return out;
}

std::vector<std::pair<int, Elem>> StructureConstants::bracket_mod(const Field& F, int x, int y) const {
  std::vector<std::pair<int, Elem>> out;
  for (auto [c, v] : bracket(x, y))
    if (Elem e = F.from_int(v); e.v) out.emplace_back(c, e);
  return out;
}

IntCombo StructureConstants::p_power(int label) const {
  if (kind(label) == LabelKind::H) return {{label, 1}};
  return {};
}

StructureConstants StructureConstants::with_override(int x, int y, IntCombo value) const {
  StructureConstants c = *this;
  IntCombo neg = value;
  for (auto& [lab, v] : neg) v = -v;
  c.table_[x * dim() + y] = std::move(value);
  c.table_[y * dim() + x] = std::move(neg);
  return c;
}

std::string StructureConstants::to_csv() const {
  std::ostringstream os;
  os << "alpha,beta,target,coefficient\n";
  for (int x = 0; x < 2 * t_; ++x)
    for (int y = 0; y < 2 * t_; ++y)
      for (auto [c, v] : bracket(x, y))
        if (kind(c) != LabelKind::H) os << name(x) << ',' << name(y) << ',' << name(c) << ',' << v << '\n';
  return os.str();
}

ChevalleyReport verify_chevalley(const StructureConstants& sc) {
  ChevalleyReport rep;
  const RootSystem& S = sc.system();
  const int n = sc.dim();
  auto fail = [&](std::string msg) {
    if (rep.ok) {
      rep.ok = false;
      rep.failure = std::move(msg);
    }
  };
  auto single = [](int lab) { return IntCombo{{lab, 1}}; };
  auto negate = [](IntCombo c) {
    for (auto& [l, v] : c) v = -v;
    return c;
  };

  for (int x = 0; x < n && rep.ok; ++x)
    for (int y = 0; y < n && rep.ok; ++y)
      if (sc.bracket(x, y) != negate(sc.bracket(y, x)))
        fail("antisymmetry fails for (" + sc.name(x) + ", " + sc.name(y) + ")");

  for (int x = 0; x < n && rep.ok; ++x)
    for (int y = 0; y < n && rep.ok; ++y)
      for (int z = 0; z < n && rep.ok; ++z) {
        std::vector<long long> acc(n, 0);
        auto add = [&](const IntCombo& c) {
          for (auto [l, v] : c) acc[l] += v;
        };
        add(sc.bracket(single(x), sc.bracket(y, z)));
        add(sc.bracket(single(y), sc.bracket(z, x)));
        add(sc.bracket(single(z), sc.bracket(x, y)));
        ++rep.triples_checked;
        for (long long v : acc)
          if (v) {
            fail("Jacobi fails for (" + sc.name(x) + ", " + sc.name(y) + ", " + sc.name(z) + ")");
            break;
          }
      }

  auto signed_coords = [&](int lab) {
    auto c = S.root(sc.index(lab)).coords;
    if (sc.kind(lab) == LabelKind::F)
      for (int& v : c) v = -v;
    return c;
  };
  for (int x = 0; x < 2 * sc.t() && rep.ok; ++x)
    for (int y = 0; y < 2 * sc.t() && rep.ok; ++y) {
      auto a = signed_coords(x), b = signed_coords(y);
      std::vector<int> s(a.size());
      for (std::size_t i = 0; i < s.size(); ++i) s[i] = a[i] + b[i];
      if (!S.is_root(s)) continue;
      int r = 0;
      for (auto c = b; true; ++r) {
        for (std::size_t i = 0; i < c.size(); ++i) c[i] -= a[i];
        if (!S.is_root(c)) break;
      }
      const auto& br = sc.bracket(x, y);
      int mag = br.size() == 1 ? std::abs(br[0].second) : 0;
      rep.max_abs_coefficient = std::max(rep.max_abs_coefficient, mag);
      if (mag != r + 1)
        fail("|N| = " + std::to_string(mag) + " but r+1 = " + std::to_string(r + 1) + " for (" + sc.name(x) + ", " +
             sc.name(y) + ")");
    }

  for (int a = 0; a < sc.t() && rep.ok; ++a) {
    IntCombo h;
    const auto& k = S.coroot_coeffs(a);
    for (int i = 0; i < sc.rank(); ++i)
      if (k[i]) h.emplace_back(sc.H(i), k[i]);
    if (sc.bracket(sc.E(a), sc.F(a)) != h) fail("[e, f] differs from the coroot for " + sc.name(sc.E(a)));
  }
  return rep;
}

}  // namespace bv

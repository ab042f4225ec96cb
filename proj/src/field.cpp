#include "babyverma/field.hpp"

#include <charconv>
#include <sstream>

#include "babyverma/errors.hpp"

namespace bv {

namespace {

constexpr int kMaxOrder = 65536;
constexpr int kFullTableOrder = 256;

struct ConwayEntry {
  int p;
  int e;
  std::vector<int> coeffs;  // lowest degree first, monic
};

const std::vector<ConwayEntry>& conway_table() {
  static const std::vector<ConwayEntry> table = {
      {2, 1, {1, 1}}, {2, 2, {1, 1, 1}}, {3, 1, {1, 1}}, {3, 2, {2, 2, 1}},
      {5, 1, {3, 1}}, {5, 2, {2, 4, 1}}, {7, 1, {4, 1}}, {7, 2, {3, 6, 1}},
  };
  return table;
}

int mod(long long a, int p) {
  long long r = a % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

// Product of two polynomials over GF(p) reduced by a monic modulus.
std::vector<int> polymulmod(const std::vector<int>& a, const std::vector<int>& b,
                            const std::vector<int>& m, int p) {
  const int e = static_cast<int>(m.size()) - 1;
  std::vector<long long> prod(2 * e, 0);
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j) prod[i + j] += static_cast<long long>(a[i]) * b[j];
  for (int d = 2 * e - 2; d >= e; --d) {
    long long c = mod(prod[d], p);
    if (c == 0) continue;
    for (int i = 0; i <= e; ++i) prod[d - e + i] -= c * m[i];
  }
  std::vector<int> out(e);
  for (int i = 0; i < e; ++i) out[i] = mod(prod[i], p);
  return out;
}

bool has_factor_of_degree(const std::vector<int>& f, int d, int p) {
  // Brute force over monic g of degree d: test whether g divides f.
  const int e = static_cast<int>(f.size()) - 1;
  long long count = 1;
  for (int i = 0; i < d; ++i) count *= p;
  for (long long idx = 0; idx < count; ++idx) {
    std::vector<int> g(d + 1, 0);
    long long t = idx;
    for (int i = 0; i < d; ++i) {
      g[i] = static_cast<int>(t % p);
      t /= p;
    }
    g[d] = 1;
    std::vector<long long> r(f.begin(), f.end());
    for (int k = e; k >= d; --k) {
      long long c = mod(r[k], p);
      if (c == 0) continue;
      for (int i = 0; i <= d; ++i) r[k - d + i] -= c * g[i];
    }
    bool zero = true;
    for (int i = 0; i < d; ++i)
      if (mod(r[i], p) != 0) zero = false;
    if (zero) return true;
  }
  return false;
}

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<int> field_modulus(int p, int e) {
  for (const auto& c : conway_table())
    if (c.p == p && c.e == e) return c.coeffs;
  if (e == 1) return {0, 1};
  long long count = 1;
  for (int i = 0; i < e; ++i) count *= p;
  for (long long idx = 0; idx < count; ++idx) {
    std::vector<int> f(e + 1, 0);
    long long t = idx;
    for (int i = 0; i < e; ++i) {
      f[i] = static_cast<int>(t % p);
      t /= p;
    }
    f[e] = 1;
    bool irreducible = true;
    for (int d = 1; d <= e / 2 && irreducible; ++d)
      if (has_factor_of_degree(f, d, p)) irreducible = false;
    if (irreducible) return f;
  }
  throw DomainError("no irreducible polynomial found");
}

struct Field::Tables {
  int p = 3;
  int e = 1;
  int q = 3;
  std::vector<int> modulus;
  bool full = false;
  std::vector<std::uint16_t> add, mul;  // q*q when full
  std::vector<std::uint16_t> neg, inv;
  std::vector<std::uint16_t> log, exp;  // when !full
  std::vector<int> pw;                  // p^i

  std::vector<int> coords(int a) const {
    std::vector<int> c(e);
    for (int i = 0; i < e; ++i) {
      c[i] = a % p;
      a /= p;
    }
    return c;
  }
  int encode(const std::vector<int>& c) const {
    int v = 0;
    for (int i = e - 1; i >= 0; --i) v = v * p + c[i];
    return v;
  }
  int slow_add(int a, int b) const {
    if (e == 1) return (a + b) % p;
    int v = 0;
    for (int i = 0; i < e; ++i) {
      v += ((a % p + b % p) % p) * pw[i];
      a /= p;
      b /= p;
    }
    return v;
  }
  int slow_mul(int a, int b) const {
    if (e == 1) return static_cast<int>(static_cast<long long>(a) * b % p);
    return encode(polymulmod(coords(a), coords(b), modulus, p));
  }
};

Field::Field() : Field(make(3, 1)) {}

Field Field::make(int p, int e) {
  if (!is_prime(p)) throw ConfigError("characteristic " + std::to_string(p) + " is not prime");
  if (e < 1) throw ConfigError("extension degree must be positive");
  long long q = 1;
  for (int i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxOrder) throw ConfigError("field order exceeds 65536");
  }
  auto t = std::make_shared<Tables>();
  t->p = p;
  t->e = e;
  t->q = static_cast<int>(q);
  t->modulus = field_modulus(p, e);
  t->pw.resize(e);
  t->pw[0] = 1;
  for (int i = 1; i < e; ++i) t->pw[i] = t->pw[i - 1] * p;
  const int n = t->q;
  t->neg.resize(n);
  t->inv.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    auto c = t->coords(a);
    for (auto& x : c) x = (p - x) % p;
    t->neg[a] = static_cast<std::uint16_t>(t->encode(c));
  }
  t->full = n <= kFullTableOrder;
  if (t->full) {
    t->add.resize(static_cast<std::size_t>(n) * n);
    t->mul.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        t->add[a * n + b] = static_cast<std::uint16_t>(t->slow_add(a, b));
        t->mul[a * n + b] = static_cast<std::uint16_t>(t->slow_mul(a, b));
      }
    for (int a = 1; a < n; ++a)
      for (int b = 1; b < n; ++b)
        if (t->mul[a * n + b] == 1) {
          t->inv[a] = static_cast<std::uint16_t>(b);
          break;
        }
  } else {
    // Find a primitive element and build log/exp tables.
    t->log.assign(n, 0);
    t->exp.assign(n, 0);
    for (int g = 2; g < n; ++g) {
      int x = 1;
      int order = 0;
      do {
        x = t->slow_mul(x, g);
        ++order;
      } while (x != 1 && order < n);
      if (order != n - 1) continue;
      x = 1;
      for (int k = 0; k < n - 1; ++k) {
        t->exp[k] = static_cast<std::uint16_t>(x);
        t->log[x] = static_cast<std::uint16_t>(k);
        x = t->slow_mul(x, g);
      }
      break;
    }
    for (int a = 1; a < n; ++a) t->inv[a] = t->exp[(n - 1 - t->log[a]) % (n - 1)];
  }
  return Field(std::move(t));
}

int Field::p() const { return t_->p; }
int Field::degree() const { return t_->e; }
int Field::order() const { return t_->q; }

Elem Field::from_int(long long n) const { return Elem{static_cast<std::uint16_t>(mod(n, t_->p))}; }

Elem Field::add(Elem a, Elem b) const {
  if (t_->full) return Elem{t_->add[a.v * t_->q + b.v]};
  return Elem{static_cast<std::uint16_t>(t_->slow_add(a.v, b.v))};
}

Elem Field::neg(Elem a) const { return Elem{t_->neg[a.v]}; }
Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
  if (t_->full) return Elem{t_->mul[a.v * t_->q + b.v]};
  if (a.v == 0 || b.v == 0) return zero();
  return Elem{t_->exp[(t_->log[a.v] + t_->log[b.v]) % (t_->q - 1)]};
}

Elem Field::inv(Elem a) const {
  if (a.v == 0) throw DomainError("inverse of zero");
  return Elem{t_->inv[a.v]};
}

Elem Field::pow(Elem a, std::uint64_t n) const {
  Elem r = one();
  while (n) {
    if (n & 1) r = mul(r, a);
    a = mul(a, a);
    n >>= 1;
  }
  return r;
}

void Field::axpy(std::span<Elem> y, Elem c, std::span<const Elem> x) const {
  if (c.v == 0) return;
  const std::size_t n = y.size();
  if (t_->full) {
    const int q = t_->q;
    const std::uint16_t* mrow = &t_->mul[c.v * q];
    const std::uint16_t* add = t_->add.data();
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint16_t xi = x[i].v;
      if (xi) y[i].v = add[y[i].v * q + mrow[xi]];
    }
    return;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (x[i].v) y[i] = add(y[i], mul(c, x[i]));
}

void Field::scale(std::span<Elem> x, Elem c) const {
  for (auto& v : x) v = mul(v, c);
}

std::vector<int> Field::coords(Elem a) const { return t_->coords(a.v); }

Elem Field::from_coords(std::span<const int> c) const {
  std::vector<int> full(t_->e, 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (static_cast<int>(i) >= t_->e) {
      if (mod(c[i], t_->p) != 0) throw DomainError("coordinate tuple longer than extension degree");
      continue;
    }
    full[i] = mod(c[i], t_->p);
  }
  return Elem{static_cast<std::uint16_t>(t_->encode(full))};
}

const std::vector<int>& Field::modulus() const { return t_->modulus; }

std::string Field::format(Elem a) const {
  if (t_->e == 1) return std::to_string(a.v);
  auto c = coords(a);
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += '/';
    s += std::to_string(c[i]);
  }
  return s;
}

std::string Field::format_signed(Elem a) const {
  if (t_->e != 1 && !in_prime_field(a)) return format(a);
  int v = a.v;
  if (v > t_->p / 2) v -= t_->p;
  return std::to_string(v);
}

Elem Field::parse(std::string_view text) const {
  std::vector<int> c;
  std::size_t start = 0;
  while (true) {
    auto slash = text.find('/', start);
    auto tok = text.substr(start, slash == std::string_view::npos ? std::string_view::npos : slash - start);
    long long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
      throw ConfigError("cannot parse field element '" + std::string(text) + "'");
    c.push_back(mod(v, t_->p));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  if (static_cast<int>(c.size()) > t_->e)
    throw ConfigError("field element '" + std::string(text) + "' has more than " +
                      std::to_string(t_->e) + " coordinates");
  return from_coords(c);
}

}  // namespace bv

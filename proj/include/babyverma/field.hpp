#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bv {

// An element of GF(p^e), encoded by its polynomial-basis coordinates
// c_0 + c_1 p + ... + c_{e-1} p^{e-1}. Prime-field elements are 0..p-1.
struct Elem {
  std::uint16_t v = 0;
  constexpr auto operator<=>(const Elem&) const = default;
};

// Finite field GF(p^e) with q = p^e <= 65536.
//
// The modulus is the Conway polynomial for p <= 7, e <= 2 and otherwise the
// least monic irreducible polynomial, where monic polynomials
// x^e + c_{e-1}x^{e-1} + ... + c_0 are ordered by the integer
// c_0 + c_1 p + ... + c_{e-1} p^{e-1}.
//
// Copies share immutable tables and are cheap.
class Field {
 public:
  Field();  // GF(3)
  static Field make(int p, int e = 1);

  int p() const;
  int degree() const;
  int order() const;

  static constexpr Elem zero() { return Elem{0}; }
  static constexpr Elem one() { return Elem{1}; }
  Elem from_int(long long n) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;  // throws DomainError on zero
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t n) const;
  // a^p - a, the Artin-Schreier map.
  Elem artin_schreier(Elem a) const { return sub(pow(a, static_cast<std::uint64_t>(p())), a); }

  // y += c * x, elementwise.
  void axpy(std::span<Elem> y, Elem c, std::span<const Elem> x) const;
  // x *= c, elementwise.
  void scale(std::span<Elem> x, Elem c) const;

  bool in_prime_field(Elem a) const { return a.v < p(); }
  Elem element(int index) const { return Elem{static_cast<std::uint16_t>(index)}; }

  std::vector<int> coords(Elem a) const;
  Elem from_coords(std::span<const int> c) const;
  // Modulus coefficients, lowest degree first, monic (length e+1).
  const std::vector<int>& modulus() const;

  // "3" in a prime field, "c0/c1/.../c_{e-1}" otherwise (lowest degree first).
  std::string format(Elem a) const;
  // Prime-field elements as signed representatives in (-p/2, p/2].
  std::string format_signed(Elem a) const;
  // Accepts an integer (reduced mod p) or a '/'-separated coordinate tuple.
  Elem parse(std::string_view text) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.p() == b.p() && a.degree() == b.degree();
  }

 private:
  struct Tables;
  explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
  std::shared_ptr<const Tables> t_;
};

bool is_prime(long long n);

// Monic irreducible modulus of degree e over GF(p) as chosen by Field::make.
std::vector<int> field_modulus(int p, int e);

}  // namespace bv

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g4/field.hpp"
#include "g4/rng.hpp"

namespace g4 {

class Embedding;

// Dense univariate polynomial, coefficients constant first, always trimmed.
class Poly {
 public:
  Poly() : f_(nullptr) {}
  explicit Poly(Field f) : f_(f) {}
  Poly(Field f, std::vector<Elem> coeffs);
  // Integer coefficients reduced into the field, constant first.
  static Poly from_ints(Field f, const std::vector<i64>& coeffs);
  static Poly x(Field f);

  Field field() const { return f_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  Elem coeff(unsigned i) const;  // zero beyond the degree
  const Elem& lc() const;        // throws on zero polynomial

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Elem& s) const;
  Poly operator-() const;
  bool operator==(const Poly& o) const { return f_ == o.f_ && c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Quotient and remainder; divisor must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Poly operator%(const Poly& d) const { return divmod(d).second; }

  Poly derivative() const;
  Elem eval(const Elem& x) const;
  Poly monic() const;
  Poly shift(unsigned k) const;  // multiply by x^k

  // f(c1*x + c0)
  Poly compose_linear(const Elem& c1, const Elem& c0) const;
  // x^N * f(1/x + a); requires N >= deg f
  Poly reverse_shift(unsigned N, const Elem& a) const;

  // Coefficient-wise image in the embedding's target field.
  Poly lift(const Embedding& e) const;
  // Coefficient-wise preimage; nullopt when any coefficient lies outside.
  std::optional<Poly> descend(const Embedding& e) const;

  bool is_separable() const;  // nonzero, gcd(f, f') constant

  u64 digest() const;
  std::string str() const;

 private:
  Field f_;
  std::vector<Elem> c_;
  void trim();
};

Poly gcd(const Poly& a, const Poly& b);  // monic unless both zero
Poly powmod(const Poly& base, u128 e, const Poly& mod);

// Total order: degree first, then coefficient serialization.
bool poly_less(const Poly& a, const Poly& b);

// Complete factorization into monic irreducibles with multiplicities,
// sorted by (degree, serialization). lc(f) is not part of the list.
std::vector<std::pair<Poly, int>> factor(const Poly& f, Rng& rng);
std::vector<std::pair<Poly, int>> factor(const Poly& f);  // input-derived seed

// All roots of f inside K (an extension of f's field), sorted, no
// multiplicity.
std::vector<Elem> roots_in_field(const Poly& f, Field K);

// Smallest field over which f splits completely, as an extension of f's
// field (degree = lcm of irreducible factor degrees).
Field splitting_field(const Poly& f);

// Reduced fraction num/den of polynomials in one variable; den becomes monic.
std::pair<Poly, Poly> param_ratio_reduce(const Poly& num, const Poly& den);

// Polynomial in x whose coefficients are polynomials in a parameter t.
// Dense in both variables; just enough algebra for degree-6 j fractions.
class ParamPoly {
 public:
  explicit ParamPoly(Field f) : f_(f) {}
  ParamPoly(Field f, std::vector<Poly> coeffs_x);
  static ParamPoly constant(const Poly& p);             // no x
  static ParamPoly from_poly_in_x(const Poly& p);       // no t

  Field field() const { return f_; }
  int degree_x() const { return static_cast<int>(cx_.size()) - 1; }
  Poly coeff_x(unsigned i) const;  // polynomial in t

  ParamPoly operator+(const ParamPoly& o) const;
  ParamPoly operator-(const ParamPoly& o) const;
  ParamPoly operator*(const ParamPoly& o) const;
  ParamPoly scale(const Poly& s) const;  // multiply by a polynomial in t

 private:
  Field f_;
  std::vector<Poly> cx_;
  void trim();
};

}  // namespace g4

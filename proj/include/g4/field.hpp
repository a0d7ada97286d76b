#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "g4/intmath.hpp"

namespace g4 {

class FieldData;
// Fields are interned: one FieldData per (p, n), so pointer equality is
// field equality.
using Field = const FieldData*;

class Elem {
 public:
  Elem() : f_(nullptr) {}
  Elem(Field f, std::vector<u64> coeffs);

  Field field() const { return f_; }
  // Constant coefficient first, length = field degree, values in [0, p).
  const std::vector<u64>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;

  Elem operator+(const Elem& o) const;
  Elem operator-(const Elem& o) const;
  Elem operator*(const Elem& o) const;
  Elem operator-() const;
  Elem operator/(const Elem& o) const { return *this * o.inv(); }
  Elem& operator+=(const Elem& o) { return *this = *this + o; }
  Elem& operator-=(const Elem& o) { return *this = *this - o; }
  Elem& operator*=(const Elem& o) { return *this = *this * o; }
  bool operator==(const Elem& o) const { return f_ == o.f_ && c_ == o.c_; }
  bool operator!=(const Elem& o) const { return !(*this == o); }

  Elem inv() const;  // std::invalid_argument on zero
  Elem pow(u128 e) const;
  Elem square() const { return *this * *this; }

  // Quadratic character: 0, 1, -1.
  int chi() const;
  // Square root with the lexicographically smaller of {r, -r}; nullopt for
  // non-squares.
  std::optional<Elem> sqrt() const;

  // x -> x^(q^k) for the q of `base` (a subfield); Galois action over base.
  Elem frobenius(Field base, unsigned k = 1) const;

  // Index of this element in base-p positional order (c0 most significant),
  // i.e. the rank in lexicographic coefficient order. Requires order < 2^64.
  u64 lex_rank() const;

  bool lex_less(const Elem& o) const { return c_ < o.c_; }

  u64 digest() const;
  std::string str() const;  // "[c0,c1,...]" or "c0" for prime fields

 private:
  friend class FieldData;
  Field f_;
  std::vector<u64> c_;
};

class FieldData {
 public:
  u64 p() const { return p_; }
  unsigned degree() const { return n_; }       // over the prime field
  u128 order() const { return q_; }            // p^n
  // Monic irreducible over F_p, constant first, length n+1. For n = 1 this
  // is [0, 1] (the polynomial x).
  const std::vector<u64>& modulus() const { return mod_; }

  Elem zero() const;
  Elem one() const;
  Elem from_int(i64 v) const;  // reduction of v mod p as a constant
  Elem gen() const;            // class of x; equals 1 when n = 1
  Elem element(std::vector<u64> coeffs) const;  // coefficients reduced mod p
  // Element at position i in lexicographic order (see Elem::lex_rank).
  Elem elem_at(u64 i) const;

  // Lexicographically least non-residue of this field.
  const Elem& least_nonresidue() const;
  // Lexicographically least multiplicative generator. Requires order < 2^64.
  const Elem& primitive_root() const;

  u64 digest() const { return digest_; }

  ~FieldData();

 private:
  FieldData(u64 p, unsigned n);
  FieldData(const FieldData&) = delete;

  friend Field prime_field(u64);
  friend Field extension_field(Field, unsigned);
  friend class Elem;
  friend class Embedding;

  u64 p_;
  unsigned n_;
  u128 q_;
  std::vector<u64> mod_;
  u64 digest_;

  struct Caches;
  Caches* caches_;

  int chi_impl(const Elem& x) const;
  const std::vector<signed char>* chi_table() const;  // nullptr for big fields
};

// p odd prime, p < 2^20.
Field prime_field(u64 p);
// Field with order(base)^d elements, flattened over the prime field; the
// modulus is the lexicographically least monic irreducible of that degree.
// Guard: resulting order < 2^126.
Field extension_field(Field base, unsigned d);

// Ring embedding src -> dst fixing F_p; requires same p and
// degree(src) | degree(dst). Cached per (src, dst).
class Embedding {
 public:
  Field src() const { return src_; }
  Field dst() const { return dst_; }

  Elem apply(const Elem& x) const;
  // Preimage when y lies in the image subfield, else nullopt.
  std::optional<Elem> descend(const Elem& y) const;

  static const Embedding& get(Field src, Field dst);

 private:
  Embedding(Field src, Field dst);
  Field src_, dst_;
  std::vector<Elem> gen_pows_;        // image of src gen^i, i < degree(src)
  std::vector<std::vector<u64>> solve_;  // row-reduced [M | I] over F_p
  std::vector<int> pivot_col_;
};

}  // namespace g4

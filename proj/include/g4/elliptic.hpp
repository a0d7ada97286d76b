#pragma once

#include <vector>

#include "g4/poly.hpp"

namespace g4 {

// y^2 = v3 x^3 + v2 x^2 + v1 x + v0 with v3 != 0 and the cubic separable.
class EllipticCurve {
 public:
  EllipticCurve(Field K, Elem v3, Elem v2, Elem v1, Elem v0);
  static EllipticCurve from_cubic(const Poly& f);  // degree 3

  Field field() const { return f_; }
  const Elem& v3() const { return v3_; }
  const Elem& v2() const { return v2_; }
  const Elem& v1() const { return v1_; }
  const Elem& v0() const { return v0_; }
  Poly cubic() const;

  bool operator==(const EllipticCurve& o) const;
  u64 digest() const;
  std::string str() const;

 private:
  Field f_;
  Elem v3_, v2_, v1_, v0_;
};

// Order on (v3, v2, v1, v0) serializations; canonical list order.
bool curve_less(const EllipticCurve& a, const EllipticCurve& b);

Elem j_invariant(const EllipticCurve& E);

// Chord-and-tangent arithmetic on the general cubic model.
struct ECPoint {
  bool inf = true;
  Elem x, y;
  static ECPoint infinity() { return {}; }
  static ECPoint affine(Elem x, Elem y) { return {false, std::move(x), std::move(y)}; }
  bool operator==(const ECPoint& o) const;
};

bool on_curve(const EllipticCurve& E, const ECPoint& P);
ECPoint ec_neg(const EllipticCurve& E, const ECPoint& P);
ECPoint ec_add(const EllipticCurve& E, const ECPoint& P, const ECPoint& Q);
ECPoint ec_mul(const EllipticCurve& E, const ECPoint& P, u128 n);
// Uniform random affine point (y may be 0).
ECPoint ec_random_point(const EllipticCurve& E, Rng& rng);

// #E(F_q) by direct evaluation of the character sum. O(q).
u64 point_count_naive(const EllipticCurve& E);
// #E(F_q) by baby-step giant-step order finding inside the Hasse interval,
// intersecting candidate sets from points on E and its twist.
// count_ambiguity_error when 16 rounds leave more than one candidate.
u64 point_count_bsgs(const EllipticCurve& E, u64 seed = 0);
// Dispatch: naive for small q, else bsgs with naive as last resort.
u64 point_count(const EllipticCurve& E);

struct TraceRecord {
  EllipticCurve curve;
  i64 trace;   // q + 1 - #E
  u64 count;   // #E(F_q)
  i64 defect;  // floor(2 sqrt q) - trace
};
TraceRecord trace_and_defect(const EllipticCurve& E);

// 1 + number of rational roots of the cubic: 1, 2, or 4.
int rational_two_torsion_count(const EllipticCurve& E);

// 3, 2, or 6 according as the separable cubic f has 0, 1, or 3 rational
// roots: the size of the stabilizer of its root set in PGL_2(F_q).
int n_of_cubic(const Poly& f);

// True iff E is isomorphic to y^2 = c f for some nonzero c, decided by the
// rational 2-torsion criterion.
bool is_compatible(const EllipticCurve& E, const Poly& f);

// Twist by the field's least non-residue: y^2 = nu * cubic.
EllipticCurve quadratic_twist(const EllipticCurve& E);

// Exact F_q-isomorphism.
bool is_isomorphic(const EllipticCurve& E1, const EllipticCurve& E2);

// One representative per isomorphism class for every j, with exact traces.
// Built once per field and cached; immutable afterwards.
class TraceTable {
 public:
  struct Entry {
    EllipticCurve curve;
    i64 trace;
  };

  static const TraceTable& get(Field K);

  const std::vector<Entry>& entries() const { return entries_; }
  u64 m() const { return m_; }  // floor(2 sqrt q)
  std::vector<EllipticCurve> with_trace(i64 t) const;

 private:
  explicit TraceTable(Field K);
  Field f_;
  u64 m_;
  std::vector<Entry> entries_;
};

// Representatives of every class of defect d, i.e. trace floor(2 sqrt q) - d.
std::vector<EllipticCurve> curves_with_defect(Field K, i64 d);

// d >= 1: gcd-with-q criterion on floor(2 sqrt q) - d for q > 56 d^2, and
// emptiness of the coprime-trace defect-d classes below that bound.
// d = 0: emptiness of curves_with_defect.
bool is_d_exceptional(u64 q, i64 d);

}  // namespace g4

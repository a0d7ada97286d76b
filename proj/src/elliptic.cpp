#include "g4/elliptic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "g4/errors.hpp"

namespace g4 {

EllipticCurve::EllipticCurve(Field K, Elem v3, Elem v2, Elem v1, Elem v0)
    : f_(K), v3_(std::move(v3)), v2_(std::move(v2)), v1_(std::move(v1)), v0_(std::move(v0)) {
  if (v3_.field() != K || v2_.field() != K || v1_.field() != K || v0_.field() != K)
    throw std::invalid_argument("coefficients from the wrong field");
  if (v3_.is_zero()) throw std::invalid_argument("leading coefficient must be nonzero");
  if (!cubic().is_separable()) throw std::invalid_argument("cubic must be separable");
}

EllipticCurve EllipticCurve::from_cubic(const Poly& f) {
  if (f.degree() != 3) throw std::invalid_argument("cubic expected");
  return EllipticCurve(f.field(), f.coeff(3), f.coeff(2), f.coeff(1), f.coeff(0));
}

Poly EllipticCurve::cubic() const { return Poly(f_, {v0_, v1_, v2_, v3_}); }

bool EllipticCurve::operator==(const EllipticCurve& o) const {
  return f_ == o.f_ && v3_ == o.v3_ && v2_ == o.v2_ && v1_ == o.v1_ && v0_ == o.v0_;
}

u64 EllipticCurve::digest() const {
  u64 h = digest_combine(f_->digest(), 0x6563ULL);
  h = digest_combine(h, v3_.digest());
  h = digest_combine(h, v2_.digest());
  h = digest_combine(h, v1_.digest());
  return digest_combine(h, v0_.digest());
}

std::string EllipticCurve::str() const {
  std::ostringstream os;
  os << "y^2 = [" << v0_.str() << ',' << v1_.str() << ',' << v2_.str() << ',' << v3_.str() << ']';
  return os.str();
}

bool curve_less(const EllipticCurve& a, const EllipticCurve& b) {
  if (a.v3() != b.v3()) return a.v3().lex_less(b.v3());
  if (a.v2() != b.v2()) return a.v2().lex_less(b.v2());
  if (a.v1() != b.v1()) return a.v1().lex_less(b.v1());
  return a.v0().lex_less(b.v0());
}

namespace {

// (a2, a4, a6) of the monic model reached by X = v3 x, Y = v3 y.
struct AForm {
  Elem a2, a4, a6;
};
AForm a_form(const EllipticCurve& E) {
  return {E.v2(), E.v1() * E.v3(), E.v0() * E.v3().square()};
}

struct BInv {
  Elem b2, b4, b6, b8;
};
BInv b_invariants(const AForm& a, Field K) {
  Elem four = K->from_int(4);
  return {four * a.a2, K->from_int(2) * a.a4, four * a.a6,
          four * a.a2 * a.a6 - a.a4.square()};
}

}  // namespace

Elem j_invariant(const EllipticCurve& E) {
  Field K = E.field();
  AForm a = a_form(E);
  BInv b = b_invariants(a, K);
  Elem c4 = b.b2.square() - K->from_int(24) * b.b4;
  Elem disc = -b.b2.square() * b.b8 - K->from_int(8) * b.b4.pow(3) -
              K->from_int(27) * b.b6.square() + K->from_int(9) * b.b2 * b.b4 * b.b6;
  return c4.pow(3) * disc.inv();
}

// ---- group law ----

bool ECPoint::operator==(const ECPoint& o) const {
  if (inf || o.inf) return inf == o.inf;
  return x == o.x && y == o.y;
}

bool on_curve(const EllipticCurve& E, const ECPoint& P) {
  if (P.inf) return true;
  return P.y.square() == E.cubic().eval(P.x);
}

ECPoint ec_neg(const EllipticCurve&, const ECPoint& P) {
  if (P.inf) return P;
  return ECPoint::affine(P.x, -P.y);
}

ECPoint ec_add(const EllipticCurve& E, const ECPoint& P, const ECPoint& Q) {
  if (P.inf) return Q;
  if (Q.inf) return P;
  Field K = E.field();
  Elem lambda = K->zero();
  if (P.x == Q.x) {
    if (P.y != Q.y || P.y.is_zero()) return ECPoint::infinity();
    // tangent: lambda = f'(x) / (2y)
    Elem fp = K->from_int(3) * E.v3() * P.x.square() + K->from_int(2) * E.v2() * P.x + E.v1();
    lambda = fp * (K->from_int(2) * P.y).inv();
  } else {
    lambda = (Q.y - P.y) * (Q.x - P.x).inv();
  }
  Elem x3 = (lambda.square() - E.v2()) * E.v3().inv() - P.x - Q.x;
  Elem y3 = -(P.y + lambda * (x3 - P.x));
  return ECPoint::affine(std::move(x3), std::move(y3));
}

ECPoint ec_mul(const EllipticCurve& E, const ECPoint& P, u128 n) {
  ECPoint r = ECPoint::infinity();
  ECPoint b = P;
  while (n) {
    if (n & 1) r = ec_add(E, r, b);
    b = ec_add(E, b, b);
    n >>= 1;
  }
  return r;
}

ECPoint ec_random_point(const EllipticCurve& E, Rng& rng) {
  Field K = E.field();
  if (K->order() >= (u128{1} << 62)) throw std::invalid_argument("field too large for sampling");
  u64 q = static_cast<u64>(K->order());
  Poly f = E.cubic();
  for (;;) {
    Elem x = K->elem_at(rng.below(q));
    Elem v = f.eval(x);
    if (v.chi() == -1) continue;
    Elem y = *v.sqrt();
    if (!y.is_zero() && (rng.next() & 1)) y = -y;
    return ECPoint::affine(std::move(x), std::move(y));
  }
}

// ---- point counting ----

u64 point_count_naive(const EllipticCurve& E) {
  Field K = E.field();
  if (K->order() >= (u128{1} << 62)) throw std::invalid_argument("field too large to enumerate");
  u64 q = static_cast<u64>(K->order());
  i64 s = 0;
  if (K->degree() == 1) {
    u64 p = K->p();
    u64 c3 = E.v3().coeffs()[0], c2 = E.v2().coeffs()[0], c1 = E.v1().coeffs()[0],
        c0 = E.v0().coeffs()[0];
    for (u64 x = 0; x < p; ++x) {
      u64 v = ((c3 * x + c2) % p * x + c1) % p * x % p;
      v = (v + c0) % p;
      s += K->element({v}).chi();
    }
  } else {
    Poly f = E.cubic();
    for (u64 i = 0; i < q; ++i) s += f.eval(K->elem_at(i)).chi();
  }
  return q + 1 + static_cast<u64>(s + static_cast<i64>(q)) - q;
}

namespace {

u64 point_digest(const ECPoint& P) {
  if (P.inf) return 0x696e66ULL;
  return digest_combine(P.x.digest(), P.y.digest());
}

// All N in [lo, lo+width) with N*P = O, for one random affine P on E.
std::vector<u64> order_matches(const EllipticCurve& E, u64 lo, u64 width, Rng& rng) {
  ECPoint P = ec_random_point(E, rng);
  u64 L = isqrt_u64(width) + 1;
  // baby table: j*P for j in [0, L)
  std::unordered_map<u64, std::vector<std::pair<u64, ECPoint>>> baby;
  baby.reserve(L * 2);
  ECPoint bp = ECPoint::infinity();
  for (u64 j = 0; j < L; ++j) {
    baby[point_digest(bp)].push_back({j, bp});
    bp = ec_add(E, bp, P);
  }
  ECPoint G = ec_mul(E, P, L);
  ECPoint negG = ec_neg(E, G);
  ECPoint T = ec_neg(E, ec_mul(E, P, lo));  // need j*P = T - kL*P
  std::vector<u64> out;
  for (u64 k = 0; k * L < width; ++k) {
    auto it = baby.find(point_digest(T));
    if (it != baby.end()) {
      for (const auto& [j, point] : it->second) {
        if (point == T && k * L + j < width) out.push_back(lo + k * L + j);
      }
    }
    T = ec_add(E, T, negG);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<u64> intersect_sorted(const std::vector<u64>& a, const std::vector<u64>& b) {
  std::vector<u64> r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

}  // namespace

u64 point_count_bsgs(const EllipticCurve& E, u64 seed) {
  Field K = E.field();
  if (K->order() >= (u128{1} << 62)) throw std::invalid_argument("field too large to count");
  u64 q = static_cast<u64>(K->order());
  u64 m = floor_two_sqrt(q);
  u64 lo = q + 1 - m;
  u64 width = 2 * m + 1;
  EllipticCurve Et = quadratic_twist(E);
  Rng rng(digest_combine(digest_combine(seed, E.digest()), 0x62736773ULL));
  std::vector<u64> cand;
  for (int round = 0; round < 16; ++round) {
    bool on_twist = (round & 1) != 0;
    std::vector<u64> matches = order_matches(on_twist ? Et : E, lo, width, rng);
    if (on_twist) {
      // #E = 2q + 2 - #Et reflects the candidate set
      std::vector<u64> refl;
      refl.reserve(matches.size());
      for (auto it = matches.rbegin(); it != matches.rend(); ++it) refl.push_back(2 * q + 2 - *it);
      matches = std::move(refl);
    }
    if (matches.empty()) throw std::logic_error("group order missing from the Hasse interval");
    cand = (round == 0) ? std::move(matches) : intersect_sorted(cand, matches);
    if (cand.size() == 1) return cand[0];
    if (cand.empty()) throw std::logic_error("candidate intersection emptied");
  }
  throw count_ambiguity_error("group-order search could not pin a unique count");
}

u64 point_count(const EllipticCurve& E) {
  Field K = E.field();
  if (K->order() < 4096) return point_count_naive(E);
  try {
    return point_count_bsgs(E);
  } catch (const count_ambiguity_error&) {
    return point_count_naive(E);
  }
}

TraceRecord trace_and_defect(const EllipticCurve& E) {
  Field K = E.field();
  u64 q = static_cast<u64>(K->order());
  u64 n = point_count(E);
  i64 t = static_cast<i64>(q) + 1 - static_cast<i64>(n);
  i64 m = static_cast<i64>(floor_two_sqrt(q));
  return {E, t, n, m - t};
}

// ---- 2-torsion, n(f), compatibility ----

int rational_two_torsion_count(const EllipticCurve& E) {
  return 1 + static_cast<int>(roots_in_field(E.cubic(), E.field()).size());
}

int n_of_cubic(const Poly& f) {
  if (f.degree() != 3 || !f.is_separable()) throw std::invalid_argument("separable cubic expected");
  switch (roots_in_field(f, f.field()).size()) {
    case 0:
      return 3;
    case 1:
      return 2;
    default:
      return 6;
  }
}

bool is_compatible(const EllipticCurve& E, const Poly& f) {
  if (f.degree() != 3 || !f.is_separable()) throw std::invalid_argument("separable cubic expected");
  if (f.field() != E.field()) throw std::invalid_argument("operands over different fields");
  int nf = 1 + static_cast<int>(roots_in_field(f, f.field()).size());
  return rational_two_torsion_count(E) == nf;
}

EllipticCurve quadratic_twist(const EllipticCurve& E) {
  const Elem& nu = E.field()->least_nonresidue();
  return EllipticCurve(E.field(), nu * E.v3(), nu * E.v2(), nu * E.v1(), nu * E.v0());
}

// ---- isomorphism ----

namespace {

// x-shift killing the linear term of the char-3 ordinary form; the result is
// (a2, c) with y^2 = x^3 + a2 x^2 + c.
std::pair<Elem, Elem> char3_ordinary_normal(const AForm& a) {
  Elem r = a.a4 * a.a2.inv();
  Elem c = r.pow(3) + a.a2 * r.square() + a.a4 * r + a.a6;
  return {a.a2, c};
}

bool nth_power_residue(const Elem& x, u64 n) {
  // x in k*, true iff x is an n-th power
  u128 qm1 = x.field()->order() - 1;
  u64 g = std::gcd(static_cast<u64>(qm1 % n ? std::gcd<u64>(n, static_cast<u64>(qm1 % n)) : n),
                   n);
  (void)g;
  u64 d = std::gcd(n, static_cast<u64>(qm1 % n == 0 ? n : std::gcd<u64>(n, static_cast<u64>(qm1 % n))));
  (void)d;
  // gcd over u128 done in two steps since q-1 may exceed 64 bits
  u128 a = qm1, b = n;
  while (b) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return x.pow(qm1 / a).is_one();
}

}  // namespace

bool is_isomorphic(const EllipticCurve& E1, const EllipticCurve& E2) {
  if (E1.field() != E2.field()) throw std::invalid_argument("operands over different fields");
  Field K = E1.field();
  if (j_invariant(E1) != j_invariant(E2)) return false;
  AForm a1 = a_form(E1), a2f = a_form(E2);
  if (K->p() == 3) {
    if (a1.a2.is_zero() != a2f.a2.is_zero()) return false;
    if (!a1.a2.is_zero()) {
      auto [A1, c1] = char3_ordinary_normal(a1);
      auto [A2, c2] = char3_ordinary_normal(a2f);
      return (A1 * A2.inv()).chi() == 1 && c2 * A1.pow(3) == c1 * A2.pow(3);
    }
    // supersingular: (a4, a6) ~ (a4/u^4, (a6 + a4 r + r^3)/u^6)
    Poly quart = Poly(K, {-(a1.a4 * a2f.a4.inv()), K->zero(), K->zero(), K->zero(), K->one()});
    for (const Elem& u : roots_in_field(quart, K)) {
      Elem delta = a2f.a6 * u.pow(6) - a1.a6;
      Poly shift(K, {-delta, a1.a4, K->zero(), K->one()});
      if (!roots_in_field(shift, K).empty()) return true;
    }
    return false;
  }
  // depress: A = a4 - a2^2/3, B = a6 - a2 a4/3 + 2 a2^3/27
  Elem third = K->from_int(3).inv();
  auto depress = [&](const AForm& a) {
    Elem A = a.a4 - a.a2.square() * third;
    Elem B = a.a6 - a.a2 * a.a4 * third + K->from_int(2) * a.a2.pow(3) * third.pow(3);
    return std::pair<Elem, Elem>{A, B};
  };
  auto [A1, B1] = depress(a1);
  auto [A2, B2] = depress(a2f);
  if (A1.is_zero()) return nth_power_residue(B2 * B1.inv(), 6);   // j = 0
  if (B1.is_zero()) return nth_power_residue(A2 * A1.inv(), 4);   // j = 1728
  Elem s = (B2 * A1) * (B1 * A2).inv();
  return s.chi() == 1;
}

// ---- trace table ----

namespace {
std::mutex& table_mutex() {
  static std::mutex m;
  return m;
}
std::map<Field, std::unique_ptr<TraceTable>>& table_registry() {
  static std::map<Field, std::unique_ptr<TraceTable>> r;
  return r;
}
}  // namespace

const TraceTable& TraceTable::get(Field K) {
  std::lock_guard<std::mutex> lock(table_mutex());
  auto& slot = table_registry()[K];
  if (!slot) slot.reset(new TraceTable(K));
  return *slot;
}

TraceTable::TraceTable(Field K) : f_(K) {
  if (K->order() >= (u128{1} << 40))
    throw std::invalid_argument("trace table limited to q < 2^40");
  u64 q = static_cast<u64>(K->order());
  m_ = floor_two_sqrt(q);
  u64 p = K->p();
  i64 qi = static_cast<i64>(q);

  auto push_counted = [&](const EllipticCurve& E) {
    u64 n = point_count(E);
    entries_.push_back({E, qi + 1 - static_cast<i64>(n)});
    EllipticCurve tw = quadratic_twist(E);
    entries_.push_back({tw, -(qi + 1 - static_cast<i64>(n))});
  };

  if (p >= 5) {
    Elem c1728 = K->from_int(1728);
    const Elem& xi = K->primitive_root();
    for (u64 r = 0; r < q; ++r) {
      Elem j = K->elem_at(r);
      if (j.is_zero()) {
        u64 g = std::gcd<u64>(6, q - 1);
        for (u64 i = 0; i < g; ++i) {
          EllipticCurve E(K, K->one(), K->zero(), K->zero(), xi.pow(i));
          u64 n = point_count(E);
          entries_.push_back({E, qi + 1 - static_cast<i64>(n)});
        }
      } else if (j == c1728) {
        u64 g = std::gcd<u64>(4, q - 1);
        for (u64 i = 0; i < g; ++i) {
          EllipticCurve E(K, K->one(), K->zero(), xi.pow(i), K->zero());
          u64 n = point_count(E);
          entries_.push_back({E, qi + 1 - static_cast<i64>(n)});
        }
      } else {
        Elem k = j * (c1728 - j);
        EllipticCurve E(K, K->one(), K->zero(), K->from_int(3) * k,
                        K->from_int(2) * k * (c1728 - j));
        push_counted(E);
      }
    }
  } else {
    // characteristic 3
    for (u64 r = 0; r < q; ++r) {
      Elem j = K->elem_at(r);
      if (j.is_zero()) continue;
      EllipticCurve E(K, K->one(), K->one(), K->zero(), -j.inv());
      push_counted(E);
    }
    // supersingular: y^2 = x^3 + a4 x + a6, a4 != 0
    std::vector<EllipticCurve> cands;
    const Elem& xi = K->primitive_root();
    u64 g4 = std::gcd<u64>(4, q - 1);
    for (u64 i = 0; i < g4; ++i) {
      Elem a4 = xi.pow(i);
      // cosets of the image of r -> r^3 + a4 r
      std::vector<bool> covered(q, false);
      std::vector<Elem> image;
      image.reserve(q);
      for (u64 s = 0; s < q; ++s) {
        Elem rr = K->elem_at(s);
        image.push_back(rr.pow(3) + a4 * rr);
      }
      for (u64 s = 0; s < q; ++s) {
        if (covered[s]) continue;
        Elem a6 = K->elem_at(s);
        for (const Elem& im : image) covered[(a6 + im).lex_rank()] = true;
        cands.emplace_back(K, K->one(), K->zero(), a4, a6);
      }
    }
    std::vector<EllipticCurve> reps;
    for (const auto& c : cands) {
      bool dup = false;
      for (const auto& rep : reps) dup = dup || is_isomorphic(c, rep);
      if (!dup) reps.push_back(c);
    }
    for (const auto& rep : reps) {
      u64 n = point_count(rep);
      entries_.push_back({rep, qi + 1 - static_cast<i64>(n)});
    }
  }
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) { return curve_less(a.curve, b.curve); });
}

std::vector<EllipticCurve> TraceTable::with_trace(i64 t) const {
  std::vector<EllipticCurve> out;
  for (const auto& e : entries_)
    if (e.trace == t) out.push_back(e.curve);
  return out;
}

std::vector<EllipticCurve> curves_with_defect(Field K, i64 d) {
  const TraceTable& tab = TraceTable::get(K);
  return tab.with_trace(static_cast<i64>(tab.m()) - d);
}

bool is_d_exceptional(u64 q, i64 d) {
  auto pp = prime_power(q);
  if (!pp || pp->first == 2) throw std::invalid_argument("q must be an odd prime power");
  if (d < 0) throw std::invalid_argument("d must be non-negative");
  auto build_field = [&] {
    Field base = prime_field(pp->first);
    return pp->second == 1 ? base : extension_field(base, static_cast<unsigned>(pp->second));
  };
  if (d == 0) return curves_with_defect(build_field(), 0).empty();
  i64 t = static_cast<i64>(floor_two_sqrt(q)) - d;
  u64 g = std::gcd(static_cast<u64>(t < 0 ? -t : t), q);
  if (q > 56 * static_cast<u64>(d) * static_cast<u64>(d)) return g != 1;
  // below the bound: emptiness among classes whose trace is coprime to q
  if (g != 1) return true;
  return curves_with_defect(build_field(), d).empty();
}

}  // namespace g4

#include "g4/field.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "g4/rng.hpp"

namespace g4 {
namespace {

// ---- arithmetic mod p (p odd prime < 2^20) ----

u64 add_p(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}
u64 sub_p(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
u64 mul_p(u64 a, u64 b, u64 p) { return a * b % p; }

u64 pow_p(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul_p(r, a, p);
    a = mul_p(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 inv_p(u64 a, u64 p) { return pow_p(a % p, p - 2, p); }

// ---- dense polynomials over F_p: vector<u64>, constant first, trimmed ----

using RPoly = std::vector<u64>;

void rp_trim(RPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int rp_deg(const RPoly& f) { return static_cast<int>(f.size()) - 1; }

RPoly rp_mul(const RPoly& a, const RPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  RPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  rp_trim(r);
  return r;
}

// f mod m, m monic.
void rp_mod_in(RPoly& f, const RPoly& m, u64 p) {
  int dm = rp_deg(m);
  for (int i = rp_deg(f); i >= dm; --i) {
    u64 c = f[i];
    if (c) {
      f[i] = 0;
      for (int j = 0; j < dm; ++j) f[i - dm + j] = (f[i - dm + j] + c * (p - m[j])) % p;
    }
  }
  rp_trim(f);
}

RPoly rp_mulmod(const RPoly& a, const RPoly& b, const RPoly& m, u64 p) {
  RPoly r = rp_mul(a, b, p);
  rp_mod_in(r, m, p);
  return r;
}

RPoly rp_powmod(RPoly base, u128 e, const RPoly& m, u64 p) {
  RPoly r{1};
  rp_mod_in(base, m, p);
  while (e) {
    if (e & 1) r = rp_mulmod(r, base, m, p);
    base = rp_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

void rp_make_monic(RPoly& f, u64 p) {
  if (f.empty()) return;
  u64 c = inv_p(f.back(), p);
  for (auto& x : f) x = mul_p(x, c, p);
}

RPoly rp_gcd(RPoly a, RPoly b, u64 p) {
  while (!b.empty()) {
    rp_make_monic(b, p);
    rp_mod_in(a, b, p);
    std::swap(a, b);
  }
  rp_make_monic(a, p);
  return a;
}

// Inverse of a modulo monic m (gcd must be 1).
RPoly rp_invmod(RPoly a, const RPoly& m, u64 p) {
  // extended Euclid: r0 = m, r1 = a
  RPoly r0 = m, r1 = std::move(a);
  rp_mod_in(r1, m, p);
  RPoly t0{}, t1{1};
  while (!r1.empty()) {
    // divide r0 by r1
    RPoly q;
    {
      RPoly rem = r0;
      int d1 = rp_deg(r1);
      u64 lcinv = inv_p(r1.back(), p);
      q.assign(std::max(rp_deg(rem) - d1 + 1, 0), 0);
      for (int i = rp_deg(rem); i >= d1; --i) {
        u64 c = mul_p(rem[i], lcinv, p);
        if (c) {
          q[i - d1] = c;
          for (int j = 0; j <= d1; ++j) rem[i - d1 + j] = sub_p(rem[i - d1 + j], mul_p(c, r1[j], p), p);
        }
      }
      rp_trim(rem);
      rp_trim(q);
      r0 = std::move(r1);
      r1 = std::move(rem);
    }
    RPoly qt = rp_mul(q, t1, p);
    RPoly t2(std::max(t0.size(), qt.size()), 0);
    for (size_t i = 0; i < t2.size(); ++i) {
      u64 x = i < t0.size() ? t0[i] : 0;
      u64 y = i < qt.size() ? qt[i] : 0;
      t2[i] = sub_p(x, y, p);
    }
    rp_trim(t2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (rp_deg(r0) != 0) throw std::invalid_argument("inverse of a zero divisor");
  u64 c = inv_p(r0[0], p);
  for (auto& x : t0) x = mul_p(x, c, p);
  rp_mod_in(t0, m, p);
  return t0;
}

// Irreducibility over F_p of monic f (degree >= 1).
bool rp_irreducible(const RPoly& f, u64 p) {
  int n = rp_deg(f);
  if (n == 1) return true;
  // x^(p^j) mod f for j = 1..n by repeated p-th powering
  RPoly x{0, 1};
  std::vector<RPoly> frob(n + 1);
  frob[0] = x;
  for (int j = 1; j <= n; ++j) frob[j] = rp_powmod(frob[j - 1], p, f, p);
  RPoly top = frob[n];
  // x^(p^n) == x mod f
  RPoly diff = top;
  diff.resize(std::max<size_t>(diff.size(), 2), 0);
  diff[1] = sub_p(diff[1], 1, p);
  rp_trim(diff);
  if (!diff.empty()) return false;
  int rem = n;
  for (int ell = 2; ell <= rem; ++ell) {
    if (rem % ell) continue;
    RPoly d = frob[n / ell];
    d.resize(std::max<size_t>(d.size(), 2), 0);
    d[1] = sub_p(d[1], 1, p);
    rp_trim(d);
    RPoly g = rp_gcd(d, f, p);
    if (rp_deg(g) != 0) return false;
    while (rem % ell == 0) rem /= ell;
  }
  return true;
}

// Lexicographically least monic irreducible of degree n over F_p
// (order on the serialization [c0, c1, ..., c_{n-1}]).
RPoly least_irreducible(u64 p, unsigned n) {
  if (n == 1) return {0, 1};
  std::vector<u64> c(n, 0);
  c[0] = 1;  // constant term 0 makes f reducible
  for (;;) {
    RPoly f(c.begin(), c.end());
    f.push_back(1);
    if (rp_irreducible(f, p)) return f;
    // next vector in lex order: last coordinate varies fastest
    int i = static_cast<int>(n) - 1;
    while (i >= 0 && c[i] == p - 1) c[i--] = 0;
    if (i < 0) throw std::logic_error("no irreducible polynomial found");
    ++c[i];
  }
}

// ---- polynomials with Elem coefficients (local helpers for embeddings) ----

using EPoly = std::vector<Elem>;

void ep_trim(EPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

EPoly ep_mul(const EPoly& a, const EPoly& b, Field K) {
  if (a.empty() || b.empty()) return {};
  EPoly r(a.size() + b.size() - 1, K->zero());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  ep_trim(r);
  return r;
}

void ep_mod_in(EPoly& f, const EPoly& m, Field K) {
  int dm = static_cast<int>(m.size()) - 1;  // m monic
  for (int i = static_cast<int>(f.size()) - 1; i >= dm; --i) {
    Elem c = f[i];
    if (!c.is_zero()) {
      f[i] = K->zero();
      for (int j = 0; j < dm; ++j) f[i - dm + j] -= c * m[j];
    }
  }
  ep_trim(f);
}

EPoly ep_mulmod(const EPoly& a, const EPoly& b, const EPoly& m, Field K) {
  EPoly r = ep_mul(a, b, K);
  ep_mod_in(r, m, K);
  return r;
}

EPoly ep_powmod(EPoly base, u128 e, const EPoly& m, Field K) {
  EPoly r{K->one()};
  ep_mod_in(base, m, K);
  while (e) {
    if (e & 1) r = ep_mulmod(r, base, m, K);
    base = ep_mulmod(base, base, m, K);
    e >>= 1;
  }
  return r;
}

void ep_make_monic(EPoly& f) {
  if (f.empty()) return;
  Elem c = f.back().inv();
  for (auto& x : f) x *= c;
}

EPoly ep_gcd(EPoly a, EPoly b, Field K) {
  while (!b.empty()) {
    ep_make_monic(b);
    ep_mod_in(a, b, K);
    std::swap(a, b);
  }
  ep_make_monic(a);
  return a;
}

}  // namespace

// ---- FieldData ----

struct FieldData::Caches {
  std::once_flag chi_once;
  std::vector<signed char> chi;
  bool chi_built = false;

  std::once_flag lnr_once;
  std::unique_ptr<Elem> lnr;

  std::once_flag proot_once;
  std::unique_ptr<Elem> proot;
};

namespace {
constexpr u128 kOrderGuard = u128{1} << 126;
constexpr u64 kChiTableMax = u64{1} << 22;

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::pair<u64, unsigned>, std::unique_ptr<FieldData>>& registry() {
  static std::map<std::pair<u64, unsigned>, std::unique_ptr<FieldData>> r;
  return r;
}
}  // namespace

FieldData::FieldData(u64 p, unsigned n) : p_(p), n_(n) {
  q_ = 1;
  for (unsigned i = 0; i < n; ++i) q_ *= p;
  mod_ = least_irreducible(p, n);
  u64 d = digest_combine(0x67346669656c64ULL, p);
  d = digest_combine(d, n);
  digest_ = d;
  caches_ = new Caches;
}

FieldData::~FieldData() { delete caches_; }

Field prime_field(u64 p) {
  if (p < 3 || p >= (u64{1} << 20) || !is_prime_u64(p))
    throw std::invalid_argument("characteristic must be an odd prime below 2^20");
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto& slot = registry()[{p, 1}];
  if (!slot) slot.reset(new FieldData(p, 1));
  return slot.get();
}

Field extension_field(Field base, unsigned d) {
  if (!base) throw std::invalid_argument("null base field");
  if (d == 0 || d > 126) throw std::invalid_argument("bad extension degree");
  unsigned n = base->degree() * d;
  u128 q = 1;
  for (unsigned i = 0; i < n; ++i) {
    q *= base->p();
    if (q >= kOrderGuard) throw std::invalid_argument("field order exceeds the 2^126 guard");
  }
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto& slot = registry()[{base->p(), n}];
  if (!slot) slot.reset(new FieldData(base->p(), n));
  return slot.get();
}

Elem FieldData::zero() const { return Elem(this, std::vector<u64>(n_, 0)); }

Elem FieldData::one() const {
  std::vector<u64> c(n_, 0);
  c[0] = 1;
  return Elem(this, std::move(c));
}

Elem FieldData::from_int(i64 v) const {
  i64 m = static_cast<i64>(p_);
  i64 r = v % m;
  if (r < 0) r += m;
  std::vector<u64> c(n_, 0);
  c[0] = static_cast<u64>(r);
  return Elem(this, std::move(c));
}

Elem FieldData::gen() const {
  std::vector<u64> c(n_, 0);
  if (n_ == 1)
    c[0] = 1;
  else
    c[1] = 1;
  return Elem(this, std::move(c));
}

Elem FieldData::element(std::vector<u64> coeffs) const {
  if (coeffs.size() > n_) throw std::invalid_argument("too many coefficients");
  coeffs.resize(n_, 0);
  for (auto& x : coeffs) x %= p_;
  return Elem(this, std::move(coeffs));
}

Elem FieldData::elem_at(u64 i) const {
  std::vector<u64> c(n_, 0);
  for (unsigned j = n_; j-- > 0;) {
    c[j] = i % p_;
    i /= p_;
  }
  if (i != 0) throw std::invalid_argument("element index out of range");
  return Elem(this, std::move(c));
}

const std::vector<signed char>* FieldData::chi_table() const {
  if (q_ > kChiTableMax) return nullptr;
  std::call_once(caches_->chi_once, [this] {
    u64 q = static_cast<u64>(q_);
    std::vector<signed char> t(q, -1);
    t[0] = 0;
    // rank here is positional with c0 least significant
    std::vector<u64> c(n_, 0);
    for (u64 r = 1; r < q; ++r) {
      // increment odometer (c0 fastest)
      unsigned j = 0;
      while (c[j] == p_ - 1) c[j++] = 0;
      ++c[j];
      // square and mark
      RPoly f(c.begin(), c.end());
      rp_trim(f);
      RPoly s = rp_mul(f, f, p_);
      rp_mod_in(s, mod_, p_);
      u64 rank = 0;
      for (size_t i = s.size(); i-- > 0;) rank = rank * p_ + s[i];
      t[rank] = 1;
    }
    caches_->chi = std::move(t);
    caches_->chi_built = true;
  });
  return &caches_->chi;
}

int FieldData::chi_impl(const Elem& x) const {
  if (x.is_zero()) return 0;
  if (const auto* t = chi_table()) {
    u64 rank = 0;
    const auto& c = x.coeffs();
    for (size_t i = c.size(); i-- > 0;) rank = rank * p_ + c[i];
    return (*t)[rank];
  }
  Elem r = x.pow((q_ - 1) / 2);
  if (r.is_one()) return 1;
  return -1;
}

const Elem& FieldData::least_nonresidue() const {
  std::call_once(caches_->lnr_once, [this] {
    for (u64 i = 1;; ++i) {
      Elem x = elem_at(i);
      if (x.chi() == -1) {
        caches_->lnr = std::make_unique<Elem>(std::move(x));
        return;
      }
    }
  });
  return *caches_->lnr;
}

const Elem& FieldData::primitive_root() const {
  std::call_once(caches_->proot_once, [this] {
    if (q_ > (u128{1} << 63)) throw std::invalid_argument("primitive_root: field too large");
    u64 qm1 = static_cast<u64>(q_ - 1);
    auto fac = factor_u64(qm1);
    for (u64 i = 1;; ++i) {
      Elem x = elem_at(i);
      bool ok = true;
      for (const auto& [ell, e] : fac) {
        (void)e;
        if (x.pow(qm1 / ell).is_one()) {
          ok = false;
          break;
        }
      }
      if (ok) {
        caches_->proot = std::make_unique<Elem>(std::move(x));
        return;
      }
    }
  });
  return *caches_->proot;
}

// ---- Elem ----

Elem::Elem(Field f, std::vector<u64> coeffs) : f_(f), c_(std::move(coeffs)) {
  if (c_.size() != f->degree()) throw std::invalid_argument("coefficient count mismatch");
}

static void require_same(const Elem& a, const Elem& b) {
  if (a.field() != b.field()) throw std::invalid_argument("operands belong to different fields");
}

bool Elem::is_zero() const {
  for (u64 x : c_)
    if (x) return false;
  return true;
}

bool Elem::is_one() const {
  if (c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i]) return false;
  return true;
}

Elem Elem::operator+(const Elem& o) const {
  require_same(*this, o);
  std::vector<u64> r(c_.size());
  u64 p = f_->p();
  for (size_t i = 0; i < c_.size(); ++i) r[i] = add_p(c_[i], o.c_[i], p);
  return Elem(f_, std::move(r));
}

Elem Elem::operator-(const Elem& o) const {
  require_same(*this, o);
  std::vector<u64> r(c_.size());
  u64 p = f_->p();
  for (size_t i = 0; i < c_.size(); ++i) r[i] = sub_p(c_[i], o.c_[i], p);
  return Elem(f_, std::move(r));
}

Elem Elem::operator-() const {
  std::vector<u64> r(c_.size());
  u64 p = f_->p();
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] ? p - c_[i] : 0;
  return Elem(f_, std::move(r));
}

Elem Elem::operator*(const Elem& o) const {
  require_same(*this, o);
  u64 p = f_->p();
  unsigned n = f_->degree();
  if (n == 1) return Elem(f_, {mul_p(c_[0], o.c_[0], p)});
  RPoly a(c_.begin(), c_.end());
  RPoly b(o.c_.begin(), o.c_.end());
  rp_trim(a);
  rp_trim(b);
  RPoly r = rp_mul(a, b, p);
  rp_mod_in(r, f_->modulus(), p);
  r.resize(n, 0);
  return Elem(f_, std::vector<u64>(r.begin(), r.end()));
}

Elem Elem::inv() const {
  if (is_zero()) throw std::invalid_argument("division by zero");
  u64 p = f_->p();
  unsigned n = f_->degree();
  if (n == 1) return Elem(f_, {inv_p(c_[0], p)});
  RPoly a(c_.begin(), c_.end());
  rp_trim(a);
  RPoly r = rp_invmod(std::move(a), f_->modulus(), p);
  r.resize(n, 0);
  return Elem(f_, std::vector<u64>(r.begin(), r.end()));
}

Elem Elem::pow(u128 e) const {
  Elem r = f_->one();
  Elem b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

int Elem::chi() const { return f_->chi_impl(*this); }

std::optional<Elem> Elem::sqrt() const {
  if (is_zero()) return *this;
  if (chi() != 1) return std::nullopt;
  u128 q = f_->order();
  Elem r = f_->zero();
  if ((q & 3) == 3) {
    r = pow((q + 1) / 4);
  } else {
    // Tonelli-Shanks
    u128 m = q - 1;
    unsigned s = 0;
    while ((m & 1) == 0) {
      m >>= 1;
      ++s;
    }
    Elem z = f_->least_nonresidue().pow(m);
    Elem t = pow(m);
    r = pow((m + 1) / 2);
    while (!t.is_one()) {
      Elem t2 = t;
      unsigned i = 0;
      while (!t2.is_one()) {
        t2 = t2.square();
        ++i;
      }
      Elem b = z;
      for (unsigned j = 0; j + i + 1 < s; ++j) b = b.square();
      r = r * b;
      z = b.square();
      t = t * z;
      s = i;
    }
  }
  Elem neg = -r;
  return neg.lex_less(r) ? neg : r;
}

Elem Elem::frobenius(Field base, unsigned k) const {
  if (!base || base->p() != f_->p()) throw std::invalid_argument("frobenius: incompatible base");
  Elem r = *this;
  for (unsigned i = 0; i < k; ++i) r = r.pow(base->order());
  return r;
}

u64 Elem::lex_rank() const {
  u64 r = 0;
  for (u64 c : c_) r = r * f_->p() + c;
  return r;
}

u64 Elem::digest() const {
  u64 h = digest_combine(f_->digest(), 0x656c656dULL);
  for (u64 c : c_) h = digest_combine(h, c);
  return h;
}

std::string Elem::str() const {
  std::ostringstream os;
  if (c_.size() == 1) {
    os << c_[0];
  } else {
    os << '[';
    for (size_t i = 0; i < c_.size(); ++i) {
      if (i) os << ',';
      os << c_[i];
    }
    os << ']';
  }
  return os.str();
}

// ---- Embedding ----

namespace {
std::mutex& embed_mutex() {
  static std::mutex m;
  return m;
}
std::map<std::pair<Field, Field>, std::unique_ptr<Embedding>>& embed_registry() {
  static std::map<std::pair<Field, Field>, std::unique_ptr<Embedding>> r;
  return r;
}
}  // namespace

const Embedding& Embedding::get(Field src, Field dst) {
  std::lock_guard<std::mutex> lock(embed_mutex());
  auto& slot = embed_registry()[{src, dst}];
  if (!slot) slot.reset(new Embedding(src, dst));
  return *slot;
}

Embedding::Embedding(Field src, Field dst) : src_(src), dst_(dst) {
  if (src->p() != dst->p() || dst->degree() % src->degree() != 0)
    throw std::invalid_argument("embedding requires a subfield pair");
  unsigned a = src->degree(), b = dst->degree();
  u64 p = src->p();

  Elem root = dst->gen();
  if (src == dst) {
    // identity
  } else if (a == 1) {
    root = dst->one();
  } else {
    // one root of the source modulus inside dst, then the lex-least conjugate
    EPoly m;
    m.reserve(a + 1);
    for (u64 c : src->modulus()) m.push_back(dst->from_int(static_cast<i64>(c)));
    Rng rng(digest_combine(digest_combine(src->digest(), dst->digest()), 0x656d62ULL));
    EPoly g = m;
    while (g.size() > 2) {
      // random z; gcd((x+z)^((Q-1)/2) - 1, g) splits g with probability ~1/2
      std::vector<u64> zc(b);
      for (auto& x : zc) x = rng.below(p);
      EPoly lin{Elem(dst, std::move(zc)), dst->one()};
      EPoly w = ep_powmod(lin, (dst->order() - 1) / 2, g, dst);
      if (w.empty())
        w = EPoly{-dst->one()};
      else
        w[0] -= dst->one();
      ep_trim(w);
      EPoly h = ep_gcd(w, g, dst);
      size_t dh = h.empty() ? 0 : h.size() - 1;
      if (dh == 0 || dh == g.size() - 1) continue;
      // keep the smaller factor
      if (dh <= (g.size() - 1) / 2) {
        g = std::move(h);
      } else {
        // g / h
        EPoly quo;
        EPoly rem = g;
        int dhi = static_cast<int>(h.size()) - 1;
        quo.assign(g.size() - h.size() + 1, dst->zero());
        for (int i = static_cast<int>(rem.size()) - 1; i >= dhi; --i) {
          Elem c = rem[i];
          if (!c.is_zero()) {
            quo[i - dhi] = c;
            for (int j = 0; j <= dhi; ++j) rem[i - dhi + j] -= c * h[j];
          }
        }
        g = std::move(quo);
        ep_trim(g);
        ep_make_monic(g);
      }
    }
    Elem r0 = -g[0];
    root = r0;
    Elem conj = r0;
    for (unsigned i = 1; i < a; ++i) {
      conj = conj.pow(p);
      if (conj.lex_less(root)) root = conj;
    }
  }

  gen_pows_.clear();
  Elem acc = dst->one();
  for (unsigned i = 0; i < a; ++i) {
    gen_pows_.push_back(acc);
    acc = acc * root;
  }

  // Row-reduce the b x a matrix of gen powers, tracking the transform on I_b.
  std::vector<std::vector<u64>> M(b, std::vector<u64>(a + b, 0));
  for (unsigned i = 0; i < a; ++i)
    for (unsigned r = 0; r < b; ++r) M[r][i] = gen_pows_[i].coeffs()[r];
  for (unsigned r = 0; r < b; ++r) M[r][a + r] = 1;
  pivot_col_.assign(a, -1);
  unsigned row = 0;
  for (unsigned col = 0; col < a && row < b; ++col) {
    unsigned pr = row;
    while (pr < b && M[pr][col] == 0) ++pr;
    if (pr == b) throw std::logic_error("embedding basis is singular");
    std::swap(M[pr], M[row]);
    u64 s = inv_p(M[row][col], p);
    for (auto& x : M[row]) x = mul_p(x, s, p);
    for (unsigned r = 0; r < b; ++r) {
      if (r == row) continue;
      u64 c = M[r][col];
      if (c) {
        for (unsigned k = col; k < a + b; ++k) M[r][k] = sub_p(M[r][k], mul_p(c, M[row][k], p), p);
      }
    }
    pivot_col_[col] = static_cast<int>(row);
    ++row;
  }
  solve_ = std::move(M);
}

Elem Embedding::apply(const Elem& x) const {
  if (x.field() != src_) throw std::invalid_argument("embedding: wrong source field");
  if (src_ == dst_) return x;
  Elem r = dst_->zero();
  for (unsigned i = 0; i < src_->degree(); ++i) {
    u64 c = x.coeffs()[i];
    if (c) r += gen_pows_[i] * dst_->from_int(static_cast<i64>(c));
  }
  return r;
}

std::optional<Elem> Embedding::descend(const Elem& y) const {
  if (y.field() != dst_) throw std::invalid_argument("embedding: wrong target field");
  if (src_ == dst_) return y;
  unsigned a = src_->degree(), b = dst_->degree();
  u64 p = src_->p();
  // v = E * y where solve_ rows are [RREF(M) | E]
  std::vector<u64> s(a, 0);
  for (unsigned r = 0; r < b; ++r) {
    u64 acc = 0;
    for (unsigned k = 0; k < b; ++k) acc = (acc + solve_[r][a + k] * y.coeffs()[k]) % p;
    // row r of RREF(M): pivot rows carry solution entries, zero rows demand 0
    bool pivot_row = false;
    for (unsigned col = 0; col < a; ++col) {
      if (pivot_col_[col] == static_cast<int>(r)) {
        s[col] = acc;
        pivot_row = true;
        break;
      }
    }
    if (!pivot_row && acc != 0) return std::nullopt;
  }
  return Elem(src_, std::move(s));
}

}  // namespace g4

#include "g4/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace g4 {

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly::Poly(Field f, std::vector<Elem> coeffs) : f_(f), c_(std::move(coeffs)) {
  for (const auto& e : c_)
    if (e.field() != f_) throw std::invalid_argument("coefficient from the wrong field");
  trim();
}

Poly Poly::from_ints(Field f, const std::vector<i64>& coeffs) {
  std::vector<Elem> c;
  c.reserve(coeffs.size());
  for (i64 v : coeffs) c.push_back(f->from_int(v));
  return Poly(f, std::move(c));
}

Poly Poly::x(Field f) { return from_ints(f, {0, 1}); }

Elem Poly::coeff(unsigned i) const { return i < c_.size() ? c_[i] : f_->zero(); }

const Elem& Poly::lc() const {
  if (c_.empty()) throw std::invalid_argument("zero polynomial has no leading coefficient");
  return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
  if (f_ != o.f_) throw std::invalid_argument("operands over different fields");
  std::vector<Elem> r(std::max(c_.size(), o.c_.size()), f_->zero());
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Poly(f_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
  if (f_ != o.f_) throw std::invalid_argument("operands over different fields");
  std::vector<Elem> r(std::max(c_.size(), o.c_.size()), f_->zero());
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return Poly(f_, std::move(r));
}

Poly Poly::operator-() const {
  std::vector<Elem> r;
  r.reserve(c_.size());
  for (const auto& e : c_) r.push_back(-e);
  return Poly(f_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  if (f_ != o.f_) throw std::invalid_argument("operands over different fields");
  if (c_.empty() || o.c_.empty()) return Poly(f_);
  std::vector<Elem> r(c_.size() + o.c_.size() - 1, f_->zero());
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return Poly(f_, std::move(r));
}

Poly Poly::operator*(const Elem& s) const {
  std::vector<Elem> r;
  r.reserve(c_.size());
  for (const auto& e : c_) r.push_back(e * s);
  return Poly(f_, std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (f_ != d.f_) throw std::invalid_argument("operands over different fields");
  if (d.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  int dd = d.degree();
  if (degree() < dd) return {Poly(f_), *this};
  Elem lcinv = d.lc().inv();
  std::vector<Elem> rem = c_;
  std::vector<Elem> quo(degree() - dd + 1, f_->zero());
  for (int i = degree(); i >= dd; --i) {
    Elem c = rem[i] * lcinv;
    if (!c.is_zero()) {
      quo[i - dd] = c;
      for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= c * d.c_[j];
    }
  }
  return {Poly(f_, std::move(quo)), Poly(f_, std::move(rem))};
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(f_);
  std::vector<Elem> r;
  r.reserve(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * f_->from_int(static_cast<i64>(i)));
  return Poly(f_, std::move(r));
}

Elem Poly::eval(const Elem& x) const {
  Elem r = f_->zero();
  for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * lc().inv();
}

Poly Poly::shift(unsigned k) const {
  if (is_zero()) return *this;
  std::vector<Elem> r(c_.size() + k, f_->zero());
  for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
  return Poly(f_, std::move(r));
}

Poly Poly::compose_linear(const Elem& c1, const Elem& c0) const {
  Poly lin(f_, {c0, c1});
  Poly r(f_);
  for (size_t i = c_.size(); i-- > 0;) r = r * lin + Poly(f_, {c_[i]});
  return r;
}

Poly Poly::reverse_shift(unsigned N, const Elem& a) const {
  if (degree() > static_cast<int>(N)) throw std::invalid_argument("reverse_shift: N below degree");
  // x^N f(1/x + a) = sum_i f_i x^(N-i) (1 + a x)^i
  Poly r(f_);
  Poly base(f_, {f_->one(), a});
  Poly pw = Poly(f_, {f_->one()});
  for (size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) r = r + (pw * c_[i]).shift(N - static_cast<unsigned>(i));
    if (i + 1 < c_.size()) pw = pw * base;
  }
  return r;
}

Poly Poly::lift(const Embedding& e) const {
  std::vector<Elem> r;
  r.reserve(c_.size());
  for (const auto& x : c_) r.push_back(e.apply(x));
  return Poly(e.dst(), std::move(r));
}

std::optional<Poly> Poly::descend(const Embedding& e) const {
  std::vector<Elem> r;
  r.reserve(c_.size());
  for (const auto& x : c_) {
    auto d = e.descend(x);
    if (!d) return std::nullopt;
    r.push_back(*d);
  }
  return Poly(e.src(), std::move(r));
}

bool Poly::is_separable() const {
  if (is_zero()) return false;
  if (degree() == 0) return true;
  return gcd(*this, derivative()).degree() == 0;
}

u64 Poly::digest() const {
  u64 h = digest_combine(f_->digest(), 0x706f6c79ULL);
  for (const auto& e : c_) h = digest_combine(h, e.digest());
  return h;
}

std::string Poly::str() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ',';
    os << c_[i].str();
  }
  os << ']';
  return os.str();
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly powmod(const Poly& base, u128 e, const Poly& mod) {
  Poly r = Poly::from_ints(base.field(), {1});
  Poly b = base % mod;
  while (e) {
    if (e & 1) r = (r * b) % mod;
    b = (b * b) % mod;
    e >>= 1;
  }
  return r;
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  for (size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] != cb[i]) return ca[i].lex_less(cb[i]);
  }
  return false;
}

namespace {

// p-th root of f when f = g(x^p); coefficientwise c -> c^(q/p).
Poly pth_root(const Poly& f, u64 p) {
  Field K = f.field();
  u128 e = K->order() / p;
  std::vector<Elem> r;
  for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) r.push_back(f.coeff(i).pow(e));
  return Poly(K, std::move(r));
}

// Squarefree decomposition of monic f: list of (g, multiplicity).
void squarefree_decompose(const Poly& f, int mult, std::vector<std::pair<Poly, int>>& out) {
  Field K = f.field();
  u64 p = K->p();
  if (f.degree() <= 0) return;
  Poly d = f.derivative();
  if (d.is_zero()) {
    squarefree_decompose(pth_root(f, p), mult * static_cast<int>(p), out);
    return;
  }
  Poly c = gcd(f, d);
  Poly w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    if (fac.degree() > 0) out.push_back({fac.monic(), mult * i});
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) squarefree_decompose(pth_root(c, p), mult * static_cast<int>(p), out);
}

// Distinct-degree decomposition of squarefree monic f.
std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f) {
  Field K = f.field();
  std::vector<std::pair<Poly, int>> out;
  Poly rest = f;
  Poly h = Poly::x(K) % rest;  // x^(q^d) mod rest, iterated
  int d = 0;
  while (rest.degree() > 0) {
    ++d;
    if (2 * d > rest.degree()) {
      out.push_back({rest, rest.degree()});
      break;
    }
    h = powmod(h, K->order(), rest);
    Poly g = gcd(h - Poly::x(K), rest);
    if (g.degree() > 0) {
      out.push_back({g, d});
      rest = rest / g;
      h = h % rest;
    }
  }
  return out;
}

// Equal-degree splitting (odd q): f squarefree monic, all factors of degree d.
// Uses w^((q^d-1)/2) = norm-chain(w)^((q-1)/2) so no exponent exceeds q.
void equal_degree(const Poly& f, int d, Rng& rng, std::vector<Poly>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  Field K = f.field();
  for (;;) {
    std::vector<Elem> wc(f.degree());
    for (auto& e : wc) {
      std::vector<u64> c(K->degree());
      for (auto& v : c) v = rng.below(K->p());
      e = Elem(K, std::move(c));
    }
    Poly w(K, std::move(wc));
    if (w.degree() < 1) continue;
    Poly g = gcd(w, f);
    if (g.degree() == 0) {
      Poly acc = w % f;
      Poly cur = acc;
      for (int i = 1; i < d; ++i) {
        cur = powmod(cur, K->order(), f);
        acc = (acc * cur) % f;
      }
      Poly t = powmod(acc, (K->order() - 1) / 2, f) - Poly::from_ints(K, {1});
      g = gcd(t, f);
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<Poly, int>> factor(const Poly& f, Rng& rng) {
  if (f.is_zero()) throw std::invalid_argument("factor: zero polynomial");
  std::vector<std::pair<Poly, int>> out;
  if (f.degree() == 0) return out;
  std::vector<std::pair<Poly, int>> sqf;
  squarefree_decompose(f.monic(), 1, sqf);
  for (const auto& [g, mult] : sqf) {
    for (const auto& [h, d] : distinct_degree(g)) {
      std::vector<Poly> irr;
      equal_degree(h, d, rng, irr);
      for (auto& u : irr) out.push_back({std::move(u), mult});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  return out;
}

std::vector<std::pair<Poly, int>> factor(const Poly& f) {
  Rng rng(digest_combine(f.digest(), 0x666163ULL));
  return factor(f, rng);
}

std::vector<Elem> roots_in_field(const Poly& f, Field K) {
  if (f.is_zero()) throw std::invalid_argument("roots_in_field: zero polynomial");
  Poly g = f;
  if (K != f.field()) g = f.lift(Embedding::get(f.field(), K));
  if (g.degree() <= 0) return {};
  // isolate the part that splits into distinct linear factors over K
  Poly xq = powmod(Poly::x(K), K->order(), g);
  Poly lin = gcd(xq - Poly::x(K), g);
  std::vector<Elem> roots;
  if (lin.degree() >= 1) {
    Rng rng(digest_combine(g.digest(), 0x726f6f74ULL));
    std::vector<Poly> parts;
    equal_degree(lin, 1, rng, parts);
    roots.reserve(parts.size());
    for (const auto& p : parts) roots.push_back(-p.coeff(0));
  }
  std::sort(roots.begin(), roots.end(), [](const Elem& a, const Elem& b) { return a.lex_less(b); });
  return roots;
}

Field splitting_field(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("splitting_field: zero polynomial");
  unsigned d = 1;
  for (const auto& [g, m] : factor(f)) {
    (void)m;
    d = static_cast<unsigned>(std::lcm<u64>(d, static_cast<u64>(g.degree())));
  }
  return extension_field(f.field(), d);
}

std::pair<Poly, Poly> param_ratio_reduce(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::invalid_argument("param_ratio_reduce: zero denominator");
  Field K = num.field();
  if (num.is_zero()) return {Poly(K), Poly::from_ints(K, {1})};
  Poly g = gcd(num, den);
  Poly n = num / g;
  Poly d = den / g;
  Elem s = d.lc().inv();
  return {n * s, d * s};
}

// ---- ParamPoly ----

void ParamPoly::trim() {
  while (!cx_.empty() && cx_.back().is_zero()) cx_.pop_back();
}

ParamPoly::ParamPoly(Field f, std::vector<Poly> coeffs_x) : f_(f), cx_(std::move(coeffs_x)) {
  for (const auto& p : cx_)
    if (p.field() != f_) throw std::invalid_argument("coefficient from the wrong field");
  trim();
}

ParamPoly ParamPoly::constant(const Poly& p) { return ParamPoly(p.field(), {p}); }

ParamPoly ParamPoly::from_poly_in_x(const Poly& p) {
  std::vector<Poly> cx;
  for (int i = 0; i <= p.degree(); ++i) cx.push_back(Poly(p.field(), {p.coeff(i)}));
  return ParamPoly(p.field(), std::move(cx));
}

Poly ParamPoly::coeff_x(unsigned i) const {
  return i < cx_.size() ? cx_[i] : Poly(f_);
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
  if (f_ != o.f_) throw std::invalid_argument("operands over different fields");
  std::vector<Poly> r(std::max(cx_.size(), o.cx_.size()), Poly(f_));
  for (size_t i = 0; i < cx_.size(); ++i) r[i] = r[i] + cx_[i];
  for (size_t i = 0; i < o.cx_.size(); ++i) r[i] = r[i] + o.cx_[i];
  return ParamPoly(f_, std::move(r));
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const {
  if (f_ != o.f_) throw std::invalid_argument("operands over different fields");
  std::vector<Poly> r(std::max(cx_.size(), o.cx_.size()), Poly(f_));
  for (size_t i = 0; i < cx_.size(); ++i) r[i] = r[i] + cx_[i];
  for (size_t i = 0; i < o.cx_.size(); ++i) r[i] = r[i] - o.cx_[i];
  return ParamPoly(f_, std::move(r));
}

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
  if (f_ != o.f_) throw std::invalid_argument("operands over different fields");
  if (cx_.empty() || o.cx_.empty()) return ParamPoly(f_);
  std::vector<Poly> r(cx_.size() + o.cx_.size() - 1, Poly(f_));
  for (size_t i = 0; i < cx_.size(); ++i) {
    if (cx_[i].is_zero()) continue;
    for (size_t j = 0; j < o.cx_.size(); ++j) r[i + j] = r[i + j] + cx_[i] * o.cx_[j];
  }
  return ParamPoly(f_, std::move(r));
}

ParamPoly ParamPoly::scale(const Poly& s) const {
  std::vector<Poly> r;
  r.reserve(cx_.size());
  for (const auto& p : cx_) r.push_back(p * s);
  return ParamPoly(f_, std::move(r));
}

}  // namespace g4

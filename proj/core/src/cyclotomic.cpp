#include "skeinrep/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace skeinrep {

namespace {

// Exact division of integer polynomials, used to build Phi_N by dividing
// x^n - 1 by the cyclotomic polynomials of the proper divisors.
std::vector<mpz_class> int_poly_div(const std::vector<mpz_class>& num,
                                    const std::vector<mpz_class>& den) {
  std::vector<mpz_class> r = num;
  std::vector<mpz_class> quot(num.size() - den.size() + 1, mpz_class(0));
  long dn = static_cast<long>(den.size()) - 1;
  for (long i = static_cast<long>(r.size()) - 1; i >= dn; --i) {
    if (r[i] == 0) continue;
    mpz_class c = r[i] / den[dn];
    quot[i - dn] = c;
    for (long j = 0; j <= dn; ++j) r[i - dn + j] -= c * den[j];
  }
  for (const auto& v : r)
    if (v != 0) throw std::logic_error("inexact cyclotomic division");
  return quot;
}

std::vector<mpz_class> compute_cyclotomic_poly(long n) {
  std::vector<mpz_class> num(n + 1, mpz_class(0));
  num[0] = -1;
  num[n] = 1;  // x^n - 1
  std::vector<mpz_class> result = num;
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    result = int_poly_div(result, compute_cyclotomic_poly(d));
  }
  return result;
}

}  // namespace

CycFieldPtr CycField::make(long order) {
  if (order < 3 || order % 2 == 0)
    throw std::invalid_argument("root order must be odd and >= 3");
  auto F = std::shared_ptr<CycField>(new CycField());
  F->order_ = order;
  F->phi_ = compute_cyclotomic_poly(order);
  F->degree_ = F->phi_.size() - 1;
  size_t maxpow = std::max<size_t>(2 * F->degree_, static_cast<size_t>(order)) + 1;
  F->xpow_.resize(maxpow + 1);
  std::vector<mpq_class> cur(F->degree_, mpq_class(0));
  cur[0] = 1;
  F->xpow_[0] = cur;
  for (size_t k = 1; k <= maxpow; ++k) {
    // multiply by x, reduce the overflow coefficient with Phi_N
    std::vector<mpq_class> nxt(F->degree_, mpq_class(0));
    for (size_t i = 0; i + 1 < F->degree_; ++i) nxt[i + 1] = cur[i];
    mpq_class top = cur[F->degree_ - 1];
    if (top != 0) {
      for (size_t i = 0; i < F->degree_; ++i)
        nxt[i] -= top * mpq_class(F->phi_[i]);
    }
    F->xpow_[k] = nxt;
    cur = std::move(nxt);
  }
  return F;
}

Cyc CycField::zero() const {
  return Cyc(this, std::vector<mpq_class>(degree_, mpq_class(0)));
}

Cyc CycField::one() const { return integer(1); }

Cyc CycField::integer(long v) const {
  std::vector<mpq_class> c(degree_, mpq_class(0));
  c[0] = v;
  return Cyc(this, std::move(c));
}

Cyc CycField::rational(const mpq_class& v) const {
  std::vector<mpq_class> c(degree_, mpq_class(0));
  c[0] = v;
  return Cyc(this, std::move(c));
}

Cyc CycField::from_coeffs(std::vector<mpq_class> coeffs) const {
  std::vector<mpq_class> out(degree_, mpq_class(0));
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    size_t e = k;
    if (e >= degree_) {
      assert(e < xpow_.size());
      for (size_t i = 0; i < degree_; ++i) out[i] += coeffs[k] * xpow_[e][i];
    } else {
      out[e] += coeffs[k];
    }
  }
  return Cyc(this, std::move(out));
}

Cyc CycField::zeta(long k) const {
  long e = ((k % order_) + order_) % order_;
  return Cyc(this, xpow_[e]);
}

Cyc CycField::qint(long n) const {
  // (q^n - q^{-n}) / (q - q^{-1})
  return (q(n) - q(-n)) / q_minus_qinv();
}

Cyc CycField::q_minus_qinv() const { return q(1) - q(-1); }

bool Cyc::is_zero() const {
  for (const auto& v : c_)
    if (v != 0) return false;
  return true;
}

bool Cyc::is_one() const {
  assert(field_);
  if (c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Cyc Cyc::operator-() const {
  std::vector<mpq_class> out(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) out[i] = -c_[i];
  return Cyc(field_, std::move(out));
}

Cyc Cyc::operator+(const Cyc& o) const {
  assert(field_ && field_ == o.field_);
  std::vector<mpq_class> out(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] + o.c_[i];
  return Cyc(field_, std::move(out));
}

Cyc Cyc::operator-(const Cyc& o) const {
  assert(field_ && field_ == o.field_);
  std::vector<mpq_class> out(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] - o.c_[i];
  return Cyc(field_, std::move(out));
}

Cyc Cyc::operator*(const Cyc& o) const {
  assert(field_ && field_ == o.field_);
  size_t d = field_->degree_;
  std::vector<mpq_class> conv(2 * d - 1, mpq_class(0));
  for (size_t i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < d; ++j) {
      if (o.c_[j] == 0) continue;
      conv[i + j] += c_[i] * o.c_[j];
    }
  }
  std::vector<mpq_class> out(d, mpq_class(0));
  for (size_t k = 0; k < conv.size(); ++k) {
    if (conv[k] == 0) continue;
    if (k < d) {
      out[k] += conv[k];
    } else {
      const auto& red = field_->xpow_[k];
      for (size_t i = 0; i < d; ++i) out[i] += conv[k] * red[i];
    }
  }
  return Cyc(field_, std::move(out));
}

Cyc Cyc::operator/(const Cyc& o) const { return *this * o.inverse(); }

bool Cyc::operator==(const Cyc& o) const {
  assert(field_ && field_ == o.field_);
  return c_ == o.c_;
}

Cyc Cyc::inverse() const {
  assert(field_);
  if (is_zero()) throw std::domain_error("inverse of zero");
  // extended Euclid in Q[x] against Phi_N (irreducible over Q)
  using Poly = std::vector<mpq_class>;
  auto deg = [](const Poly& p) {
    for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
      if (p[i] != 0) return i;
    return -1l;
  };
  Poly r0(field_->phi_.size());
  for (size_t i = 0; i < field_->phi_.size(); ++i) r0[i] = mpq_class(field_->phi_[i]);
  Poly r1 = c_;
  Poly s0 = {mpq_class(0)}, s1 = {mpq_class(1)};
  while (true) {
    long d1 = deg(r1);
    assert(d1 >= 0);
    if (d1 == 0) break;
    long d0 = deg(r0);
    // r0 = q*r1 + r; track s-coefficients along the way
    Poly q(d0 - d1 + 1, mpq_class(0));
    Poly r = r0;
    for (long i = d0; i >= d1; --i) {
      if (r[i] == 0) continue;
      mpq_class c = r[i] / r1[d1];
      q[i - d1] = c;
      for (long j = 0; j <= d1; ++j) r[i - d1 + j] -= c * r1[j];
    }
    Poly s(std::max(s0.size(), s1.size() + q.size()), mpq_class(0));
    for (size_t i = 0; i < s0.size(); ++i) s[i] += s0[i];
    for (size_t i = 0; i < s1.size(); ++i)
      for (size_t j = 0; j < q.size(); ++j)
        if (q[j] != 0) s[i + j] -= q[j] * s1[i];
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r1 is a nonzero constant c: inverse = s1 / c  (mod Phi_N)
  mpq_class c = r1[0];
  for (auto& v : s1) v /= c;
  return field_->from_coeffs(std::move(s1));
}

Cyc Cyc::pow(long e) const {
  assert(field_);
  if (e < 0) return inverse().pow(-e);
  Cyc acc = field_->one();
  Cyc base = *this;
  unsigned long u = static_cast<unsigned long>(e);
  while (u) {
    if (u & 1) acc = acc * base;
    base = base * base;
    u >>= 1;
  }
  return acc;
}

std::string Cyc::str() const {
  assert(field_);
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    os << c_[i].get_str();
    if (i > 0) os << "*z^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

// ---------------- polynomials over Cyc ----------------

CycPoly poly_trim(CycPoly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

bool poly_is_zero(const CycPoly& p) {
  for (const auto& c : p)
    if (!c.is_zero()) return false;
  return true;
}

long poly_degree(const CycPoly& p) {
  for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
    if (!p[i].is_zero()) return i;
  return -1;
}

CycPoly poly_add(const CycPoly& a, const CycPoly& b) {
  CycPoly out(std::max(a.size(), b.size()));
  for (size_t i = 0; i < out.size(); ++i) {
    if (i < a.size() && i < b.size())
      out[i] = a[i] + b[i];
    else if (i < a.size())
      out[i] = a[i];
    else
      out[i] = b[i];
  }
  return poly_trim(out);
}

CycPoly poly_sub(const CycPoly& a, const CycPoly& b) {
  CycPoly nb(b.size());
  for (size_t i = 0; i < b.size(); ++i) nb[i] = -b[i];
  return poly_add(a, nb);
}

CycPoly poly_mul(const CycPoly& a, const CycPoly& b) {
  if (a.empty() || b.empty()) return {};
  const CycField* F = a[0].field();
  CycPoly out(a.size() + b.size() - 1, F->zero());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return poly_trim(out);
}

Cyc poly_eval(const CycPoly& p, const Cyc& x) {
  Cyc acc = x.field()->zero();
  for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i) acc = acc * x + p[i];
  return acc;
}

CycPoly poly_derivative(const CycPoly& p) {
  if (p.size() <= 1) return {};
  const CycField* F = p[0].field();
  CycPoly out(p.size() - 1, F->zero());
  for (size_t i = 1; i < p.size(); ++i) out[i - 1] = p[i] * F->integer(static_cast<long>(i));
  return poly_trim(out);
}

CycPoly poly_divide_linear(const CycPoly& p, const Cyc& r, Cyc* rem) {
  // synthetic division by (X - r)
  const CycField* F = r.field();
  if (p.empty()) {
    if (rem) *rem = F->zero();
    return {};
  }
  CycPoly q(p.size() > 1 ? p.size() - 1 : 0, F->zero());
  Cyc carry = F->zero();
  for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i) {
    Cyc v = p[i] + carry * r;
    if (i == 0) {
      if (rem) *rem = v;
    } else {
      q[i - 1] = v;
      carry = v;
    }
  }
  return poly_trim(q);
}

CycPoly poly_monic(const CycPoly& p) {
  CycPoly t = poly_trim(p);
  if (t.empty()) return t;
  Cyc inv = t.back().inverse();
  for (auto& c : t) c = c * inv;
  return t;
}

CycPoly poly_rem(CycPoly a, const CycPoly& b) {
  a = poly_trim(a);
  CycPoly d = poly_trim(b);
  assert(!d.empty());
  Cyc lead_inv = d.back().inverse();
  while (a.size() >= d.size() && !a.empty()) {
    Cyc c = a.back() * lead_inv;
    size_t shift = a.size() - d.size();
    for (size_t i = 0; i < d.size(); ++i) a[shift + i] -= c * d[i];
    a = poly_trim(a);
  }
  return a;
}

CycPoly poly_gcd(CycPoly a, CycPoly b) {
  a = poly_trim(a);
  b = poly_trim(b);
  while (!b.empty()) {
    CycPoly r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(a);
}

CycPoly poly_lcm(const CycPoly& a, const CycPoly& b) {
  if (poly_is_zero(a) || poly_is_zero(b)) return {};
  CycPoly g = poly_gcd(a, b);
  // exact: (a*b)/g via repeated linear-free long division
  CycPoly prod = poly_mul(a, b);
  // divide prod by g
  CycPoly q;
  CycPoly r = prod;
  Cyc lead_inv = g.back().inverse();
  q.assign(prod.size() - g.size() + 1, a[0].field()->zero());
  while (r.size() >= g.size() && !poly_is_zero(r)) {
    r = poly_trim(r);
    if (r.size() < g.size()) break;
    Cyc c = r.back() * lead_inv;
    size_t shift = r.size() - g.size();
    q[shift] = c;
    for (size_t i = 0; i < g.size(); ++i) r[shift + i] -= c * g[i];
  }
  return poly_monic(q);
}

long root_multiplicity(const CycPoly& p, const Cyc& r) {
  CycPoly cur = poly_trim(p);
  if (poly_is_zero(cur)) throw std::invalid_argument("zero polynomial");
  long m = 0;
  while (true) {
    Cyc rem;
    CycPoly q = poly_divide_linear(cur, r, &rem);
    if (!rem.is_zero()) return m;
    ++m;
    cur = q;
    if (cur.empty()) return m;
  }
}

// ---------------- Chebyshev ----------------

std::vector<mpz_class> chebyshev_T(long n) {
  if (n < 0) throw std::invalid_argument("negative Chebyshev index");
  std::vector<mpz_class> t0 = {mpz_class(2)};
  if (n == 0) return t0;
  std::vector<mpz_class> t1 = {mpz_class(0), mpz_class(1)};
  if (n == 1) return t1;
  for (long i = 2; i <= n; ++i) {
    std::vector<mpz_class> t2(t1.size() + 1, mpz_class(0));
    for (size_t j = 0; j < t1.size(); ++j) t2[j + 1] = t1[j];
    for (size_t j = 0; j < t0.size(); ++j) t2[j] -= t0[j];
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  return t1;
}

Cyc eval_int_poly(const std::vector<mpz_class>& p, const Cyc& x) {
  const CycField* F = x.field();
  Cyc acc = F->zero();
  for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
    acc = acc * x + F->rational(mpq_class(p[i]));
  return acc;
}

CycPoly int_poly_to_cyc(const std::vector<mpz_class>& p, const CycField& F) {
  CycPoly out(p.size(), F.zero());
  for (size_t i = 0; i < p.size(); ++i) out[i] = F.rational(mpq_class(p[i]));
  return poly_trim(out);
}

std::vector<FiberPoint> chebyshev_fiber_pm2(const CycField& F, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  Cyc s = F.integer(sign);
  std::vector<FiberPoint> out;
  out.push_back({s * F.integer(2), 1});
  long half = (F.order() - 1) / 2;
  for (long n = 1; n <= half; ++n) out.push_back({s * (F.q(n) + F.q(-n)), 2});
  return out;
}

// ---------------- Rng ----------------

long Rng::uniform(long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  return d(g_);
}

Cyc Rng::scalar(const CycField& F) {
  std::vector<mpq_class> c(F.degree());
  for (auto& v : c) v = uniform(-4, 4);
  return F.from_coeffs(std::move(c));
}

Cyc Rng::nonzero(const CycField& F) {
  while (true) {
    Cyc v = scalar(F);
    if (!v.is_zero()) return v;
  }
}

}  // namespace skeinrep

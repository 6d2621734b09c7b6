#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_N) for odd N >= 3.
//
// Elements are polynomials in zeta with rational coefficients, reduced
// modulo the N-th cyclotomic polynomial Phi_N, so the representation is a
// field and zeta has exact multiplicative order N.  The deformation
// parameters live here as integer powers of zeta:
//
//   Ahalf = zeta,  A = zeta^2,  q = zeta^4.
//
// Everything is immutable after construction and safe to share between
// threads.  No floating point is used anywhere.

#include <gmpxx.h>

#include <cassert>
#include <cstdint>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace skeinrep {

class CycField;
using CycFieldPtr = std::shared_ptr<const CycField>;

// One element of Q(zeta_N).  Keeps a non-owning pointer to its field; the
// field object must outlive every scalar created from it.
class Cyc {
 public:
  Cyc() : field_(nullptr) {}
  Cyc(const CycField* field, std::vector<mpq_class> coeffs)
      : field_(field), c_(std::move(coeffs)) {}

  const CycField* field() const { return field_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;

  Cyc operator-() const;
  Cyc operator+(const Cyc& o) const;
  Cyc operator-(const Cyc& o) const;
  Cyc operator*(const Cyc& o) const;
  Cyc operator/(const Cyc& o) const;
  Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
  Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
  Cyc& operator*=(const Cyc& o) { return *this = *this * o; }

  bool operator==(const Cyc& o) const;
  bool operator!=(const Cyc& o) const { return !(*this == o); }

  // Multiplicative inverse; throws std::domain_error on zero.
  Cyc inverse() const;
  // Integer power, negative exponents via inverse.
  Cyc pow(long e) const;

  std::string str() const;  // human-readable, for witnesses and debugging

 private:
  const CycField* field_;
  std::vector<mpq_class> c_;
};

class CycField {
 public:
  // N must be odd and >= 3.
  static CycFieldPtr make(long order);

  long order() const { return order_; }          // N
  size_t degree() const { return degree_; }      // phi(N)
  const std::vector<mpz_class>& cyclotomic_polynomial() const { return phi_; }

  Cyc zero() const;
  Cyc one() const;
  Cyc integer(long v) const;
  Cyc rational(const mpq_class& v) const;
  Cyc from_coeffs(std::vector<mpq_class> coeffs) const;  // reduces mod Phi_N

  // zeta^k (k arbitrary, reduced mod N).  A^{k/2} = zeta^k.
  Cyc zeta(long k) const;
  Cyc A(long k) const { return zeta(2 * k); }  // A^k
  Cyc q(long k) const { return zeta(4 * k); }  // q^k

  // Quantum integer [n] = (q^n - q^{-n}) / (q - q^{-1}).
  Cyc qint(long n) const;
  // q - q^{-1}; ubiquitous denominator.
  Cyc q_minus_qinv() const;

 private:
  CycField() = default;

  long order_ = 0;
  size_t degree_ = 0;
  std::vector<mpz_class> phi_;                   // monic, low-to-high
  std::vector<std::vector<mpq_class>> xpow_;     // x^k mod Phi_N, k in [0, maxpow]
  friend class Cyc;
};

// ---- polynomials over Cyc (dense, low-to-high; trailing zeros trimmed) ----

using CycPoly = std::vector<Cyc>;

CycPoly poly_trim(CycPoly p);
bool poly_is_zero(const CycPoly& p);
long poly_degree(const CycPoly& p);  // -1 for zero polynomial
CycPoly poly_add(const CycPoly& a, const CycPoly& b);
CycPoly poly_sub(const CycPoly& a, const CycPoly& b);
CycPoly poly_mul(const CycPoly& a, const CycPoly& b);
Cyc poly_eval(const CycPoly& p, const Cyc& x);
CycPoly poly_derivative(const CycPoly& p);
// Divide by (X - r); remainder returned through *rem.
CycPoly poly_divide_linear(const CycPoly& p, const Cyc& r, Cyc* rem);
CycPoly poly_monic(const CycPoly& p);
// Euclidean remainder and gcd (gcd returned monic).
CycPoly poly_rem(CycPoly a, const CycPoly& b);
CycPoly poly_gcd(CycPoly a, CycPoly b);
CycPoly poly_lcm(const CycPoly& a, const CycPoly& b);

// Largest m with (X - r)^m dividing p; 0 if r is not a root.
long root_multiplicity(const CycPoly& p, const Cyc& r);

// ---- Chebyshev polynomials of the first kind ----
// T_0 = 2, T_1 = X, T_{n+2} = X T_{n+1} - T_n.  Integer coefficients,
// low-to-high.
std::vector<mpz_class> chebyshev_T(long n);
Cyc eval_int_poly(const std::vector<mpz_class>& p, const Cyc& x);
CycPoly int_poly_to_cyc(const std::vector<mpz_class>& p, const CycField& F);

// The fiber of T_N over +2 or -2: the simple root sign*2 together with the
// double roots sign*(q^n + q^{-n}), 1 <= n <= (N-1)/2.
struct FiberPoint {
  Cyc root;
  int multiplicity;
};
std::vector<FiberPoint> chebyshev_fiber_pm2(const CycField& F, int sign);

// ---- seeded randomness for Schwartz-Zippel style checks ----

class Rng {
 public:
  explicit Rng(uint64_t seed) : g_(seed) {}
  long uniform(long lo, long hi);  // inclusive range
  Cyc scalar(const CycField& F);              // small random coefficients
  Cyc nonzero(const CycField& F);

 private:
  std::mt19937_64 g_;
};

}  // namespace skeinrep

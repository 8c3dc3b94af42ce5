#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace ptrace {

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
/// Computed by exact division of x^n - 1 by Phi_d over the proper divisors d; cached.
const std::vector<mpz_class>& cyclotomic_polynomial(int n);

int euler_phi(int n);

/// An exact element of Q or of a cyclotomic field Q(zeta_n).
///
/// Cyclotomic elements are stored as coefficient vectors in the power basis
/// 1, zeta, ..., zeta^(phi(n)-1), always reduced modulo Phi_n. An element whose
/// non-constant coefficients all vanish is stored as a plain rational
/// (order() == 1), so rational values compare equal regardless of which field
/// they were computed in. Mixing two different non-trivial fields throws.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : c0_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : c0_(v) {}   // NOLINT(google-explicit-constructor)
  Scalar(mpq_class q) : c0_(std::move(q)) { c0_.canonicalize(); }  // NOLINT

  static Scalar fraction(long num, long den);
  /// Primitive n-th root of unity exp(2 pi i / n) as an element of Q(zeta_n).
  static Scalar zeta(int n);
  /// Builds sum_k coeffs[k] zeta_n^k; coeffs may be longer than phi(n).
  static Scalar from_power_basis(int n, std::vector<mpq_class> coeffs);

  /// Cyclotomic order of the field the value lives in; 1 for rationals.
  int order() const { return order_; }
  bool is_rational() const { return order_ == 1; }
  bool is_zero() const { return order_ == 1 && sgn(c0_) == 0; }
  bool is_one() const { return order_ == 1 && c0_ == 1; }
  /// Coefficient of zeta^k in the reduced power basis.
  mpq_class coefficient(int k) const;
  const mpq_class& rational_value() const { return c0_; }

  Scalar inverse() const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Total bit length of all numerators and denominators; used for pivot choice.
  std::size_t bit_size() const;
  /// Re-parsable text, e.g. "-3/4" or "1/2*zeta^2 - zeta + 1".
  std::string to_string() const;

 private:
  std::vector<mpq_class> dense() const;
  static int common_order(const Scalar& a, const Scalar& b);
  void assign_reduced(int n, std::vector<mpq_class> coeffs);

  int order_ = 1;
  mpq_class c0_;
  std::vector<mpq_class> hi_;  // coefficients of zeta^1 .. zeta^(phi(n)-1)
};

}  // namespace ptrace

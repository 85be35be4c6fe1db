#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace relchar {

using Rational = mpq_class;

/// Exact element of a cyclotomic field Q(zeta_n).
///
/// Canonical form: coefficients over the power basis 1, z, ..., z^(phi(n)-1)
/// of the smallest field Q(zeta_n) containing the value, with n never
/// congruent to 2 mod 4 (rationals have conductor 1). Two values are equal
/// iff their conductors and coefficient vectors are equal.
class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), coeffs_{Rational(0)} {}
  Cyclotomic(long v) : conductor_(1), coeffs_{Rational(v)} {}  // NOLINT: implicit from integers
  Cyclotomic(const Rational& v) : conductor_(1), coeffs_{v} {}      // NOLINT

  /// zeta_n^k with zeta_n = exp(2 pi i / n).
  static Cyclotomic root_of_unity(int n, long long k);
  /// sum_j c[j] zeta_n^j for j = 0..c.size()-1 (any length).
  static Cyclotomic from_exponents(int n, const std::vector<Rational>& c);
  /// Builds from a power-basis vector of length phi(n), normalizing.
  static Cyclotomic from_power_basis(int n, std::vector<Rational> coeffs);

  int conductor() const { return conductor_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const { return conductor_ == 1 && coeffs_[0] == 0; }
  bool is_rational() const { return conductor_ == 1; }
  bool is_integer() const { return is_rational() && coeffs_[0].get_den() == 1; }
  /// Throws Defect when not rational.
  const Rational& rational() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Rational& r);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Rational& r) { return a /= r; }

  /// Galois automorphism zeta -> zeta^k, k prime to the conductor.
  Cyclotomic galois(long long k) const;
  Cyclotomic conj() const { return galois(-1); }

  /// Image in F_q under zeta_e -> root, where e is a multiple of the
  /// conductor and root has multiplicative order e mod q.
  std::uint64_t reduce_mod(std::uint64_t q, std::uint64_t e, std::uint64_t root) const;
  std::complex<double> to_complex() const;
  std::string to_string() const;

  bool operator==(const Cyclotomic& o) const {
    return conductor_ == o.conductor_ && coeffs_ == o.coeffs_;
  }
  std::strong_ordering operator<=>(const Cyclotomic& o) const;

 private:
  Cyclotomic(int n, std::vector<Rational> c) : conductor_(n), coeffs_(std::move(c)) {}
  void normalize();
  /// Coefficients of this value in Q(zeta_big); conductor must divide big.
  std::vector<Rational> embedded(int big) const;

  int conductor_;
  std::vector<Rational> coeffs_;
};

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t m);
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t m);
/// Coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long long>& cyclotomic_polynomial(int n);
int euler_phi(int n);

}  // namespace relchar

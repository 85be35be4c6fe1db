#include <doctest.h>

#include <random>

#include "relchar/cyclotomic.hpp"

using namespace relchar;

namespace {

Cyclotomic z(int n, long long k = 1) { return Cyclotomic::root_of_unity(n, k); }

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9; }

Cyclotomic random_value(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> coef(-3, 3), terms(1, 4), expo(0, n - 1);
  std::vector<Rational> c(n);
  for (int t = terms(rng); t > 0; --t) c[expo(rng)] += coef(rng);
  return Cyclotomic::from_exponents(n, c);
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<long long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<long long>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long long>{1, 0, -1, 0, 1});
  CHECK(cyclotomic_polynomial(15).size() == 9);
  CHECK(euler_phi(156) == 48);
}

TEST_CASE("canonical conductor") {
  CHECK(z(4, 2) == Cyclotomic(-1));
  CHECK(z(3) + z(3, 2) == Cyclotomic(-1));
  CHECK(z(1) == Cyclotomic(1));
  CHECK(z(2) == Cyclotomic(-1));
  auto s3 = z(3) - z(3, 2);  // sqrt(-3)
  CHECK(s3.conductor() == 3);
  CHECK(s3 * s3 == Cyclotomic(-3));
  CHECK(z(6).conductor() == 3);
  CHECK(z(6) == -z(3, 2));
  auto r2 = z(8) + z(8, 7);
  CHECK(r2.conductor() == 8);
  CHECK(r2 * r2 == Cyclotomic(2));
  auto r3 = z(12) + z(12, 11);
  CHECK(r3.conductor() == 12);
  CHECK(r3 * r3 == Cyclotomic(3));
  auto r5 = z(5) + z(5, 4) - z(5, 2) - z(5, 3);
  CHECK(r5.conductor() == 5);
  CHECK(r5 * r5 == Cyclotomic(5));
  // subfields reached through a prime dividing the conductor exactly once
  CHECK(z(15, 5) == z(3));
  CHECK(z(15, 3) == z(5));
  CHECK(z(15, 5).conductor() == 3);
  CHECK(z(21, 14) == z(3, 2));
  CHECK((z(20, 5) * z(20, 4)).conductor() == 20);
  CHECK(z(20, 5) == z(4));
  CHECK(z(9, 3) == z(3));
  CHECK((z(7) * z(7, 6)) == Cyclotomic(1));
}

TEST_CASE("conjugation and Galois action") {
  CHECK(z(5).conj() == z(5, 4));
  CHECK((z(3) - z(3, 2)).conj() == -(z(3) - z(3, 2)));
  CHECK(z(8).galois(3) == z(8, 3));
  CHECK(Cyclotomic(7).conj() == Cyclotomic(7));
}

TEST_CASE("reduction modulo a split prime") {
  // q = 13, e = 12, root 2 has order 12 mod 13
  const std::uint64_t q = 13, e = 12, root = 2;
  CHECK(z(12).reduce_mod(q, e, root) == 2);
  CHECK(z(4).reduce_mod(q, e, root) == mod_pow(2, 3, 13));
  CHECK(Cyclotomic(Rational(1, 2)).reduce_mod(q, e, root) == 7);
  auto a = z(3) + z(4, 3), b = z(12, 5) - Cyclotomic(2);
  CHECK((a * b).reduce_mod(q, e, root) == a.reduce_mod(q, e, root) * b.reduce_mod(q, e, root) % q);
}

TEST_CASE("field axioms against floating-point evaluation (property)") {
  std::mt19937 rng(20261018);
  const int conductors[] = {1, 3, 4, 5, 7, 8, 9, 12, 15, 16, 20, 24, 60};
  std::uniform_int_distribution<int> pick(0, std::size(conductors) - 1);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = random_value(rng, conductors[pick(rng)]);
    auto b = random_value(rng, conductors[pick(rng)]);
    auto c = random_value(rng, conductors[pick(rng)]);
    CHECK(close((a * b).to_complex(), a.to_complex() * b.to_complex()));
    CHECK(close((a + b).to_complex(), a.to_complex() + b.to_complex()));
    CHECK(close(a.conj().to_complex(), std::conj(a.to_complex())));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) - b == a);
    // canonical form is independent of the route
    auto detour = a * z(60, 7) * z(60, 53);
    CHECK(detour == a);
    CHECK(detour.conductor() == a.conductor());
  }
}

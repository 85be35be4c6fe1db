#include "relchar/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "relchar/error.hpp"

namespace relchar {

namespace {

struct FieldData {
  int n = 1;
  int phi = 1;
  std::vector<long long> poly;  // monic, length phi + 1
};

std::vector<int> primes_of(int n) {
  std::vector<int> out;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<long long> compute_cyclotomic_poly(int n) {
  // x^n - 1 divided by Phi_d for every proper divisor d
  std::vector<long long> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    const auto& div = cyclotomic_polynomial(d);
    const int dd = static_cast<int>(div.size()) - 1;
    const int dp = static_cast<int>(p.size()) - 1;
    std::vector<long long> q(dp - dd + 1, 0);
    for (int k = dp; k >= dd; --k) {
      long long c = p[k];
      q[k - dd] = c;
      for (int j = 0; j <= dd; ++j) p[k - dd + j] -= c * div[j];
    }
    for (int k = 0; k < dd; ++k)
      if (p[k] != 0) throw Defect("cyclotomic polynomial division not exact");
    p = std::move(q);
  }
  return p;
}

class Registry {
 public:
  const FieldData& get(int n) {
    {
      std::lock_guard lock(mu_);
      auto it = fields_.find(n);
      if (it != fields_.end()) return *it->second;
    }
    // Built outside the lock: poly computation recurses into get().
    auto fd = std::make_unique<FieldData>();
    fd->n = n;
    fd->poly = compute_cyclotomic_poly(n);
    fd->phi = static_cast<int>(fd->poly.size()) - 1;
    std::lock_guard lock(mu_);
    auto [it, inserted] = fields_.emplace(n, std::move(fd));
    return *it->second;
  }

 private:
  std::mutex mu_;
  std::map<int, std::unique_ptr<FieldData>> fields_;
};

Registry& registry() {
  static Registry r;
  return r;
}

const FieldData& field(int n) { return registry().get(n); }

/// Reduces an exponent-indexed vector (any length) modulo Phi_n.
std::vector<Rational> reduce_poly(std::vector<Rational> r, const FieldData& f) {
  const int phi = f.phi;
  for (int k = static_cast<int>(r.size()) - 1; k >= phi; --k) {
    if (r[k] == 0) continue;
    Rational c = r[k];
    for (int j = 0; j <= phi; ++j)
      if (f.poly[j] != 0) r[k - phi + j] -= c * static_cast<long>(f.poly[j]);
  }
  r.resize(phi);
  return r;
}

/// Folds exponents mod n, then reduces.
std::vector<Rational> from_exponent_vector(int n, const std::vector<Rational>& c) {
  std::vector<Rational> r(n);
  for (std::size_t j = 0; j < c.size(); ++j)
    if (c[j] != 0) r[j % n] += c[j];
  return reduce_poly(std::move(r), field(n));
}

long long inv_mod(long long a, long long m) {
  if (m == 1) return 0;
  long long t = 0, nt = 1, r = m, nr = ((a % m) + m) % m;
  while (nr) {
    long long q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  return (t % m + m) % m;
}

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(int n) {
  if (n < 1) throw InputError("cyclotomic polynomial index must be positive");
  if (n == 1) {
    static const std::vector<long long> one{-1, 1};
    return one;
  }
  return field(n).poly;
}

int euler_phi(int n) {
  int r = n;
  for (int p : primes_of(n)) r = r / p * (p - 1);
  return r;
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 r = 1, x = b % m;
  while (e) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t m) {
  return static_cast<std::uint64_t>(inv_mod(static_cast<long long>(a % m), static_cast<long long>(m)));
}

Cyclotomic Cyclotomic::root_of_unity(int n, long long k) {
  if (n < 1) throw InputError("root of unity order must be positive");
  std::vector<Rational> c(n);
  c[((k % n) + n) % n] = 1;
  return from_exponents(n, c);
}

Cyclotomic Cyclotomic::from_exponents(int n, const std::vector<Rational>& c) {
  if (n < 1) throw InputError("conductor must be positive");
  if (n == 1) {
    Rational s = 0;
    for (const auto& x : c) s += x;
    return Cyclotomic(s);
  }
  Cyclotomic v(n, from_exponent_vector(n, c));
  v.normalize();
  return v;
}

Cyclotomic Cyclotomic::from_power_basis(int n, std::vector<Rational> coeffs) {
  if (static_cast<int>(coeffs.size()) != euler_phi(n)) throw InputError("coefficient count mismatch");
  Cyclotomic v(n, std::move(coeffs));
  v.normalize();
  return v;
}

const Rational& Cyclotomic::rational() const {
  if (!is_rational()) throw Defect("value " + to_string() + " is not rational");
  return coeffs_[0];
}

void Cyclotomic::normalize() {
  bool changed = true;
  while (changed && conductor_ > 1) {
    changed = false;
    const int n = conductor_;
    for (int p : primes_of(n)) {
      const int m = n / p;
      if (m % p == 0) {
        // Q(zeta_n) has basis 1..zeta^(p-1) over Q(zeta_m), zeta^p = zeta_m.
        bool inside = true;
        for (std::size_t i = 0; i < coeffs_.size() && inside; ++i)
          if (i % p != 0 && coeffs_[i] != 0) inside = false;
        if (!inside) continue;
        std::vector<Rational> c(coeffs_.size() / p);
        for (std::size_t s = 0; s < c.size(); ++s) c[s] = coeffs_[s * p];
        conductor_ = m;
        coeffs_ = std::move(c);
        changed = true;
        break;
      }
      // p exactly divides n: project with the relative trace and check.
      const long long u = inv_mod(p, m), v = inv_mod(m, p);
      std::vector<Rational> y(m);
      for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        long long a = static_cast<long long>(i) * u % m;
        long long b = static_cast<long long>(i) * v % p;
        if (b == 0)
          y[a] += coeffs_[i] * static_cast<long>(p - 1);
        else
          y[a] -= coeffs_[i];
      }
      for (auto& x : y) x /= static_cast<long>(p - 1);
      Cyclotomic cand = m == 1 ? Cyclotomic(y[0]) : Cyclotomic(m, from_exponent_vector(m, y));
      if (cand.embedded(n) != coeffs_) continue;
      conductor_ = cand.conductor_;
      coeffs_ = std::move(cand.coeffs_);
      changed = true;
      break;
    }
  }
  for (auto& c : coeffs_) c.canonicalize();
}

std::vector<Rational> Cyclotomic::embedded(int big) const {
  if (big == conductor_) return coeffs_;
  if (big % conductor_) throw Defect("embedding into a field not containing the value");
  const int step = big / conductor_;
  std::vector<Rational> e(static_cast<std::size_t>(step) * (coeffs_.size() - 1) + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) e[i * step] = coeffs_[i];
  return from_exponent_vector(big, e);
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.conductor_ == conductor_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  } else {
    const int l = std::lcm(conductor_, o.conductor_);
    auto a = embedded(l);
    auto b = o.embedded(l);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    conductor_ = l;
    coeffs_ = std::move(a);
  }
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.is_rational()) {
    for (auto& c : coeffs_) c *= o.coeffs_[0];
    if (o.coeffs_[0] == 0) *this = Cyclotomic();
    return *this;
  }
  if (is_rational()) {
    Rational s = coeffs_[0];
    *this = o;
    for (auto& c : coeffs_) c *= s;
    if (s == 0) *this = Cyclotomic();
    return *this;
  }
  const int l = std::lcm(conductor_, o.conductor_);
  auto a = embedded(l);
  auto b = o.embedded(l);
  std::vector<Rational> prod(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) prod[i + j] += a[i] * b[j];
  }
  conductor_ = l;
  coeffs_ = reduce_poly(std::move(prod), field(l));
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Rational& r) {
  if (r == 0) throw InputError("division by zero");
  for (auto& c : coeffs_) c /= r;
  return *this;
}

Cyclotomic Cyclotomic::galois(long long k) const {
  if (is_rational()) return *this;
  const int n = conductor_;
  k = ((k % n) + n) % n;
  if (std::gcd(static_cast<long long>(n), k) != 1) throw InputError("Galois exponent not prime to conductor");
  std::vector<Rational> e(n);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) e[(static_cast<long long>(i) * k) % n] += coeffs_[i];
  return Cyclotomic(n, from_exponent_vector(n, e));
}

std::uint64_t Cyclotomic::reduce_mod(std::uint64_t q, std::uint64_t e, std::uint64_t root) const {
  if (e % conductor_) throw Defect("reduction exponent not a multiple of the conductor");
  const std::uint64_t w = mod_pow(root, e / conductor_, q);
  std::uint64_t acc = 0, pw = 1;
  for (const auto& c : coeffs_) {
    mpz_class num = c.get_num() % static_cast<unsigned long>(q);
    if (num < 0) num += q;
    mpz_class den = c.get_den() % static_cast<unsigned long>(q);
    if (den == 0) throw Defect("denominator divisible by the reduction prime");
    std::uint64_t t = num.get_ui() * mod_inv(den.get_ui(), q) % q;
    acc = (acc + t * pw) % q;
    pw = pw * w % q;
  }
  return acc;
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> s = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    double ang = 2 * std::numbers::pi * static_cast<double>(i) / conductor_;
    s += coeffs_[i].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return s;
}

std::string Cyclotomic::to_string() const {
  if (is_rational()) return coeffs_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto& c = coeffs_[i];
    if (c == 0) continue;
    Rational a = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (i == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "z" << conductor_;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

std::strong_ordering Cyclotomic::operator<=>(const Cyclotomic& o) const {
  if (auto c = conductor_ <=> o.conductor_; c != 0) return c;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    int s = cmp(coeffs_[i], o.coeffs_[i]);
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

}  // namespace relchar

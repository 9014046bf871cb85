#include "pilift/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace pilift {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
  q.canonicalize();
  return q;
}

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return std::lcm(a, b); }

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

// Exact division of integer polynomials (lowest degree first), divisor monic.
std::vector<Integer> divide_monic(std::vector<Integer> num, const std::vector<Integer>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<Integer> quot(num.size() - dn);
  for (std::size_t k = num.size(); k-- > dn;) {
    const Integer c = num[k];
    quot[k - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
  }
  return quot;
}

std::vector<Integer> cyclotomic_polynomial(int n) {
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<Integer> poly(static_cast<std::size_t>(n) + 1);
  poly[0] = -1;
  poly[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) poly = divide_monic(poly, CyclotomicField::get(d).modulus());
  }
  return poly;
}

}  // namespace

CyclotomicField::CyclotomicField(int conductor)
    : conductor_(conductor), degree_(euler_phi(conductor)), modulus_(cyclotomic_polynomial(conductor)) {}

const CyclotomicField& CyclotomicField::get(int conductor) {
  if (conductor < 1) throw std::invalid_argument("cyclotomic conductor must be positive");
  static std::recursive_mutex mu;
  static std::map<int, std::unique_ptr<CyclotomicField>> registry;
  std::lock_guard lock(mu);
  auto it = registry.find(conductor);
  if (it != registry.end()) return *it->second;
  auto field = std::unique_ptr<CyclotomicField>(new CyclotomicField(conductor));
  return *registry.emplace(conductor, std::move(field)).first->second;
}

void CyclotomicField::reduce(std::vector<Integer>& poly) const {
  const auto n = static_cast<std::size_t>(conductor_);
  const auto phi = static_cast<std::size_t>(degree_);
  if (poly.size() > n) {
    for (std::size_t k = n; k < poly.size(); ++k) poly[k % n] += poly[k];
    poly.resize(n);
  }
  for (std::size_t k = poly.size(); k-- > phi;) {
    if (poly[k] == 0) continue;
    const Integer c = poly[k];
    for (std::size_t j = 0; j < phi; ++j) {
      if (modulus_[j] != 0) poly[k - phi + j] -= c * modulus_[j];
    }
    poly[k] = 0;
  }
  poly.resize(phi);
}

Cyc::Cyc() : Cyc(1) {}

Cyc::Cyc(int conductor)
    : field_(&CyclotomicField::get(conductor)),
      num_(static_cast<std::size_t>(field_->degree())),
      den_(1) {}

Cyc::Cyc(long value, int conductor) : Cyc(conductor) { num_[0] = value; }

Cyc::Cyc(const Rational& value, int conductor) : Cyc(conductor) {
  num_[0] = value.get_num();
  den_ = value.get_den();
}

Cyc Cyc::root_of_unity(int n, long k) {
  std::vector<long> mult(static_cast<std::size_t>(n), 0);
  long e = k % n;
  if (e < 0) e += n;
  mult[static_cast<std::size_t>(e)] = 1;
  return from_root_multiplicities(n, mult);
}

Cyc Cyc::from_root_multiplicities(int n, const std::vector<long>& mult) {
  Cyc out(n);
  std::vector<Integer> poly(mult.size());
  for (std::size_t i = 0; i < mult.size(); ++i) poly[i] = mult[i];
  out.field_->reduce(poly);
  out.num_ = std::move(poly);
  return out;
}

Cyc Cyc::from_coefficients(int n, const std::vector<Rational>& coeffs) {
  Cyc out(n);
  Integer den = 1;
  for (const auto& c : coeffs) den = lcm(den, Integer(c.get_den()));
  std::vector<Integer> poly(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    poly[i] = coeffs[i].get_num() * (den / coeffs[i].get_den());
  }
  out.field_->reduce(poly);
  out.num_ = std::move(poly);
  out.den_ = den;
  out.normalize();
  return out;
}

Rational Cyc::coefficient(std::size_t i) const {
  Rational q(num_.at(i), den_);
  q.canonicalize();
  return q;
}

std::vector<Rational> Cyc::coefficients() const {
  std::vector<Rational> out;
  out.reserve(num_.size());
  for (std::size_t i = 0; i < num_.size(); ++i) out.push_back(coefficient(i));
  return out;
}

bool Cyc::is_zero() const {
  for (const auto& c : num_) {
    if (c != 0) return false;
  }
  return true;
}

std::optional<Rational> Cyc::as_rational() const {
  for (std::size_t i = 1; i < num_.size(); ++i) {
    if (num_[i] != 0) return std::nullopt;
  }
  return coefficient(0);
}

namespace {

Cyc remap_exponents(const Cyc& a, int target, long factor, long shift) {
  std::vector<Integer> poly(static_cast<std::size_t>(target));
  const auto& num = a.numerators();
  for (std::size_t i = 0; i < num.size(); ++i) {
    if (num[i] == 0) continue;
    long e = (static_cast<long>(i) * factor + shift) % target;
    if (e < 0) e += target;
    poly[static_cast<std::size_t>(e)] += num[i];
  }
  std::vector<Rational> coeffs(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) coeffs[i] = Rational(poly[i], a.denominator());
  return Cyc::from_coefficients(target, coeffs);
}

}  // namespace

Cyc Cyc::conjugate() const {
  const int n = conductor();
  if (n <= 2) return *this;
  return remap_exponents(*this, n, n - 1, 0);
}

Cyc Cyc::galois(long k) const {
  const int n = conductor();
  if (gcd_long(k, n) != 1) throw std::invalid_argument("galois exponent not coprime to conductor");
  long e = k % n;
  if (e < 0) e += n;
  return remap_exponents(*this, n, e, 0);
}

Cyc Cyc::in_conductor(int m) const {
  const int n = conductor();
  if (m == n) return *this;
  if (m % n != 0) throw std::invalid_argument("target conductor must be a multiple of the source");
  return remap_exponents(*this, m, m / n, 0);
}

Cyc Cyc::times_root(long k) const {
  return remap_exponents(*this, conductor(), 1, k);
}

void Cyc::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  if (den_ == 1) return;
  Integer g = den_;
  for (const auto& c : num_) {
    if (c != 0) g = gcd(g, c);
    if (g == 1) return;
  }
  bool zero = true;
  for (const auto& c : num_) zero = zero && c == 0;
  if (zero) {
    den_ = 1;
    return;
  }
  den_ /= g;
  for (auto& c : num_) c /= g;
}

void Cyc::fused_add(const Cyc& other, int sign) {
  if (other.conductor() != conductor()) {
    const int m = static_cast<int>(lcm_long(conductor(), other.conductor()));
    *this = in_conductor(m);
    fused_add(other.in_conductor(m), sign);
    return;
  }
  if (den_ == other.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) {
      if (sign > 0) num_[i] += other.num_[i];
      else num_[i] -= other.num_[i];
    }
  } else {
    for (std::size_t i = 0; i < num_.size(); ++i) {
      num_[i] *= other.den_;
      if (sign > 0) num_[i] += other.num_[i] * den_;
      else num_[i] -= other.num_[i] * den_;
    }
    den_ *= other.den_;
  }
  normalize();
}

Cyc& Cyc::operator+=(const Cyc& other) {
  fused_add(other, 1);
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& other) {
  fused_add(other, -1);
  return *this;
}

Cyc operator*(const Cyc& a, const Cyc& b) {
  if (a.conductor() != b.conductor()) {
    const int m = static_cast<int>(lcm_long(a.conductor(), b.conductor()));
    return a.in_conductor(m) * b.in_conductor(m);
  }
  auto constant = [](const Cyc& c) {
    for (std::size_t i = 1; i < c.num_.size(); ++i) {
      if (c.num_[i] != 0) return false;
    }
    return true;
  };
  if (constant(b)) return a * Rational(b.num_[0], b.den_);
  if (constant(a)) return b * Rational(a.num_[0], a.den_);
  Cyc out(a.conductor());
  const std::size_t phi = a.num_.size();
  std::vector<Integer> poly(2 * phi - 1);
  for (std::size_t i = 0; i < phi; ++i) {
    if (a.num_[i] == 0) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (b.num_[j] != 0) mpz_addmul(poly[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
  }
  out.field_->reduce(poly);
  out.num_ = std::move(poly);
  out.den_ = a.den_ * b.den_;
  out.normalize();
  return out;
}

Cyc& Cyc::operator*=(const Cyc& other) {
  *this = *this * other;
  return *this;
}

Cyc& Cyc::operator*=(const Rational& scalar) {
  for (auto& c : num_) c *= scalar.get_num();
  den_ *= scalar.get_den();
  normalize();
  return *this;
}

Cyc& Cyc::operator/=(const Rational& scalar) {
  if (scalar == 0) throw std::domain_error("division of cyclotomic by zero");
  for (auto& c : num_) c *= scalar.get_den();
  den_ *= scalar.get_num();
  normalize();
  return *this;
}

Cyc Cyc::operator-() const {
  Cyc out = *this;
  for (auto& c : out.num_) c = -c;
  return out;
}

bool operator==(const Cyc& a, const Cyc& b) {
  if (a.conductor() != b.conductor()) {
    const int m = static_cast<int>(lcm_long(a.conductor(), b.conductor()));
    return a.in_conductor(m) == b.in_conductor(m);
  }
  return a.den_ == b.den_ && a.num_ == b.num_;
}

std::strong_ordering operator<=>(const Cyc& a, const Cyc& b) {
  if (a.conductor() != b.conductor()) {
    const int m = static_cast<int>(lcm_long(a.conductor(), b.conductor()));
    return a.in_conductor(m) <=> b.in_conductor(m);
  }
  for (std::size_t i = 0; i < a.num_.size(); ++i) {
    const int c = cmp(a.num_[i] * b.den_, b.num_[i] * a.den_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::size_t Cyc::hash() const {
  std::size_t h = static_cast<std::size_t>(conductor()) * 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](const Integer& z) {
    const std::size_t limb = mpz_size(z.get_mpz_t()) ? mpz_getlimbn(z.get_mpz_t(), 0) : 0;
    h ^= (limb + static_cast<std::size_t>(mpz_sgn(z.get_mpz_t()) + 1)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  mix(den_);
  for (const auto& c : num_) mix(c);
  return h;
}

std::string Cyc::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += pilift::to_string(coefficient(i));
    if (i > 0) out += "*z(" + std::to_string(conductor()) + ")^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace pilift

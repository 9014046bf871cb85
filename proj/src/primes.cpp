#include "pilift/primes.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pilift {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

PrimeSet::PrimeSet(std::vector<std::uint64_t> primes) : primes_(std::move(primes)) {
  for (auto p : primes_) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not a prime");
  }
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
}

PrimeSet PrimeSet::parse(const std::string& text) {
  std::vector<std::uint64_t> primes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw std::invalid_argument("empty entry in prime list '" + text + "'");
    item = item.substr(first, last - first + 1);
    if (item.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("malformed prime '" + item + "'");
    }
    primes.push_back(std::stoull(item));
  }
  if (primes.empty()) throw std::invalid_argument("prime set must be non-empty");
  return PrimeSet(std::move(primes));
}

bool PrimeSet::contains(std::uint64_t p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

bool PrimeSet::is_pi_number(std::uint64_t n) const { return pi_part(n) == n; }

bool PrimeSet::is_pi_prime_number(std::uint64_t n) const { return pi_part(n) == 1; }

std::uint64_t PrimeSet::pi_part(std::uint64_t n) const {
  std::uint64_t part = 1;
  for (auto p : primes_) {
    while (n % p == 0) {
      n /= p;
      part *= p;
    }
  }
  return part;
}

std::string PrimeSet::to_string() const {
  std::string out;
  for (auto p : primes_) {
    if (!out.empty()) out += ",";
    out += std::to_string(p);
  }
  return out;
}

}  // namespace pilift

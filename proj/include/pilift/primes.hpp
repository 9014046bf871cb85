#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pilift {

/// Prime factors of n in increasing order, without multiplicity.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
bool is_prime(std::uint64_t n);

/// A finite set of primes (the "pi" of pi-separability).
class PrimeSet {
 public:
  PrimeSet() = default;
  explicit PrimeSet(std::vector<std::uint64_t> primes);
  /// Parses "2,3,5"; throws std::invalid_argument on non-primes or junk.
  static PrimeSet parse(const std::string& text);

  bool contains(std::uint64_t p) const;
  bool empty() const { return primes_.empty(); }
  const std::vector<std::uint64_t>& primes() const { return primes_; }

  /// True iff every prime factor of n lies in the set (1 is a pi-number).
  bool is_pi_number(std::uint64_t n) const;
  /// True iff no prime factor of n lies in the set.
  bool is_pi_prime_number(std::uint64_t n) const;
  std::uint64_t pi_part(std::uint64_t n) const;
  std::uint64_t pi_prime_part(std::uint64_t n) const { return n / pi_part(n); }

  std::string to_string() const;
  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;
  friend auto operator<=>(const PrimeSet&, const PrimeSet&) = default;

 private:
  std::vector<std::uint64_t> primes_;
};

}  // namespace pilift

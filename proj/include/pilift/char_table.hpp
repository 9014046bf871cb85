#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "pilift/cyclotomic.hpp"
#include "pilift/group.hpp"

namespace pilift {

class CharTableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reduction Q(zeta_n) -> F_P for a fixed prime P = 1 (mod n) near 2^30 and a
/// fixed primitive n-th root z. Used for fingerprints and for guessing integer
/// coordinates that are then confirmed exactly.
class CycReducer {
 public:
  static const CycReducer& get(int conductor);

  int conductor() const { return conductor_; }
  std::uint64_t prime() const { return prime_; }
  /// Image of an element whose conductor divides conductor(); its
  /// denominator must be prime to P.
  std::uint64_t reduce(const Cyc& c) const;
  /// Maps a residue to the integer in (-P/2, P/2).
  long to_signed(std::uint64_t r) const;

 private:
  explicit CycReducer(int conductor);
  int conductor_;
  std::uint64_t prime_;
  std::vector<std::uint64_t> powers_;
};

/// Irreducible characters of a finite group, computed by the Dixon-Schneider
/// method. Row i, column c holds chi_i on class c. All values live in
/// Q(zeta_conductor), where the conductor is a multiple of the exponent.
class CharTable {
 public:
  /// conductor 0 means the exponent of the group.
  static CharTable compute(std::shared_ptr<const Group> group, int conductor = 0);
  static CharTable compute(std::shared_ptr<const Group> group, ConjClassSet classes, int conductor);

  const Group& group() const { return *group_; }
  const std::shared_ptr<const Group>& group_ptr() const { return group_; }
  const ConjClassSet& classes() const { return classes_; }
  std::size_t size() const { return rows_.size(); }
  int conductor() const { return conductor_; }
  std::uint64_t dixon_prime() const { return dixon_prime_; }

  const std::vector<Cyc>& row(std::size_t i) const { return rows_[i]; }
  const Cyc& value(std::size_t row, std::size_t cls) const { return rows_[row][cls]; }
  std::uint64_t degree(std::size_t row) const { return degrees_[row]; }
  /// Rows are sorted by (degree, values), so the trivial character need not be row 0.
  std::size_t trivial_row() const { return trivial_row_; }
  std::size_t class_size(std::size_t c) const { return classes_[c].size(); }
  std::size_t inverse_class(std::size_t c) const { return inverse_class_[c]; }
  std::size_t class_element_order(std::size_t c) const { return group_->element_order(classes_[c].representative); }
  /// Class of g^k for g in class c.
  std::size_t power_class(std::size_t c, long k) const;
  std::vector<std::size_t> power_map(long k) const;

  /// Order of the linear character det(chi_row).
  std::uint64_t determinant_order(std::size_t row) const { return det_orders_[row]; }
  /// Eigenvalue multiplicities of a representation affording chi_row at the
  /// class representative g of order m: entry k counts eigenvalue zeta_m^k.
  std::vector<long> eigenvalue_multiplicities(std::size_t row, std::size_t cls) const;
  /// Classes on which chi_row takes the value chi_row(1).
  std::vector<std::size_t> kernel_classes(std::size_t row) const;

  std::optional<std::size_t> find_row(std::span<const Cyc> values) const;
  /// (1/|G|) sum_c |c| f(c) conj(g(c)).
  Cyc inner_product(std::span<const Cyc> f, std::span<const Cyc> g) const;
  /// <f, chi_row>, with conj(chi(c)) read off as chi(c^-1).
  Cyc inner_product_with_row(std::span<const Cyc> f, std::size_t row) const;
  /// Exact coordinates of a class function in the basis of irreducibles.
  std::vector<Cyc> coordinates(std::span<const Cyc> f) const;
  /// Integer coordinates if f is an integral combination of irreducibles.
  std::optional<std::vector<long>> integral_coordinates(std::span<const Cyc> f) const;
  /// Multiplicities of the irreducibles in a genuine character, given by its
  /// residues. They are the integers [f, chi_i] in [0, f(1)], so their images
  /// mod the reducer prime determine them. The caller vouches that f is a
  /// character; throws CharTableError if the result is inconsistent.
  std::vector<long> character_multiplicities(std::span<const std::uint64_t> f) const;
  /// Values mod the reducer prime, for hashing and quick comparisons.
  std::vector<std::uint64_t> residues(std::span<const Cyc> f) const;
  const std::vector<std::uint64_t>& row_residues(std::size_t row) const { return residues_[row]; }

  /// Full exact row and column orthogonality; returns a description of the
  /// first failure.
  std::optional<std::string> verify_orthogonality() const;

  std::string render_text() const;
  nlohmann::json to_json() const;

 private:
  CharTable() = default;
  void finish_rows(std::vector<std::vector<Cyc>> rows, std::vector<std::uint64_t> degrees);
  std::uint64_t compute_determinant_order(std::size_t row) const;

  std::shared_ptr<const Group> group_;
  ConjClassSet classes_;
  int conductor_ = 1;
  std::uint64_t dixon_prime_ = 0;
  std::vector<std::size_t> inverse_class_;
  std::vector<std::vector<Cyc>> rows_;
  std::vector<std::uint64_t> degrees_;
  std::size_t trivial_row_ = 0;
  std::vector<std::uint64_t> det_orders_;
  std::vector<std::vector<std::uint64_t>> residues_;
};

nlohmann::json cyc_to_json(const Cyc& c);
Cyc cyc_from_json(const nlohmann::json& j);

}  // namespace pilift

#pragma once

// The ring R(y_1, ..., y_s): the free associative ring on s variables modulo
// every monomial in which some variable occurs at least twice. Additively it
// is free abelian on the monomials with pairwise-distinct indices.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mgk/integer.hpp"

namespace mgk {

/// Largest variable count a ring may have (monomial supports are 64-bit masks).
inline constexpr int kMaxRingRank = 64;

/// An ordered product of pairwise-distinct variables; the empty monomial is 1.
/// Variables are 1-based.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::initializer_list<int> vars);
  explicit Monomial(std::span<const int> vars);

  /// Returns the concatenation, or nullopt when the supports overlap (the
  /// product is zero in R).
  static std::optional<Monomial> concat(const Monomial& lhs, const Monomial& rhs);

  int degree() const { return static_cast<int>(vars_.size()); }
  bool empty() const { return vars_.empty(); }
  std::uint64_t support() const { return support_; }
  bool contains(int var) const { return (support_ >> (var - 1)) & 1u; }
  int max_var() const;
  std::span<const std::uint8_t> vars() const { return vars_; }

  // Graded lexicographic: by degree, then by the index sequence.
  std::strong_ordering operator<=>(const Monomial& other) const;
  bool operator==(const Monomial& other) const { return vars_ == other.vars_; }

 private:
  std::vector<std::uint8_t> vars_;
  std::uint64_t support_ = 0;
};

/// Default variable naming y1, y2, ...
std::string default_variable_name(int var);

/// Finitely supported integer combination of monomials in R(y_1..y_rank).
/// Zero coefficients are never stored.
class RingElement {
 public:
  using Terms = std::map<Monomial, Integer>;

  explicit RingElement(int rank = 0);

  static RingElement zero(int rank) { return RingElement(rank); }
  static RingElement one(int rank) { return constant(rank, 1); }
  static RingElement constant(int rank, const Integer& value);
  static RingElement variable(int rank, int var);
  static RingElement monomial(int rank, const Monomial& mono, const Integer& coeff = 1);

  int rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;

  Integer coefficient(const Monomial& mono) const;
  Integer constant_term() const { return coefficient(Monomial{}); }

  /// Smallest degree of a nonzero term of positive degree, if any.
  std::optional<int> min_positive_degree() const;
  int max_degree() const;

  /// Adds coeff * mono in place.
  void add_term(const Monomial& mono, const Integer& coeff);

  RingElement operator-() const;
  RingElement& operator+=(const RingElement& other);
  RingElement& operator-=(const RingElement& other);
  RingElement& operator*=(const RingElement& other);
  friend RingElement operator+(RingElement lhs, const RingElement& rhs) { return lhs += rhs; }
  friend RingElement operator-(RingElement lhs, const RingElement& rhs) { return lhs -= rhs; }
  friend RingElement operator*(const RingElement& lhs, const RingElement& rhs);
  friend RingElement operator*(const Integer& scalar, const RingElement& rhs);
  bool operator==(const RingElement& other) const = default;

  /// Product with all terms of degree > max_degree discarded.
  static RingElement multiply_truncated(const RingElement& lhs, const RingElement& rhs,
                                        int max_degree);

  /// Right multiplication by (1 + sign * y_var), sign = +1 or -1; the Magnus
  /// image of a single letter.
  void multiply_by_letter(int var, int sign, int max_degree = kMaxRingRank);

  /// Drops every term of degree > max_degree.
  RingElement truncated(int max_degree) const;

  /// Sets the variables above new_rank to zero and shrinks the universe.
  RingElement projected(int new_rank) const;

  /// Renames variables: var v becomes mapping[v - 1] (1-based) in a ring of
  /// rank new_rank; a mapping entry of 0 sends the variable to zero.
  RingElement remapped(int new_rank, std::span<const int> mapping) const;

  /// Signed monomial sum, e.g. "1 + y1*y2 - y2*y1"; "0" for zero.
  std::string to_string() const;
  std::string to_string(std::span<const std::string> names) const;

 private:
  void check_same_rank(const RingElement& other) const;

  int rank_;
  Terms terms_;
};

/// Parses a signed monomial sum. Variables are named by `names` (1-based in
/// order); when `names` is empty the default y1, y2, ... naming is used.
RingElement parse_ring_element(const std::string& text, int rank,
                               std::span<const std::string> names = {});

}  // namespace mgk

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace singindex {

/// Exponent vector x^a. Compared lexicographically by default.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<std::uint32_t> exps) : exps_(exps) {}

  static Monomial variable(std::size_t nvars, std::size_t i, std::uint32_t power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  std::span<const std::uint32_t> exponents() const noexcept { return exps_; }

  std::uint32_t degree() const noexcept;
  bool is_one() const noexcept;
  bool divides(const Monomial& other) const;
  /// Index of the single variable when this is a pure power x_i^k (k >= 1).
  std::ptrdiff_t pure_power_variable() const noexcept;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires divides(other) in the opposite direction.
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<std::uint32_t> exps_;
};

enum class OrderKind { GlobalDegRevLex, LocalNegDegRevLex };

/// Degree reverse lexicographic order (global) or its negative-degree variant
/// (local: 1 > x_i). The permutation lists variables from most to least
/// significant for the reverse-lex tie break.
class MonomialOrder {
 public:
  explicit MonomialOrder(OrderKind kind = OrderKind::GlobalDegRevLex, std::vector<std::size_t> permutation = {});

  static MonomialOrder global() { return MonomialOrder(OrderKind::GlobalDegRevLex); }
  static MonomialOrder local() { return MonomialOrder(OrderKind::LocalNegDegRevLex); }

  OrderKind kind() const noexcept { return kind_; }
  bool is_local() const noexcept { return kind_ == OrderKind::LocalNegDegRevLex; }
  const std::vector<std::size_t>& permutation() const noexcept { return perm_; }

  /// Positive when a > b, i.e. a is the leading one.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

 private:
  OrderKind kind_;
  std::vector<std::size_t> perm_;
};

}  // namespace singindex

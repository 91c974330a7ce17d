#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace udt {

/// Polynomial over N0 with non-negative coefficients, lowest degree first.
/// Canonical form has no trailing zeros; the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<std::uint64_t> coefficients);
  static Polynomial constant(std::uint64_t c) { return Polynomial({c}); }

  const std::vector<std::uint64_t>& coefficients() const noexcept { return coeffs_; }
  std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  // Saturates at UINT64_MAX.
  std::uint64_t operator()(std::uint64_t n) const noexcept;
  Polynomial plus_constant(std::uint64_t c) const;

  // "3,0,1" means 3 + x^2; "" or "0" is the zero polynomial.
  static Polynomial parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  friend auto operator<=>(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<std::uint64_t> coeffs_;
};

}  // namespace udt

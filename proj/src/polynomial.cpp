#include "udt/polynomial.hpp"

#include <charconv>

#include "udt/errors.hpp"

namespace udt {

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > UINT64_MAX - b ? UINT64_MAX : a + b; }

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > UINT64_MAX / b ? UINT64_MAX : a * b;
}

}  // namespace

Polynomial::Polynomial(std::vector<std::uint64_t> coefficients) : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::uint64_t Polynomial::operator()(std::uint64_t n) const noexcept {
  std::uint64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = sat_add(sat_mul(acc, n), *it);
  return acc;
}

Polynomial Polynomial::plus_constant(std::uint64_t c) const {
  auto cs = coeffs_;
  if (cs.empty()) cs.push_back(0);
  cs[0] = sat_add(cs[0], c);
  return Polynomial(std::move(cs));
}

Polynomial Polynomial::parse(std::string_view text) {
  std::vector<std::uint64_t> cs;
  if (text.empty()) return {};
  for (;;) {
    auto comma = text.find(',');
    auto part = text.substr(0, comma);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty())
      throw Error(ErrorKind::InvalidArgument, "malformed polynomial coefficient '" + std::string(part) + "'");
    cs.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Polynomial(std::move(cs));
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(coeffs_[k]);
  }
  return out;
}

}  // namespace udt

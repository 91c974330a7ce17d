#pragma once

#include <cstdint>

#include "udt/field.hpp"

namespace udt {

// Resource limits shared by every exhaustive procedure. All of them are
// desk-scale: the procedures are exponential in these quantities.
struct Caps {
  std::uint32_t qubits = 20;
  std::uint32_t witness_qubits = 4;
  std::uint32_t witness_bits = 16;        // classical witness length (MA, NP)
  std::uint64_t enumeration_index = 1'000'000;
  std::uint32_t check_word_length = 12;   // harder_set re-verification
  std::uint32_t word_length = 16;         // differences / karp_check bounds
  std::uint32_t psd_dim = 16;
  std::uint64_t fuel = 1'000'000;
  std::uint64_t branch_leaves = 1u << 22;
};

// Completeness / soundness cut-offs, compared non-strictly (>= c, <= s).
struct Thresholds {
  Rational c{2, 3};
  Rational s{1, 3};

  void validate() const;
};

}  // namespace udt

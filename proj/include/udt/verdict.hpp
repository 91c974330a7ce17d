#pragma once

#include <string_view>

namespace udt {

// Three-valued outcome of a total decider: outputs 1 / 0 / 10.
enum class Verdict { Yes, No, OutsidePromise };

// CLI tokens: "yes", "no", "outside-promise".
std::string_view verdict_token(Verdict v) noexcept;
// Machine output convention: "1", "0", "10".
std::string_view verdict_output(Verdict v) noexcept;

// What a runtime-bounded machine does when it overruns its bound.
enum class FuelPolicy {
  Strict,   // report an error: the machine violates its declared bound
  Clocked,  // treat as rejection / trivial circuit, as a clocked simulation would
};

}  // namespace udt

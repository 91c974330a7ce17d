#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

namespace udt {

// A value together with the accounting units spent computing it.
struct Costed {
  std::uint64_t value = 0;
  std::uint64_t cost = 0;

  friend bool operator==(const Costed&, const Costed&) = default;
};

inline constexpr std::uint64_t kUnbounded = UINT64_MAX;

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) noexcept;

/// Function N0 -> N0 with a cost for every evaluation. The underlying
/// function receives a budget and must return nullopt exactly when the cost
/// of the evaluation exceeds it; it may stop early once that is certain.
/// Results are memoized behind a mutex; copies share the cache.
class CostedFunction {
 public:
  using Fn = std::function<std::optional<Costed>(std::uint64_t n, std::uint64_t budget)>;

  CostedFunction(std::string name, Fn fn);
  // For functions without an early-abort path.
  static CostedFunction exact(std::string name, std::function<Costed(std::uint64_t)> fn);

  const std::string& name() const noexcept { return name_; }

  std::optional<Costed> eval(std::uint64_t n, std::uint64_t budget) const;
  Costed operator()(std::uint64_t n) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::uint64_t, Costed> done;
    std::map<std::uint64_t, std::uint64_t> exceeded;  // largest budget known to be too small
  };

  std::string name_;
  std::shared_ptr<const Fn> fn_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace udt

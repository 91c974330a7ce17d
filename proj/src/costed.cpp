#include "udt/costed.hpp"

#include "udt/errors.hpp"

namespace udt {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) noexcept { return a > UINT64_MAX - b ? UINT64_MAX : a + b; }

CostedFunction::CostedFunction(std::string name, Fn fn)
    : name_(std::move(name)), fn_(std::make_shared<const Fn>(std::move(fn))), cache_(std::make_shared<Cache>()) {}

CostedFunction CostedFunction::exact(std::string name, std::function<Costed(std::uint64_t)> fn) {
  return CostedFunction(std::move(name), [fn = std::move(fn)](std::uint64_t n, std::uint64_t budget) {
    Costed c = fn(n);
    return c.cost > budget ? std::nullopt : std::optional<Costed>(c);
  });
}

std::optional<Costed> CostedFunction::eval(std::uint64_t n, std::uint64_t budget) const {
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->done.find(n); it != cache_->done.end())
      return it->second.cost > budget ? std::nullopt : std::optional<Costed>(it->second);
    if (auto it = cache_->exceeded.find(n); it != cache_->exceeded.end() && budget <= it->second) return std::nullopt;
  }
  // Evaluated outside the lock: the function may recurse into other
  // CostedFunctions. Concurrent duplicates compute the same result.
  std::optional<Costed> res = (*fn_)(n, budget);
  std::lock_guard lock(cache_->mutex);
  if (res) {
    if (res->cost > budget) throw Error(ErrorKind::InvalidArgument, name_ + " exceeded its budget");
    cache_->done.emplace(n, *res);
  } else {
    auto& known = cache_->exceeded[n];
    if (budget > known) known = budget;
  }
  return res;
}

Costed CostedFunction::operator()(std::uint64_t n) const {
  auto res = eval(n, kUnbounded);
  if (!res) throw Error(ErrorKind::CapExceeded, name_ + "(" + std::to_string(n) + ") has unbounded cost");
  return *res;
}

}  // namespace udt

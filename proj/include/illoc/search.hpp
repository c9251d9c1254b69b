#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "illoc/error.hpp"

namespace illoc {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct SearchOptions {
  std::uint64_t budget = kDefaultBudget;
  unsigned jobs = 1;
};

// Budget from ILLOC_BUDGET if set and numeric, otherwise the default.
inline std::uint64_t budgetFromEnvironment(std::uint64_t fallback = kDefaultBudget) {
  if (const char* env = std::getenv("ILLOC_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
    }
  }
  return fallback;
}

// Product of radices, throwing BudgetExceeded once `evaluationsPerPoint`
// times the size passes the budget.
inline std::uint64_t checkedSpaceSize(const std::vector<std::uint64_t>& radices,
                                      std::uint64_t evaluationsPerPoint, std::uint64_t budget) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  auto times = [&](std::uint64_t x, std::uint64_t y) { return (y && x > kMax / y) ? kMax : x * y; };
  std::uint64_t total = 1;
  for (auto r : radices) {
    if (r == 0) return 0;
    total = times(total, r);
  }
  std::uint64_t required = times(total, std::max<std::uint64_t>(evaluationsPerPoint, 1));
  if (required > budget) throw BudgetExceeded(required, budget);
  return total;
}

// Decodes a point index into per-slot digits, first slot most significant.
inline std::vector<std::uint64_t> decodeIndex(std::uint64_t index, const std::vector<std::uint64_t>& radices) {
  std::vector<std::uint64_t> digits(radices.size());
  for (std::size_t i = radices.size(); i-- > 0;) {
    digits[i] = index % radices[i];
    index /= radices[i];
  }
  return digits;
}

/// Smallest index in [0, total) for which `hit(index)` is true.
///
/// Workers claim fixed-size blocks in increasing order and stop once every
/// unclaimed block lies above the best hit, so the answer does not depend on
/// the number of workers.
template <typename Predicate>
std::optional<std::uint64_t> findFirst(std::uint64_t total, unsigned jobs, Predicate hit) {
  constexpr std::uint64_t kBlock = 256;
  const std::uint64_t none = total;
  if (jobs <= 1 || total <= kBlock) {
    for (std::uint64_t i = 0; i < total; ++i) {
      if (hit(i)) return i;
    }
    return std::nullopt;
  }

  std::atomic<std::uint64_t> nextBlock{0};
  std::atomic<std::uint64_t> best{none};
  std::exception_ptr failure;
  std::mutex failureMutex;

  auto worker = [&] {
    try {
      for (;;) {
        std::uint64_t start = nextBlock.fetch_add(1) * kBlock;
        if (start >= total || start >= best.load()) return;
        std::uint64_t end = std::min(total, start + kBlock);
        for (std::uint64_t i = start; i < end && i < best.load(); ++i) {
          if (hit(i)) {
            std::uint64_t current = best.load();
            while (i < current && !best.compare_exchange_weak(current, i)) {
            }
            break;
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(failureMutex);
      if (!failure) failure = std::current_exception();
      best.store(0);
    }
  };

  std::vector<std::jthread> threads;
  unsigned n = std::min<std::uint64_t>(jobs, (total + kBlock - 1) / kBlock);
  for (unsigned t = 0; t < n; ++t) threads.emplace_back(worker);
  threads.clear();
  if (failure) std::rethrow_exception(failure);
  if (best.load() == none) return std::nullopt;
  return best.load();
}

}  // namespace illoc

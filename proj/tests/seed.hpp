#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

// Seed for randomized tests: ILLOC_TEST_SEED when set, otherwise `fallback`.
inline std::uint32_t testSeed(std::uint32_t fallback) {
  if (const char* env = std::getenv("ILLOC_TEST_SEED")) {
    try {
      return static_cast<std::uint32_t>(std::stoul(env)) ^ fallback;
    } catch (const std::exception&) {
    }
  }
  return fallback;
}

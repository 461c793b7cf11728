#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace soficshift::testing {

inline constexpr std::uint64_t kDefaultSeed = 1729;

std::uint64_t test_seed();
void set_test_seed(std::uint64_t seed);

/// Generator for one test: the global seed mixed with a per-test salt, so
/// adding a test does not shift the streams of the others.
std::mt19937_64 seeded_rng(std::string_view salt);

/// Strips --seed=N / --seed N from argv. Returns false on a malformed value.
bool consume_seed_flag(int& argc, char** argv);

}  // namespace soficshift::testing

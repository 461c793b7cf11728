#include "seed.hpp"

#include <charconv>
#include <cstring>
#include <string>

namespace soficshift::testing {

namespace {
std::uint64_t g_seed = kDefaultSeed;

bool parse(std::string_view s, std::uint64_t& out) {
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}
}  // namespace

std::uint64_t test_seed() { return g_seed; }
void set_test_seed(std::uint64_t seed) { g_seed = seed; }

std::mt19937_64 seeded_rng(std::string_view salt) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : salt) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::seed_seq seq{static_cast<std::uint32_t>(g_seed), static_cast<std::uint32_t>(g_seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
  return std::mt19937_64(seq);
}

bool consume_seed_flag(int& argc, char** argv) {
  int out = 1;
  for (int i = 1; i < argc; ++i) {
    const std::string_view arg = argv[i];
    if (arg.starts_with("--seed=")) {
      if (!parse(arg.substr(7), g_seed)) return false;
    } else if (arg == "--seed") {
      if (i + 1 >= argc || !parse(argv[i + 1], g_seed)) return false;
      ++i;
    } else {
      argv[out++] = argv[i];
    }
  }
  argc = out;
  argv[argc] = nullptr;
  return true;
}

}  // namespace soficshift::testing

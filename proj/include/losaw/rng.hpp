#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace losaw {

using Rng = std::mt19937_64;

// Seeds for independent named substreams ("data", "bootstrap", "mtry", ...).
std::uint64_t derive_seed(std::uint64_t seed, std::string_view stream, std::uint64_t index = 0);

inline Rng make_rng(std::uint64_t seed, std::string_view stream, std::uint64_t index = 0) {
  return Rng(derive_seed(seed, stream, index));
}

}  // namespace losaw

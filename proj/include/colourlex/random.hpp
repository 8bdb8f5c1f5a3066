#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <utility>

namespace colourlex {

using Rng = std::mt19937_64;

// std::uniform_int_distribution and std::shuffle are implementation-defined,
// so seeded outputs would differ between standard libraries. These helpers
// only depend on the (fully specified) mt19937_64 stream.

/// Uniform integer in [0, n). n must be > 0.
std::uint64_t uniform_index(Rng& rng, std::uint64_t n);

/// Uniform real in [0, 1).
double uniform_unit(Rng& rng);

template <typename T>
void shuffle(std::span<T> items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_index(rng, i));
    std::swap(items[i - 1], items[j]);
  }
}

/// 64-bit FNV-1a.
std::uint64_t stable_hash(std::string_view bytes);

/// Derives an independent seed for one keyed unit of work (a sense, a category).
std::uint64_t derive_seed(std::uint64_t seed, std::string_view key);

}  // namespace colourlex

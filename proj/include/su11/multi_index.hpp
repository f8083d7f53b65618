#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace su11 {

/// Exponents (k1, k2, k3, k4) of the four auxiliary variables λ1..λ4.
/// The differentiation orders (m1, n1, m2, n2) of the generating-function
/// derivative map to (k1, k2, k3, k4) in that order.
struct MultiIndex {
  std::array<std::uint8_t, 4> k{0, 0, 0, 0};

  constexpr MultiIndex() = default;
  constexpr MultiIndex(unsigned k1, unsigned k2, unsigned k3, unsigned k4)
      : k{static_cast<std::uint8_t>(k1), static_cast<std::uint8_t>(k2),
          static_cast<std::uint8_t>(k3), static_cast<std::uint8_t>(k4)} {}

  constexpr unsigned total() const { return k[0] + k[1] + k[2] + k[3]; }

  friend constexpr bool operator==(const MultiIndex& a, const MultiIndex& b) {
    return a.k == b.k;
  }
  friend constexpr bool operator!=(const MultiIndex& a, const MultiIndex& b) {
    return !(a == b);
  }

  /// Packed form, usable as a map key and for deterministic ordering.
  constexpr std::uint32_t packed() const {
    return (std::uint32_t(k[0]) << 24) | (std::uint32_t(k[1]) << 16) |
           (std::uint32_t(k[2]) << 8) | std::uint32_t(k[3]);
  }
  friend constexpr bool operator<(const MultiIndex& a, const MultiIndex& b) {
    return a.packed() < b.packed();
  }
};

struct MultiIndexHash {
  std::size_t operator()(const MultiIndex& i) const {
    return std::hash<std::uint32_t>{}(i.packed());
  }
};

}  // namespace su11

#pragma once

#include <cstddef>

#include "su11/errors.hpp"

namespace su11::fock {

/// Photon numbers run 0..dim-1 in each mode. State vectors are allowed up
/// to kVectorProductCap amplitudes; explicit density matrices are capped
/// much lower (kDensityProductCap) to stay desk-scale, since they square
/// the storage.
struct FockBasisSpec {
  std::size_t dim_a = 2;
  std::size_t dim_b = 2;

  static constexpr std::size_t kVectorProductCap = 65536;
  static constexpr std::size_t kDensityProductCap = 4096;

  FockBasisSpec(std::size_t da, std::size_t db) : dim_a(da), dim_b(db) {
    if (dim_a < 2 || dim_b < 2)
      throw InvalidArgument("FockBasisSpec: dimensions must be >= 2");
    if (dim_a * dim_b > kVectorProductCap)
      throw InvalidArgument("FockBasisSpec: product dimension above vector cap");
  }

  std::size_t size() const { return dim_a * dim_b; }
  std::size_t index(std::size_t na, std::size_t nb) const {
    return na * dim_b + nb;
  }
  bool density_scale() const { return size() <= kDensityProductCap; }

  friend bool operator==(const FockBasisSpec& x, const FockBasisSpec& y) {
    return x.dim_a == y.dim_a && x.dim_b == y.dim_b;
  }
};

}  // namespace su11::fock

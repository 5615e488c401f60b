#pragma once

#include <cstdint>
#include <optional>

#include "lcegeom/field.hpp"
#include "lcegeom/group_actions.hpp"
#include "lcegeom/matrix.hpp"

namespace lcegeom {

// Monomial convention used by every instance: Q = D * P.
inline constexpr const char* kMonomialConvention = "Q=D*P";

struct LceSecret {
  DiagonalElement D;
  Permutation P;
};

/// Linear code equivalence instance: G2 = RREF(G1 * D * P) when the secret is known.
struct LceInstance {
  PrimeField field;
  int n = 0;
  int k = 0;
  FqMatrix G1;
  FqMatrix G2;
  std::optional<LceSecret> secret;
  std::uint64_t seed = 0;

  // ValidationFailed unless both matrices are k x n, full rank and in RREF,
  // and the secret (when present) maps G1 onto G2.
  void validate() const;
};

}  // namespace lcegeom

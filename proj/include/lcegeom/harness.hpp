#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lcegeom/instance.hpp"
#include "lcegeom/model.hpp"

namespace lcegeom {

// Random G, D, P from one seeded stream; G1 = RREF(G), G2 = RREF(G D P).
LceInstance gen_instance(std::uint64_t q, int n, int k, std::uint64_t seed);

// Two independent random codes, resampled until the brute-force oracle finds
// no witness. No secret.
LceInstance gen_unrelated_instance(std::uint64_t q, int n, int k, std::uint64_t seed);

struct Witness {
  Permutation P;
  DiagonalElement D;  // RREF(G1 * D * P) == G2
};

struct SolveReport {
  std::vector<Witness> witnesses;  // ordered by permutation (lexicographic images)
  std::uint64_t permutations_checked = 0;
  double elapsed_ms = 0;

  bool contains(const Permutation& p) const;
};

struct BruteForceOptions {
  int max_n = 9;
  unsigned jobs = 1;
};

/// Exhaustive search over S_n. The search space is split by the image of 1;
/// blocks run on `jobs` threads and merge in block order.
SolveReport brute_force_solve(const LceInstance& inst, const BruteForceOptions& options = {});

struct Residual {
  std::size_t index;
  EquationTag tag;
  PrimeField::value_type value;
};

struct ResidualReport {
  std::vector<Residual> residuals;

  bool all_zero() const;
  std::size_t nonzero_count() const;
};

ResidualReport verify_model(const ModelSystem& sys, const Permutation& perm);

struct GridPoint {
  std::uint64_t q;
  int n;
  int k;
};

struct SoundnessEntry {
  GridPoint params;
  std::string status;               // "ok", or NoUsableInvariant when every instance was skipped
  std::size_t instances = 0;        // instances with a model
  std::size_t skipped = 0;          // instances without a usable invariant
  std::size_t secret_vanished = 0;  // instances whose whole model vanished at the secret P
  std::size_t wrong_sampled = 0;    // random permutations different from the secret
  std::size_t wrong_rejected = 0;   // ... with at least one nonzero residual
};

struct SoundnessReport {
  std::vector<SoundnessEntry> entries;

  std::size_t total_instances() const;
  std::size_t total_vanished() const;
  double rejection_rate() const;  // wrong_rejected / wrong_sampled over all entries
};

struct SoundnessOptions {
  std::size_t trials = 1;  // instances per grid point
  std::uint64_t seed = 1;
  std::size_t wrong_samples = 20;
  ModelOptions model{3, false, false, false};
};

struct GrowthEntry {
  int k;
  int n;
  std::uint64_t seed;  // first seed at or after the requested one with a usable invariant
  std::uint64_t degree;
  std::size_t monomials;
};

// Size of the expanded forward equation for (k,n) in {(2,4),(2,5),(2,6),(3,6)}.
std::vector<GrowthEntry> growth_curve(std::uint64_t q, std::uint64_t seed);

SoundnessReport experiment_soundness(const std::vector<GridPoint>& grid, const SoundnessOptions& options);

}  // namespace lcegeom

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lcegeom {

// Golden data for the built-in checks; tests corrupt copies of it.
struct SelftestFixture {
  // Incidence matrix of 2-subsets of {1..4} and the expected kernel basis.
  std::vector<std::int64_t> w42;                  // 6 x 4, row-major
  std::vector<std::vector<std::int64_t>> kernel42;
  std::uint64_t identity_prime;                   // field for mu_v2 = mu_v1 + 1
  int identity_points;

  // Small LCE instance with a known secret.
  std::uint64_t q;
  std::vector<std::int64_t> G1;                   // 2 x 4
  std::vector<std::int64_t> G2;                   // 2 x 4
  std::vector<int> P;                             // images
  std::vector<std::int64_t> D;
  std::vector<std::int64_t> plucker_G2;
  std::int64_t mu_G2;                             // p12 p34 / (p14 p23) on G2

  int property_trials;
};

SelftestFixture default_selftest_fixture();

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

// Deterministic: identical fixtures give identical results.
std::vector<CheckResult> run_selftest(const SelftestFixture& fixture);

}  // namespace lcegeom

#include "lcegeom/harness.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <optional>
#include <thread>

#include "lcegeom/grassmann.hpp"
#include "lcegeom/rng.hpp"

namespace lcegeom {

namespace {

bool is_rref_full_rank(const FqMatrix& m, int k) {
  const auto r = rref(m);
  return r.rank == static_cast<std::size_t>(k) && r.matrix == m;
}

Permutation random_permutation(std::size_t n, Rng& rng) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  for (std::size_t i = n; i > 1; --i) std::swap(im[i - 1], im[rng.below(i)]);
  return Permutation(std::move(im));
}

PrimeField field_or_bad_params(std::uint64_t q) {
  try {
    return make_field(q);
  } catch (const Error& e) {
    throw Error(ErrorKind::BadParams, e.what());
  }
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

void LceInstance::validate() const {
  auto fail = [](const std::string& why) { throw Error(ErrorKind::ValidationFailed, why); };
  if (k < 1 || k > n) fail("need 1 <= k <= n");
  for (const auto* g : {&G1, &G2}) {
    if (!(g->field() == field)) fail("matrix field differs from instance field");
    if (g->rows() != static_cast<std::size_t>(k) || g->cols() != static_cast<std::size_t>(n)) fail("matrix is not k x n");
    if (!is_rref_full_rank(*g, k)) fail("generator matrix is not a full-rank RREF");
  }
  if (secret) {
    if (secret->D.size() != static_cast<std::size_t>(n) || secret->P.size() != static_cast<std::size_t>(n)) {
      fail("secret has the wrong size");
    }
    if (rref(permute_columns(scale_columns(G1, secret->D), secret->P)).matrix != G2) {
      fail("RREF(G1 * D * P) != G2 for the recorded secret");
    }
  }
}

LceInstance gen_instance(std::uint64_t q, int n, int k, std::uint64_t seed) {
  if (k < 1 || k > n) throw Error(ErrorKind::BadParams, "need 1 <= k <= n");
  const auto field = field_or_bad_params(q);
  Rng rng(seed);
  const auto code = random_code(field, n, k, rng);
  std::vector<std::int64_t> d(static_cast<std::size_t>(n));
  for (auto& x : d) x = static_cast<std::int64_t>(1 + rng.below(field.modulus() - 1));
  DiagonalElement D(field, std::move(d));
  auto P = random_permutation(static_cast<std::size_t>(n), rng);
  auto G1 = rref(code.gen()).matrix;
  auto G2 = rref(permute_columns(scale_columns(code.gen(), D), P)).matrix;
  return LceInstance{field, n, k, std::move(G1), std::move(G2), LceSecret{std::move(D), std::move(P)}, seed};
}

LceInstance gen_unrelated_instance(std::uint64_t q, int n, int k, std::uint64_t seed) {
  if (k < 1 || k > n) throw Error(ErrorKind::BadParams, "need 1 <= k <= n");
  const auto field = field_or_bad_params(q);
  Rng rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    auto G1 = rref(random_code(field, n, k, rng).gen()).matrix;
    auto G2 = rref(random_code(field, n, k, rng).gen()).matrix;
    LceInstance inst{field, n, k, std::move(G1), std::move(G2), std::nullopt, seed};
    if (brute_force_solve(inst).witnesses.empty()) return inst;
  }
  throw Error(ErrorKind::SamplingExhausted, "every sampled pair was equivalent");
}

bool SolveReport::contains(const Permutation& p) const {
  return std::any_of(witnesses.begin(), witnesses.end(), [&](const Witness& w) { return w.P == p; });
}

SolveReport brute_force_solve(const LceInstance& inst, const BruteForceOptions& options) {
  if (inst.n > options.max_n) {
    throw Error(ErrorKind::SearchSpaceTooLarge,
                std::to_string(inst.n) + "! permutations exceed the cap n <= " + std::to_string(options.max_n));
  }
  const auto start = std::chrono::steady_clock::now();
  const LinearCode c1(inst.G1), c2(inst.G2);
  const auto n = static_cast<std::size_t>(inst.n);

  // Block b holds the permutations with images[0] == b + 1, in lexicographic order.
  std::vector<std::vector<Witness>> blocks(n);
  auto run_block = [&](std::size_t b) {
    std::vector<int> rest;
    for (std::size_t i = 1; i <= n; ++i)
      if (i != b + 1) rest.push_back(static_cast<int>(i));
    do {
      std::vector<int> im{static_cast<int>(b + 1)};
      im.insert(im.end(), rest.begin(), rest.end());
      Permutation P(std::move(im));
      const auto moved = quotient_act(P, c1);
      const auto res = same_diagonal_class(moved, c2);
      if (!res.witness) continue;
      // G1 P diag(lambda) == G1 D P with D_k = lambda_{P(k)}.
      std::vector<std::int64_t> d(n);
      for (std::size_t k = 0; k < n; ++k) d[k] = (*res.witness)[static_cast<std::size_t>(P.images()[k] - 1)];
      blocks[b].push_back({std::move(P), DiagonalElement(inst.field, std::move(d))});
    } while (std::next_permutation(rest.begin(), rest.end()));
  };

  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(n)));
  if (jobs == 1) {
    for (std::size_t b = 0; b < n; ++b) run_block(b);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t b = t; b < n; b += jobs) run_block(b);
      });
    }
    for (auto& th : pool) th.join();
  }

  SolveReport report;
  for (auto& blk : blocks)
    for (auto& w : blk) report.witnesses.push_back(std::move(w));
  report.permutations_checked = factorial(inst.n);
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

bool ResidualReport::all_zero() const { return nonzero_count() == 0; }

std::size_t ResidualReport::nonzero_count() const {
  return static_cast<std::size_t>(
      std::count_if(residuals.begin(), residuals.end(), [](const Residual& r) { return r.value != 0; }));
}

ResidualReport verify_model(const ModelSystem& sys, const Permutation& perm) {
  if (perm.size() != static_cast<std::size_t>(sys.n)) {
    throw Error(ErrorKind::DimensionMismatch, "permutation size does not match the model");
  }
  const auto x = permutation_assignment(perm);
  ResidualReport report;
  report.residuals.reserve(sys.equations.size());
  for (std::size_t i = 0; i < sys.equations.size(); ++i) {
    report.residuals.push_back({i, sys.equations[i].tag, evaluate(sys.equations[i].body, x)});
  }
  return report;
}

std::size_t SoundnessReport::total_instances() const {
  std::size_t s = 0;
  for (const auto& e : entries) s += e.instances;
  return s;
}

std::size_t SoundnessReport::total_vanished() const {
  std::size_t s = 0;
  for (const auto& e : entries) s += e.secret_vanished;
  return s;
}

double SoundnessReport::rejection_rate() const {
  std::size_t sampled = 0, rejected = 0;
  for (const auto& e : entries) {
    sampled += e.wrong_sampled;
    rejected += e.wrong_rejected;
  }
  return sampled ? static_cast<double>(rejected) / static_cast<double>(sampled) : 0.0;
}

SoundnessReport experiment_soundness(const std::vector<GridPoint>& grid, const SoundnessOptions& options) {
  SoundnessReport report;
  if (options.trials == 0) return report;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const auto& gp = grid[g];
    SoundnessEntry entry{gp, "ok"};
    for (std::size_t t = 0; t < options.trials; ++t) {
      const std::uint64_t seed = options.seed * 1000003u + g * 7919u + t;
      const auto inst = gen_instance(gp.q, gp.n, gp.k, seed);
      ModelSystem sys{inst.field, inst.n, inst.k, {}, {}};
      try {
        sys = build_model(inst, options.model);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NoUsableInvariant) throw;
        ++entry.skipped;
        continue;
      }
      ++entry.instances;
      if (verify_model(sys, inst.secret->P).all_zero()) ++entry.secret_vanished;
      Rng rng(seed ^ 0x9e3779b97f4a7c15ull);
      for (std::size_t w = 0; w < options.wrong_samples; ++w) {
        const auto P = random_permutation(static_cast<std::size_t>(gp.n), rng);
        if (P == inst.secret->P) continue;
        ++entry.wrong_sampled;
        if (!verify_model(sys, P).all_zero()) ++entry.wrong_rejected;
      }
    }
    if (entry.instances == 0) entry.status = std::string(to_string(ErrorKind::NoUsableInvariant));
    report.entries.push_back(std::move(entry));
  }
  return report;
}

std::vector<GrowthEntry> growth_curve(std::uint64_t q, std::uint64_t seed) {
  std::vector<GrowthEntry> out;
  for (const auto& [k, n] : {std::pair{2, 4}, {2, 5}, {2, 6}, {3, 6}}) {
    for (std::uint64_t s = seed;; ++s) {
      const auto inst = gen_instance(q, n, k, s);
      std::optional<ModelSystem> sys;
      try {
        sys = build_model(inst, ModelOptions{1, true, false, false});
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NoUsableInvariant || s - seed >= 1000) throw;
        continue;
      }
      const auto& h = std::get<SparsePoly>(sys->equations.front().body);
      out.push_back({k, n, s, h.total_degree(), h.monomial_count()});
      break;
    }
  }
  return out;
}

}  // namespace lcegeom

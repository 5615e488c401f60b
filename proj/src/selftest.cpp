#include "lcegeom/selftest.hpp"

#include <functional>
#include <sstream>

#include "lcegeom/grassmann.hpp"
#include "lcegeom/harness.hpp"
#include "lcegeom/integer_matrix.hpp"
#include "lcegeom/invariants.hpp"
#include "lcegeom/io.hpp"
#include "lcegeom/rng.hpp"

namespace lcegeom {

namespace {

using value_type = PrimeField::value_type;

ExponentVector exps42(std::vector<std::int64_t> e) { return ExponentVector(SubsetIndexer::shared(4, 2), std::move(e)); }

FqMatrix mat(const PrimeField& f, std::size_t rows, std::size_t cols, const std::vector<std::int64_t>& v) {
  return FqMatrix(f, rows, cols, v);
}

// Each check returns an empty string on success, otherwise a short reason.
using Check = std::function<std::string()>;

std::string golden_W(const SelftestFixture& fx) {
  const IntMatrix W = build_W(4, 2);
  if (W.rows() * W.cols() != fx.w42.size()) return "shape";
  for (std::size_t r = 0; r < W.rows(); ++r)
    for (std::size_t c = 0; c < W.cols(); ++c)
      if (W(r, c) != fx.w42[r * W.cols() + c]) return "entry mismatch";
  if (int_rank(W) != 4) return "rank != 4";
  return {};
}

std::string golden_kernel(const SelftestFixture& fx) {
  std::vector<IntVector> expected;
  for (const auto& row : fx.kernel42) expected.emplace_back(row.begin(), row.end());
  const auto lhs = lattice_basis_hnf(IntMatrix::from_rows(int_left_kernel(build_W(4, 2)), 6));
  const auto rhs = lattice_basis_hnf(IntMatrix::from_rows(expected, 6));
  return lhs == rhs ? std::string{} : "kernel lattice differs";
}

std::string golden_jacobian(const SelftestFixture& fx) {
  std::vector<ExponentVector> cands;
  for (const auto& row : fx.kernel42) cands.push_back(exps42(row));
  const auto sel = jacobian_select(cands, 4, 2);
  return sel.selected.size() == 1 ? std::string{} : "kept " + std::to_string(sel.selected.size());
}

std::string golden_identity(const SelftestFixture& fx) {
  const PrimeField f = make_field(fx.identity_prime);
  const auto v1 = exps42({1, 0, -1, -1, 0, 1});
  const auto v2 = exps42({0, 1, -1, -1, 1, 0});
  Rng rng(fx.identity_prime);
  int checked = 0;
  for (int guard = 0; checked < fx.identity_points && guard < 100 * fx.identity_points; ++guard) {
    const auto p = plucker(random_code(f, 4, 2, rng));
    const auto m1 = laurent_eval(v1, p);
    const auto m2 = laurent_eval(v2, p);
    if (!m1 || !m2) continue;
    if (*m2 != f.add(*m1, 1)) return "mu_v2 != mu_v1 + 1";
    ++checked;
  }
  return checked == fx.identity_points ? std::string{} : "not enough defined points";
}

std::string golden_plucker(const SelftestFixture& fx) {
  const PrimeField f = make_field(fx.q);
  const auto p = plucker(LinearCode(mat(f, 2, 4, fx.G2)));
  std::vector<value_type> want(fx.plucker_G2.begin(), fx.plucker_G2.end());
  if (p.coords() != want) return "plucker(G2) mismatch";
  const auto mu = laurent_eval(exps42({1, 0, -1, -1, 0, 1}), p);
  if (!mu || static_cast<std::int64_t>(*mu) != fx.mu_G2) return "mu(G2) mismatch";
  return {};
}

LceInstance fixture_instance(const SelftestFixture& fx) {
  const PrimeField f = make_field(fx.q);
  LceInstance inst{f, 4, 2, mat(f, 2, 4, fx.G1), mat(f, 2, 4, fx.G2), std::nullopt, 0};
  inst.secret = LceSecret{DiagonalElement(f, fx.D), Permutation(fx.P)};
  return inst;
}

std::string golden_secret(const SelftestFixture& fx) {
  const auto inst = fixture_instance(fx);
  const auto mapped = rref(inst.G1 * inst.secret->D.matrix(inst.field) * inst.secret->P.matrix(inst.field)).matrix;
  return mapped == inst.G2 ? std::string{} : "RREF(G1 D P) != G2";
}

std::string golden_model(const SelftestFixture& fx) {
  const auto inst = fixture_instance(fx);
  const auto sys = build_model(inst, ModelOptions{1, true, false, false});
  const auto report = verify_model(sys, inst.secret->P);
  if (!report.all_zero()) return std::to_string(report.nonzero_count()) + " nonzero residuals at P";
  return {};
}

std::string golden_solve(const SelftestFixture& fx) {
  const auto inst = fixture_instance(fx);
  return brute_force_solve(inst).contains(inst.secret->P) ? std::string{} : "P not among witnesses";
}

std::string property_rref(const SelftestFixture& fx) {
  const PrimeField f = make_field(101);
  Rng rng(7);
  for (int t = 0; t < fx.property_trials; ++t) {
    FqMatrix m(f, 3, 6);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 6; ++j) m(i, j) = static_cast<value_type>(rng.below(101));
    const auto r = rref(m).matrix;
    if (rref(r).matrix != r) return "rref not idempotent";
  }
  return {};
}

std::string property_invariance(const SelftestFixture& fx) {
  const PrimeField f = make_field(101);
  Rng rng(11);
  const auto invs = kernel_invariants(5, 2);
  for (int t = 0; t < fx.property_trials; ++t) {
    const auto code = random_code(f, 5, 2, rng);
    std::vector<std::int64_t> lam(5);
    for (auto& x : lam) x = static_cast<std::int64_t>(1 + rng.below(100));
    const DiagonalElement d(f, lam);
    const auto moved = plucker(act_diagonal(d, code));
    if (moved != act_diagonal_plucker(d, plucker(code))) return "embedding not equivariant";
    for (const auto& v : invs) {
      const auto a = laurent_eval(v, plucker(code));
      const auto b = laurent_eval(v, moved);
      if (a && b && *a != *b) return "invariant changed under the action";
    }
  }
  return {};
}

std::string property_roundtrip(const SelftestFixture& fx) {
  for (int t = 0; t < fx.property_trials; ++t) {
    const auto inst = gen_instance(7, 5, 2, 100 + static_cast<std::uint64_t>(t));
    const auto text = serialize_instance(inst);
    if (serialize_instance(parse_instance(text)) != text) return "instance round trip";
    const auto digest = instance_digest(inst);
    const auto model = serialize_model(build_model(inst, ModelOptions{1, true, false, false}), digest);
    if (serialize_model(parse_model(model, inst), digest) != model) return "model round trip";
  }
  return {};
}

std::string property_soundness(const SelftestFixture& fx) {
  int built = 0;
  for (std::uint64_t seed = 500; built < fx.property_trials && seed < 600; ++seed) {
    const auto inst = gen_instance(11, 5, 2, seed);
    std::optional<ModelSystem> sys;
    try {
      sys = build_model(inst, ModelOptions{2, false, false, false});
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoUsableInvariant) throw;
      continue;
    }
    if (!verify_model(*sys, inst.secret->P).all_zero()) return "model does not vanish at the secret";
    ++built;
  }
  return built == fx.property_trials ? std::string{} : "too few instances with a usable invariant";
}

}  // namespace

SelftestFixture default_selftest_fixture() {
  SelftestFixture fx;
  fx.w42 = {1, 1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0, 1, 1, 0, 0, 1, 0, 1, 0, 0, 1, 1};
  fx.kernel42 = {{1, 0, -1, -1, 0, 1}, {0, 1, -1, -1, 1, 0}};
  fx.identity_prime = 10007;
  fx.identity_points = 100;
  fx.q = 5;
  fx.G1 = {1, 0, 1, 1, 0, 1, 1, 2};
  fx.G2 = {1, 0, 1, 2, 0, 1, 3, 2};
  fx.P = {3, 1, 4, 2};
  fx.D = {1, 3, 4, 2};
  fx.plucker_G2 = {1, 3, 2, 4, 3, 1};
  fx.mu_G2 = 2;
  fx.property_trials = 5;
  return fx;
}

std::vector<CheckResult> run_selftest(const SelftestFixture& fx) {
  const std::vector<std::pair<std::string, Check>> checks = {
      {"golden.w42", [&] { return golden_W(fx); }},
      {"golden.kernel42", [&] { return golden_kernel(fx); }},
      {"golden.jacobian42", [&] { return golden_jacobian(fx); }},
      {"golden.mu_identity", [&] { return golden_identity(fx); }},
      {"golden.plucker_G2", [&] { return golden_plucker(fx); }},
      {"golden.secret_maps_G1_to_G2", [&] { return golden_secret(fx); }},
      {"golden.model_vanishes_at_P", [&] { return golden_model(fx); }},
      {"golden.solve_finds_P", [&] { return golden_solve(fx); }},
      {"property.rref_idempotent", [&] { return property_rref(fx); }},
      {"property.invariance", [&] { return property_invariance(fx); }},
      {"property.io_roundtrip", [&] { return property_roundtrip(fx); }},
      {"property.soundness", [&] { return property_soundness(fx); }},
  };
  std::vector<CheckResult> out;
  for (const auto& [name, fn] : checks) {
    std::string why;
    try {
      why = fn();
    } catch (const std::exception& e) {
      why = e.what();
    }
    out.push_back({name, why.empty(), why});
  }
  return out;
}

}  // namespace lcegeom

// Command-line front end. Exit codes: 0 success, 2 validation failure,
// 3 search/expansion guard, 4 I/O.

#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "lcegeom/grassmann.hpp"
#include "lcegeom/harness.hpp"
#include "lcegeom/invariants.hpp"
#include "lcegeom/io.hpp"
#include "lcegeom/selftest.hpp"

namespace {

using namespace lcegeom;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitGuard = 3;
constexpr int kExitIo = 4;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IoError:
      return kExitIo;
    case ErrorKind::SearchSpaceTooLarge:
    case ErrorKind::ExpansionRefused:
    case ErrorKind::SamplingExhausted:
      return kExitGuard;
    default:
      return kExitValidation;
  }
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
  } else {
    write_text_file(out, text);
  }
}

Permutation parse_perm(const std::string& s) {
  std::vector<int> images;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      images.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "permutation must be comma-separated images, e.g. 3,1,4,2");
    }
  }
  return Permutation(std::move(images));
}

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

std::string join(const std::vector<PrimeField::value_type>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

struct Args {
  std::uint64_t q = 5;
  int n = 4;
  int k = 2;
  std::uint64_t seed = 1;
  std::size_t budget = 1;
  bool expand = false;
  bool lazy = false;
  unsigned jobs = 1;
  std::string out;
  std::string instance;
  std::string model;
  std::string perm;
  std::uint64_t sanity_q = 0;
  std::uint64_t jacobian_seed = kDefaultJacobianSeed;
};

int cmd_gen(const Args& a) {
  const auto inst = gen_instance(a.q, a.n, a.k, a.seed);
  emit(serialize_instance(inst), a.out);
  (a.out.empty() ? std::cerr : std::cout) << "digest " << instance_digest(inst) << "\n";
  return kExitOk;
}

int cmd_invgen(const Args& a) {
  if (a.k < 1 || a.k > a.n - 1) throw Error(ErrorKind::BadParams, "invgen needs 1 <= k <= n-1");
  const auto gens = invgen(a.n, a.k, a.jacobian_seed);
  const auto idx = SubsetIndexer::shared(a.n, a.k);
  std::cout << "Gr(" << a.k << "," << a.n << "): " << gens.size() << " generators, predicted "
            << predicted_invariant_count(a.n, a.k) << "\n";
  std::optional<PluckerVector> point;
  if (a.sanity_q) point = plucker(random_code(make_field(a.sanity_q), a.n, a.k, a.jacobian_seed));
  for (const auto& g : gens) {
    std::cout << "  " << format_laurent(g) << "  [";
    bool first = true;
    for (std::size_t r = 0; r < g.size(); ++r) {
      if (g[r] == 0) continue;
      std::cout << (first ? "" : " ") << format_subset((*idx)[r], true) << ":" << g[r];
      first = false;
    }
    std::cout << "]";
    if (point) {
      const auto v = laurent_eval(g, *point);
      std::cout << "  value " << (v ? std::to_string(*v) : std::string("undefined"));
    }
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_model(const Args& a) {
  if (a.expand && a.lazy) throw Error(ErrorKind::BadParams, "--expand and --lazy are exclusive");
  const auto inst = parse_instance(read_text_file(a.instance));
  ModelOptions opts;
  opts.budget = a.budget;
  opts.expand = !a.lazy;
  ModelSystem sys = [&] {
    try {
      return build_model(inst, opts);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::ExpansionRefused) std::cerr << "hint: rerun with --lazy\n";
      throw;
    }
  }();
  emit(serialize_model(sys, instance_digest(inst)), a.out);
  auto& log = a.out.empty() ? std::cerr : std::cout;
  log << sys.equations.size() << " equations, " << sys.invariants_used.size() << " invariants\n";
  std::map<std::string_view, std::size_t> constraint_counts;
  for (std::size_t i = 0; i < sys.equations.size(); ++i) {
    const auto& eq = sys.equations[i];
    if (!eq.invariant) {
      ++constraint_counts[to_string(eq.tag)];
      continue;
    }
    log << "  [" << i << "] " << to_string(eq.tag) << " invariant " << *eq.invariant;
    if (const auto* p = std::get_if<SparsePoly>(&eq.body)) {
      log << " degree " << p->total_degree() << " monomials " << p->monomial_count();
    } else {
      log << " lazy";
    }
    log << "\n";
  }
  for (const auto& [tag, count] : constraint_counts) log << "  " << count << " x " << tag << "\n";
  return kExitOk;
}

int cmd_verify(const Args& a) {
  const auto inst = parse_instance(read_text_file(a.instance));
  const auto sys = parse_model(read_text_file(a.model), inst);
  const auto perm = parse_perm(a.perm);
  const auto report = verify_model(sys, perm);
  std::ostringstream os;
  os << "permutation " << join(perm.images()) << "\n";
  for (const auto& r : report.residuals) {
    os << "  [" << r.index << "] " << to_string(r.tag) << " residual " << r.value << "\n";
  }
  os << (report.all_zero() ? std::string("all residuals zero")
                           : std::to_string(report.nonzero_count()) + " nonzero residuals")
     << "\n";
  std::cout << os.str();
  if (!a.out.empty()) write_text_file(a.out, os.str());
  return kExitOk;
}

int cmd_solve(const Args& a) {
  const auto inst = parse_instance(read_text_file(a.instance));
  const auto report = brute_force_solve(inst, BruteForceOptions{9, a.jobs});
  for (const auto& w : report.witnesses) {
    std::cout << "P " << join(w.P.images()) << "  D " << join(w.D.entries()) << "\n";
  }
  std::cout << report.witnesses.size() << " witnesses, " << report.permutations_checked << " permutations checked\n";
  if (!a.out.empty()) write_text_file(a.out, serialize_solve_report(report, instance_digest(inst)));
  return kExitOk;
}

int cmd_bench(const Args& a) {
  std::ostringstream os;
  os << "k n seed degree monomials\n";
  for (const auto& e : growth_curve(a.q, a.seed)) {
    os << e.k << " " << e.n << " " << e.seed << " " << e.degree << " " << e.monomials << "\n";
  }
  emit(os.str(), a.out);
  return kExitOk;
}

int cmd_selftest() {
  const auto results = run_selftest(default_selftest_fixture());
  std::size_t failed = 0;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.passed) std::cout << ": " << r.detail;
    std::cout << "\n";
    failed += r.passed ? 0 : 1;
  }
  std::cout << (results.size() - failed) << "/" << results.size() << " checks passed\n";
  return failed == 0 ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear code equivalence via Grassmannian invariants"};
  app.require_subcommand(1);
  Args a;

  auto* gen = app.add_subcommand("gen", "generate a random instance with a known secret");
  gen->add_option("--q", a.q, "field prime")->required();
  gen->add_option("--n", a.n, "code length")->required();
  gen->add_option("--k", a.k, "code dimension")->required();
  gen->add_option("--seed", a.seed, "generator seed");
  gen->add_option("--out", a.out, "instance file (stdout when absent)");

  auto* inv = app.add_subcommand("invgen", "independent diagonal invariants of Gr(k,n)");
  inv->add_option("--n", a.n)->required();
  inv->add_option("--k", a.k)->required();
  inv->add_option("--q", a.sanity_q, "evaluate each generator at a random point over F_q");
  inv->add_option("--seed", a.jacobian_seed, "Jacobian test seed");

  auto* model = app.add_subcommand("model", "build the polynomial model of an instance");
  model->add_option("instance", a.instance)->required();
  model->add_option("--budget", a.budget, "number of invariants");
  model->add_flag("--expand", a.expand, "expand equations into monomials (default)");
  model->add_flag("--lazy", a.lazy, "keep invariant equations as determinant descriptors");
  model->add_option("--out", a.out);

  auto* verify = app.add_subcommand("verify", "evaluate a model at a permutation");
  verify->add_option("instance", a.instance)->required();
  verify->add_option("model", a.model)->required();
  verify->add_option("--perm", a.perm, "images, e.g. 3,1,4,2")->required();
  verify->add_option("--out", a.out);

  auto* solve = app.add_subcommand("solve", "exhaustive search for monomial witnesses");
  solve->add_option("instance", a.instance)->required();
  solve->add_option("--jobs", a.jobs)->check(CLI::Range(1u, 256u));
  solve->add_option("--out", a.out, "JSON witness report");

  auto* bench = app.add_subcommand("bench", "monomial counts of the expanded forward equation");
  bench->add_option("--q", a.q);
  bench->add_option("--seed", a.seed);
  bench->add_option("--out", a.out);

  auto* self = app.add_subcommand("selftest", "golden fixtures and reduced property suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (gen->parsed()) return cmd_gen(a);
    if (inv->parsed()) return cmd_invgen(a);
    if (model->parsed()) return cmd_model(a);
    if (verify->parsed()) return cmd_verify(a);
    if (solve->parsed()) return cmd_solve(a);
    if (bench->parsed()) {
      if (bench->count("--q") == 0) a.q = 101;
      return cmd_bench(a);
    }
    if (self->parsed()) return cmd_selftest();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  }
  return kExitValidation;
}

#include "lcegeom/model.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace lcegeom {

namespace {

using value_type = PrimeField::value_type;

void check_expansion(int n, int k, const ExponentVector& inv) {
  const auto bound = expansion_term_bound(n, k, inv.numerator_degree());
  if (bound > kExpansionTermLimit) {
    throw Error(ErrorKind::ExpansionRefused,
                "expanded equation could reach " + std::to_string(bound) + " terms (limit " +
                    std::to_string(kExpansionTermLimit) + "); use the lazy form");
  }
}

SparsePoly power(const SparsePoly& p, std::int64_t e) {
  SparsePoly r = SparsePoly::constant(p.field(), p.nvars(), 1);
  for (std::int64_t i = 0; i < e; ++i) r = r * p;
  return r;
}

Equation invariant_equation(const FqMatrix& G, std::optional<value_type> target, const ExponentVector& inv,
                            bool expand, Direction direction) {
  if (!target) throw Error(ErrorKind::UndefinedInvariant, "invariant is undefined on the target code");
  if (G.rows() != static_cast<std::size_t>(inv.k()) || G.cols() != static_cast<std::size_t>(inv.n())) {
    throw Error(ErrorKind::DimensionMismatch, "generator matrix does not match the invariant shape");
  }
  const auto& f = G.field();
  const value_type t = *target % f.modulus();
  if (!expand) return LazyEquation{G, inv, t, direction};

  check_expansion(inv.n(), inv.k(), inv);
  const auto L = symbolic_product(G, direction == Direction::Transposed);
  const std::size_t nvars = G.cols() * G.cols();
  SparsePoly num = SparsePoly::constant(f, nvars, 1);
  SparsePoly den = SparsePoly::constant(f, nvars, 1);
  for (std::size_t r = 0; r < inv.size(); ++r) {
    const auto e = inv[r];
    if (e == 0) continue;
    const auto m = minor_poly(L, inv.indexer()[r]);
    if (e > 0) {
      num = num * power(m, e);
    } else {
      den = den * power(m, -e);
    }
  }
  return num - den.scaled(t);
}

}  // namespace

std::string_view to_string(EquationTag tag) {
  switch (tag) {
    case EquationTag::Forward: return "forward";
    case EquationTag::Transposed: return "transposed";
    case EquationTag::RowSum: return "row-sum";
    case EquationTag::ColumnSum: return "column-sum";
    case EquationTag::Orthogonality: return "orthogonality";
    case EquationTag::FieldEquation: return "field-equation";
  }
  return "unknown";
}

std::string_view to_string(Direction d) { return d == Direction::Forward ? "forward" : "transposed"; }

LinearFormMatrix symbolic_product(const FqMatrix& G, bool transposed) {
  const std::size_t k = G.rows(), n = G.cols();
  LinearFormMatrix L{k, n, {}};
  L.entries.reserve(k * n);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      SparsePoly form(G.field(), n * n);
      for (std::size_t t = 1; t <= n; ++t) {
        const auto c = G(i, t - 1);
        if (c == 0) continue;
        form.add_term(Monomial::variable(transposed ? var_index(n, j, t) : var_index(n, t, j)), c);
      }
      L.entries.push_back(std::move(form));
    }
  }
  return L;
}

SparsePoly minor_poly(const LinearFormMatrix& L, const Subset& columns) {
  if (columns.size() != L.rows) throw Error(ErrorKind::BadIndex, "minor needs exactly k columns");
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] < 1 || static_cast<std::size_t>(columns[i]) > L.cols || (i && columns[i] <= columns[i - 1])) {
      throw Error(ErrorKind::BadIndex, "column subset must be increasing within [1, n]");
    }
  }
  const auto& f = L.entries.front().field();
  const std::size_t nvars = L.entries.front().nvars();
  SparsePoly det(f, nvars);
  std::vector<std::size_t> sigma(L.rows);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < sigma.size(); ++a)
      for (std::size_t b = a + 1; b < sigma.size(); ++b) inversions += sigma[a] > sigma[b];
    SparsePoly term = SparsePoly::constant(f, nvars, inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < L.rows && !term.is_zero(); ++i) {
      term = term * L(i, static_cast<std::size_t>(columns[sigma[i]] - 1));
    }
    det += term;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return det;
}

value_type LazyEquation::evaluate(std::span<const value_type> assignment) const {
  const std::size_t n = G.cols(), k = G.rows();
  if (assignment.size() != n * n) throw Error(ErrorKind::DimensionMismatch, "assignment length");
  const auto& f = G.field();
  // M = G X (forward) or G X^T (transposed).
  FqMatrix M(f, k, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t t = 0; t < n; ++t) {
      const auto g = G(i, t);
      if (g == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const auto x = direction == Direction::Forward ? assignment[t * n + j] : assignment[j * n + t];
        M(i, j) = f.add(M(i, j), f.mul(g, x % f.modulus()));
      }
    }
  value_type num = 1, den = 1;
  std::vector<value_type> block(k * k);
  for (std::size_t r = 0; r < invariant.size(); ++r) {
    const auto e = invariant[r];
    if (e == 0) continue;
    const auto& s = invariant.indexer()[r];
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) block[a * k + b] = M(a, static_cast<std::size_t>(s[b] - 1));
    const auto m = det_value(f, block, k);
    if (e > 0) {
      num = f.mul(num, f.pow(m, static_cast<std::uint64_t>(e)));
    } else {
      den = f.mul(den, f.pow(m, static_cast<std::uint64_t>(-e)));
    }
  }
  return f.sub(num, f.mul(den, target));
}

std::uint64_t expansion_term_bound(int n, int k, std::int64_t factors) {
  // 2 * n^(k * factors), saturating.
  unsigned __int128 b = 2;
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(k) * factors; ++i) {
    b *= static_cast<unsigned>(n);
    if (b > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(b);
}

Equation model_equation(const FqMatrix& G1, std::optional<value_type> target, const ExponentVector& inv,
                        bool expand) {
  return invariant_equation(G1, target, inv, expand, Direction::Forward);
}

Equation transpose_equation(const FqMatrix& G2, std::optional<value_type> target, const ExponentVector& inv,
                            bool expand) {
  return invariant_equation(G2, target, inv, expand, Direction::Transposed);
}

value_type evaluate(const Equation& eq, std::span<const value_type> assignment) {
  return std::visit([&](const auto& e) { return e.evaluate(assignment); }, eq);
}

std::size_t monomial_count(const Equation& eq) {
  if (const auto* p = std::get_if<SparsePoly>(&eq)) return p->monomial_count();
  throw Error(ErrorKind::NotExpanded, "lazy equations have no stored monomials");
}

std::vector<SparsePoly> permutation_constraints(const PrimeField& field, std::size_t n) {
  if (n < 1) throw Error(ErrorKind::BadParams, "n must be positive");
  const std::size_t nvars = n * n;
  std::vector<SparsePoly> out;
  for (std::size_t i = 1; i <= n; ++i) {
    auto p = SparsePoly::constant(field, nvars, -1);
    for (std::size_t j = 1; j <= n; ++j) p.add_term(Monomial::variable(var_index(n, i, j)), 1);
    out.push_back(std::move(p));
  }
  for (std::size_t j = 1; j <= n; ++j) {
    auto p = SparsePoly::constant(field, nvars, -1);
    for (std::size_t i = 1; i <= n; ++i) p.add_term(Monomial::variable(var_index(n, i, j)), 1);
    out.push_back(std::move(p));
  }
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t i2 = i + 1; i2 <= n; ++i2) {
        SparsePoly p(field, nvars);
        p.add_term(Monomial({{var_index(n, i, j), 1}, {var_index(n, i2, j), 1}}), 1);
        out.push_back(std::move(p));
      }
  return out;
}

ModelSystem build_model(const LceInstance& inst, const ModelOptions& options) {
  ModelSystem sys{inst.field, inst.n, inst.k, {}, {}};
  if (options.budget > 0) {
    if (inst.k < 1 || inst.k > inst.n - 1) {
      throw Error(ErrorKind::NoUsableInvariant, "Gr(k,n) has no diagonal invariants for k=" +
                                                    std::to_string(inst.k) + ", n=" + std::to_string(inst.n));
    }
    if (options.expand) {
      // Pair invariants have numerator degree 2; check before any enumeration.
      const auto bound = expansion_term_bound(inst.n, inst.k, 2);
      if (!options.general_invariants && bound > kExpansionTermLimit) {
        throw Error(ErrorKind::ExpansionRefused,
                    "expanded equations could reach " + std::to_string(bound) + " terms (limit " +
                        std::to_string(kExpansionTermLimit) + "); rerun with --lazy");
      }
    }
    const auto p1 = plucker(LinearCode(inst.G1));
    const auto p2 = plucker(LinearCode(inst.G2));
    auto consider = [&](std::optional<PairInvariant> pair, const ExponentVector& v) {
      const auto fwd = laurent_eval(v, p2);
      const auto tr = laurent_eval(v, p1);
      if (!fwd || !tr) return;
      sys.invariants_used.push_back({std::move(pair), v, *fwd, *tr});
    };
    if (options.general_invariants) {
      for (const auto& v : kernel_invariants(inst.n, inst.k)) {
        if (sys.invariants_used.size() >= options.budget) break;
        consider(std::nullopt, v);
      }
    } else {
      for (const auto& pi : enumerate_pair_invariants(inst.n, inst.k)) {
        if (sys.invariants_used.size() >= options.budget) break;
        consider(pi, pair_invariant(inst.n, pi));
      }
    }
    if (sys.invariants_used.empty()) {
      throw Error(ErrorKind::NoUsableInvariant, "every candidate invariant is undefined on G1 or G2");
    }
    for (std::size_t i = 0; i < sys.invariants_used.size(); ++i) {
      const auto& u = sys.invariants_used[i];
      sys.equations.push_back(
          {EquationTag::Forward, model_equation(inst.G1, u.forward_target, u.exponents, options.expand), i});
    }
    for (std::size_t i = 0; i < sys.invariants_used.size(); ++i) {
      const auto& u = sys.invariants_used[i];
      sys.equations.push_back({EquationTag::Transposed,
                               transpose_equation(inst.G2, u.transposed_target, u.exponents, options.expand), i});
    }
  }

  const auto n = static_cast<std::size_t>(inst.n);
  auto constraints = permutation_constraints(inst.field, n);
  for (std::size_t c = 0; c < constraints.size(); ++c) {
    const auto tag = c < n ? EquationTag::RowSum : c < 2 * n ? EquationTag::ColumnSum : EquationTag::Orthogonality;
    sys.equations.push_back({tag, std::move(constraints[c]), std::nullopt});
  }
  if (options.field_equations) {
    for (std::uint32_t v = 0; v < n * n; ++v) {
      SparsePoly p(inst.field, n * n);
      p.add_term(Monomial({{v, inst.field.modulus()}}), 1);
      p.add_term(Monomial::variable(v), inst.field.neg(1));
      sys.equations.push_back({EquationTag::FieldEquation, std::move(p), std::nullopt});
    }
  }
  return sys;
}

std::vector<value_type> permutation_assignment(const Permutation& perm) {
  const std::size_t n = perm.size();
  std::vector<value_type> x(n * n, 0);
  for (std::size_t k = 0; k < n; ++k) x[k * n + static_cast<std::size_t>(perm.images()[k] - 1)] = 1;
  return x;
}

}  // namespace lcegeom

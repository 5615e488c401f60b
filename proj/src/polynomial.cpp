#include "lcegeom/polynomial.hpp"

#include <algorithm>

namespace lcegeom {

Monomial::Monomial(std::vector<VarPower> factors) {
  std::sort(factors.begin(), factors.end(), [](const VarPower& a, const VarPower& b) { return a.var < b.var; });
  for (const auto& f : factors) {
    if (f.power == 0) continue;
    if (!factors_.empty() && factors_.back().var == f.var) {
      factors_.back().power += f.power;
    } else {
      factors_.push_back(f);
    }
    degree_ += f.power;
  }
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin(), j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->var < j->var)) {
      out.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->var < i->var) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.push_back({i->var, i->power + j->power});
      ++i;
      ++j;
    }
  }
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  const auto& x = a.factors();
  const auto& y = b.factors();
  std::size_t i = 0;
  for (; i < x.size() && i < y.size(); ++i) {
    if (x[i].var != y[i].var) return x[i].var < y[i].var;  // a has the earlier variable
    if (x[i].power != y[i].power) return x[i].power > y[i].power;
  }
  return i < x.size() && i >= y.size();
}

SparsePoly SparsePoly::constant(const PrimeField& field, std::size_t nvars, std::int64_t c) {
  SparsePoly p(field, nvars);
  p.add_term(Monomial(), field.reduce(c));
  return p;
}

SparsePoly SparsePoly::variable(const PrimeField& field, std::size_t nvars, std::uint32_t var) {
  SparsePoly p(field, nvars);
  p.add_term(Monomial::variable(var), 1);
  return p;
}

void SparsePoly::add_term(const Monomial& m, value_type c) {
  c %= field_.modulus();
  if (c == 0) return;
  if (!m.factors().empty() && m.factors().back().var >= nvars_) {
    throw Error(ErrorKind::BadIndex, "variable index out of range");
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = field_.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

std::uint64_t SparsePoly::total_degree() const {
  // Graded order puts the highest degree first.
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

bool SparsePoly::is_homogeneous() const {
  return terms_.empty() || terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

SparsePoly::value_type SparsePoly::evaluate(std::span<const value_type> point) const {
  if (point.size() != nvars_) throw Error(ErrorKind::DimensionMismatch, "assignment length");
  value_type sum = 0;
  for (const auto& [m, c] : terms_) {
    value_type t = c;
    for (const auto& [var, power] : m.factors()) {
      t = field_.mul(t, field_.pow(point[var] % field_.modulus(), power));
      if (t == 0) break;
    }
    sum = field_.add(sum, t);
  }
  return sum;
}

void SparsePoly::check_compatible(const SparsePoly& o) const {
  if (!(field_ == o.field_) || nvars_ != o.nvars_) {
    throw Error(ErrorKind::DimensionMismatch, "polynomials over different rings");
  }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, field_.neg(c));
  return *this;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  check_compatible(o);
  SparsePoly out(field_, nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) out.add_term(ma * mb, field_.mul(ca, cb));
  return out;
}

SparsePoly SparsePoly::scaled(value_type c) const {
  SparsePoly out(field_, nvars_);
  c %= field_.modulus();
  if (c == 0) return out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, field_.mul(coeff, c));
  return out;
}

std::string format_poly(const SparsePoly& p, std::size_t grid_n) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    if (c != 1 || m.is_one()) out += std::to_string(c);
    for (const auto& [var, power] : m.factors()) {
      if (!out.empty() && out.back() != ' ') out += "*";
      out += "x" + std::to_string(var / grid_n + 1) + std::to_string(var % grid_n + 1);
      if (power > 1) out += "^" + std::to_string(power);
    }
  }
  return out;
}

}  // namespace lcegeom

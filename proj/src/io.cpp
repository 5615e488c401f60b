#include "lcegeom/io.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace lcegeom {

namespace {

using json = nlohmann::ordered_json;
using value_type = PrimeField::value_type;

[[noreturn]] void parse_fail(const std::string& why) { throw Error(ErrorKind::ParseError, why); }

// Top-level keys one per line; arrays of arrays/objects one element per line.
std::string render(const json& doc) {
  std::string out = "{\n";
  std::size_t i = 0;
  for (auto it = doc.begin(); it != doc.end(); ++it, ++i) {
    out += "  " + json(it.key()).dump() + ": ";
    const auto& v = it.value();
    const bool nested = v.is_array() && !v.empty() && (v.front().is_array() || v.front().is_object());
    if (nested) {
      out += "[\n";
      for (std::size_t e = 0; e < v.size(); ++e) {
        out += "    " + v[e].dump() + (e + 1 < v.size() ? ",\n" : "\n");
      }
      out += "  ]";
    } else {
      out += v.dump();
    }
    out += (i + 1 < doc.size() ? ",\n" : "\n");
  }
  return out + "}\n";
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    parse_fail(std::string("malformed JSON: ") + e.what());
  }
}

const json& field_of(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) parse_fail(std::string("missing field '") + key + "'");
  return doc.at(key);
}

std::int64_t int_of(const json& doc, const char* key) {
  const auto& v = field_of(doc, key);
  if (!v.is_number_integer()) parse_fail(std::string("field '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

std::vector<std::int64_t> ints_of(const json& v, const char* what) {
  if (!v.is_array()) parse_fail(std::string(what) + " must be an array");
  std::vector<std::int64_t> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.is_number_integer()) parse_fail(std::string(what) + " must hold integers");
    out.push_back(x.get<std::int64_t>());
  }
  return out;
}

json flat(const FqMatrix& m) { return json(m.data()); }

FqMatrix matrix_of(const json& doc, const char* key, const PrimeField& f, int rows, int cols) {
  const auto entries = ints_of(field_of(doc, key), key);
  for (auto e : entries) {
    if (e < 0 || e >= static_cast<std::int64_t>(f.modulus())) {
      throw Error(ErrorKind::ValidationFailed, std::string(key) + " has an entry outside [0, q)");
    }
  }
  if (entries.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    throw Error(ErrorKind::ValidationFailed, std::string(key) + " must hold k*n entries");
  }
  return FqMatrix(f, static_cast<std::size_t>(rows), static_cast<std::size_t>(cols), entries);
}

json terms_json(const SparsePoly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json factors = json::array();
    for (const auto& vp : m.factors()) factors.push_back({vp.var, vp.power});
    terms.push_back({c, std::move(factors)});
  }
  return terms;
}

SparsePoly poly_of(const json& terms, const PrimeField& f, std::size_t nvars) {
  if (!terms.is_array()) parse_fail("terms must be an array");
  SparsePoly p(f, nvars);
  for (const auto& t : terms) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || !t[1].is_array()) {
      parse_fail("term must be [coeff, [[var, power], ...]]");
    }
    std::vector<VarPower> factors;
    for (const auto& vp : t[1]) {
      const auto pair = ints_of(vp, "factor");
      if (pair.size() != 2 || pair[0] < 0 || pair[1] < 1) parse_fail("factor must be [var, power>=1]");
      factors.push_back({static_cast<std::uint32_t>(pair[0]), static_cast<std::uint32_t>(pair[1])});
    }
    const auto c = t[0].get<std::int64_t>();
    if (c <= 0 || c >= static_cast<std::int64_t>(f.modulus())) {
      throw Error(ErrorKind::ValidationFailed, "coefficient outside [1, q)");
    }
    p.add_term(Monomial(std::move(factors)), static_cast<value_type>(c));
  }
  return p;
}

json sparse_exponents(const ExponentVector& v) {
  json out = json::array();
  for (std::size_t r = 0; r < v.size(); ++r)
    if (v[r] != 0) out.push_back({r, v[r]});
  return out;
}

ExponentVector exponents_of(const json& v, int n, int k) {
  const auto idx = SubsetIndexer::shared(n, k);
  std::vector<std::int64_t> e(idx->size(), 0);
  if (!v.is_array()) parse_fail("exponents must be an array");
  for (const auto& entry : v) {
    const auto pair = ints_of(entry, "exponent entry");
    if (pair.size() != 2 || pair[0] < 0 || static_cast<std::size_t>(pair[0]) >= e.size()) {
      parse_fail("exponent entry must be [rank, exponent] with a valid rank");
    }
    e[static_cast<std::size_t>(pair[0])] = pair[1];
  }
  try {
    return ExponentVector(idx, std::move(e));
  } catch (const Error& err) {
    throw Error(ErrorKind::ValidationFailed, err.what());
  }
}

Subset subset_of(const json& v) {
  const auto xs = ints_of(v, "subset");
  return Subset(xs.begin(), xs.end());
}

EquationTag tag_of(const std::string& s) {
  for (auto t : {EquationTag::Forward, EquationTag::Transposed, EquationTag::RowSum, EquationTag::ColumnSum,
                 EquationTag::Orthogonality, EquationTag::FieldEquation}) {
    if (to_string(t) == s) return t;
  }
  parse_fail("unknown equation tag '" + s + "'");
}

std::string string_of(const json& doc, const char* key) {
  const auto& v = field_of(doc, key);
  if (!v.is_string()) parse_fail(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

std::string instance_digest(const LceInstance& inst) {
  std::ostringstream canon;
  canon << "lcegeom-instance|q=" << inst.field.modulus() << "|n=" << inst.n << "|k=" << inst.k;
  for (const auto* m : {&inst.G1, &inst.G2}) {
    canon << "|";
    for (std::size_t i = 0; i < m->data().size(); ++i) canon << (i ? "," : "") << m->data()[i];
  }
  const auto text = canon.str();
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorKind::IoError, "SHA-256 computation failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int{md[i]};
  return hex.str();
}

std::string serialize_instance(const LceInstance& inst) {
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["q"] = inst.field.modulus();
  doc["n"] = inst.n;
  doc["k"] = inst.k;
  doc["G1"] = flat(inst.G1);
  doc["G2"] = flat(inst.G2);
  if (inst.secret) {
    doc["secret"] = {{"D", inst.secret->D.entries()}, {"P", inst.secret->P.images()}};
  }
  doc["seed"] = inst.seed;
  doc["convention"] = kMonomialConvention;
  return render(doc);
}

LceInstance parse_instance(const std::string& text) {
  const auto doc = parse_json(text);
  if (int_of(doc, "format_version") != kFormatVersion) parse_fail("unsupported format_version");
  if (string_of(doc, "convention") != kMonomialConvention) {
    throw Error(ErrorKind::ValidationFailed, "convention must be Q=D*P");
  }
  const auto q = int_of(doc, "q");
  const auto n = int_of(doc, "n");
  const auto k = int_of(doc, "k");
  if (n < 1 || k < 1 || k > n || n > 64) throw Error(ErrorKind::ValidationFailed, "need 1 <= k <= n <= 64");
  if (q < 2) throw Error(ErrorKind::ValidationFailed, "q must be a prime");
  PrimeField field = [&] {
    try {
      return make_field(static_cast<std::uint64_t>(q));
    } catch (const Error& e) {
      throw Error(ErrorKind::ValidationFailed, e.what());
    }
  }();
  const auto seed_v = field_of(doc, "seed");
  if (!seed_v.is_number_unsigned() && !seed_v.is_number_integer()) parse_fail("seed must be an integer");
  LceInstance inst{field,
                   static_cast<int>(n),
                   static_cast<int>(k),
                   matrix_of(doc, "G1", field, static_cast<int>(k), static_cast<int>(n)),
                   matrix_of(doc, "G2", field, static_cast<int>(k), static_cast<int>(n)),
                   std::nullopt,
                   seed_v.get<std::uint64_t>()};
  if (doc.contains("secret")) {
    const auto& s = doc.at("secret");
    try {
      auto d = ints_of(field_of(s, "D"), "secret.D");
      for (auto x : d)
        if (x <= 0 || x >= q) throw Error(ErrorKind::ValidationFailed, "secret.D entries must lie in [1, q)");
      const auto p = ints_of(field_of(s, "P"), "secret.P");
      inst.secret = LceSecret{DiagonalElement(field, std::move(d)), Permutation(std::vector<int>(p.begin(), p.end()))};
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::ParseError) throw;
      throw Error(ErrorKind::ValidationFailed, e.what());
    }
  }
  inst.validate();
  return inst;
}

std::string serialize_model(const ModelSystem& sys, const std::string& digest) {
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["instance_digest"] = digest;
  doc["q"] = sys.field.modulus();
  doc["n"] = sys.n;
  doc["k"] = sys.k;
  json invariants = json::array();
  for (const auto& u : sys.invariants_used) {
    json entry;
    if (u.pair) {
      entry["I1"] = u.pair->I1;
      entry["J1"] = u.pair->J1;
      entry["I2"] = u.pair->I2;
      entry["J2"] = u.pair->J2;
    }
    entry["exponents"] = sparse_exponents(u.exponents);
    entry["forward_target"] = u.forward_target;
    entry["transposed_target"] = u.transposed_target;
    invariants.push_back(std::move(entry));
  }
  doc["invariants"] = std::move(invariants);
  json equations = json::array(), constraints = json::array();
  for (const auto& eq : sys.equations) {
    json e;
    e["tag"] = std::string(to_string(eq.tag));
    if (eq.invariant) e["invariant"] = *eq.invariant;
    if (const auto* lazy = std::get_if<LazyEquation>(&eq.body)) {
      e["kind"] = "lazy";
      e["matrix"] = lazy->direction == Direction::Forward ? "G1" : "G2";
      e["direction"] = std::string(to_string(lazy->direction));
      e["exponents"] = sparse_exponents(lazy->invariant);
      e["target"] = lazy->target;
    } else {
      e["kind"] = "expanded";
      e["terms"] = terms_json(std::get<SparsePoly>(eq.body));
    }
    (eq.invariant ? equations : constraints).push_back(std::move(e));
  }
  doc["equations"] = std::move(equations);
  doc["constraints"] = std::move(constraints);
  return render(doc);
}

ModelSystem parse_model(const std::string& text, const LceInstance& inst) {
  const auto doc = parse_json(text);
  if (int_of(doc, "format_version") != kFormatVersion) parse_fail("unsupported format_version");
  if (string_of(doc, "instance_digest") != instance_digest(inst)) {
    throw Error(ErrorKind::ValidationFailed, "model was built for a different instance");
  }
  if (int_of(doc, "q") != inst.field.modulus() || int_of(doc, "n") != inst.n || int_of(doc, "k") != inst.k) {
    throw Error(ErrorKind::ValidationFailed, "model parameters differ from the instance");
  }
  ModelSystem sys{inst.field, inst.n, inst.k, {}, {}};
  const auto nvars = static_cast<std::size_t>(inst.n) * static_cast<std::size_t>(inst.n);
  const auto& invs = field_of(doc, "invariants");
  if (!invs.is_array()) parse_fail("invariants must be an array");
  for (const auto& u : invs) {
    std::optional<PairInvariant> pair;
    if (u.contains("I1")) {
      pair = PairInvariant{subset_of(field_of(u, "I1")), subset_of(field_of(u, "J1")), subset_of(field_of(u, "I2")),
                           subset_of(field_of(u, "J2"))};
    }
    sys.invariants_used.push_back({std::move(pair), exponents_of(field_of(u, "exponents"), inst.n, inst.k),
                                   static_cast<value_type>(int_of(u, "forward_target")),
                                   static_cast<value_type>(int_of(u, "transposed_target"))});
  }
  auto read_block = [&](const char* key, bool invariant_block) {
    const auto& block = field_of(doc, key);
    if (!block.is_array()) parse_fail(std::string(key) + " must be an array");
    for (const auto& e : block) {
      ModelEquation eq{tag_of(string_of(e, "tag")), SparsePoly(inst.field, nvars), std::nullopt};
      if (invariant_block) {
        const auto idx = int_of(e, "invariant");
        if (idx < 0 || static_cast<std::size_t>(idx) >= sys.invariants_used.size()) {
          parse_fail("invariant index out of range");
        }
        eq.invariant = static_cast<std::size_t>(idx);
      }
      const auto kind = string_of(e, "kind");
      if (kind == "lazy") {
        const auto dir = string_of(e, "direction");
        if (dir != "forward" && dir != "transposed") parse_fail("direction must be forward or transposed");
        const auto direction = dir == "forward" ? Direction::Forward : Direction::Transposed;
        const auto matrix = string_of(e, "matrix");
        if (matrix != (direction == Direction::Forward ? "G1" : "G2")) parse_fail("matrix reference mismatch");
        const auto target = int_of(e, "target");
        if (target < 0 || target >= static_cast<std::int64_t>(inst.field.modulus())) {
          throw Error(ErrorKind::ValidationFailed, "target outside [0, q)");
        }
        eq.body = LazyEquation{direction == Direction::Forward ? inst.G1 : inst.G2,
                               exponents_of(field_of(e, "exponents"), inst.n, inst.k),
                               static_cast<value_type>(target), direction};
      } else if (kind == "expanded") {
        eq.body = poly_of(field_of(e, "terms"), inst.field, nvars);
      } else {
        parse_fail("equation kind must be lazy or expanded");
      }
      sys.equations.push_back(std::move(eq));
    }
  };
  read_block("equations", true);
  read_block("constraints", false);
  return sys;
}

std::string serialize_solve_report(const SolveReport& report, const std::string& digest) {
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["instance_digest"] = digest;
  doc["convention"] = kMonomialConvention;
  doc["permutations_checked"] = report.permutations_checked;
  json ws = json::array();
  for (const auto& w : report.witnesses) ws.push_back({{"P", w.P.images()}, {"D", w.D.entries()}});
  doc["witnesses"] = std::move(ws);
  return render(doc);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorKind::IoError, "write failed for " + path);
}

}  // namespace lcegeom

#pragma once

#include <string>

#include "lcegeom/harness.hpp"
#include "lcegeom/instance.hpp"
#include "lcegeom/model.hpp"

namespace lcegeom {

inline constexpr int kFormatVersion = 1;

// SHA-256 (hex) of the public part (q, n, k, G1, G2); the secret is excluded.
std::string instance_digest(const LceInstance& inst);

// Text formats are JSON with a fixed key order, LF line endings and a
// trailing newline. Parsers throw ParseError on malformed documents and
// ValidationFailed on semantically invalid ones.
std::string serialize_instance(const LceInstance& inst);
LceInstance parse_instance(const std::string& text);

std::string serialize_model(const ModelSystem& sys, const std::string& instance_digest);
// Lazy equations refer to G1/G2 of `inst`, whose digest must match.
ModelSystem parse_model(const std::string& text, const LceInstance& inst);

std::string serialize_solve_report(const SolveReport& report, const std::string& instance_digest);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace lcegeom

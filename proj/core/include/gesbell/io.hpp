#pragma once

#include <iosfwd>
#include <string>

#include "gesbell/bell.hpp"
#include "gesbell/stabilizer.hpp"

namespace ges {

// Text format: one signed Pauli word per line, '#' starts a comment,
// whitespace is ignored. All words must share one width.
StabilizerSet read_generator_text(std::istream& in);
StabilizerSet read_generator_text(const std::string& text);
std::string write_generator_text(const StabilizerSet& set);

// JSON form: {"n": int, "paulis": ["+XZZX1", ...]}.
StabilizerSet read_generator_json(const std::string& text);
std::string write_generator_json(const StabilizerSet& set);

// Sniffs JSON ('{') vs text and parses accordingly.
StabilizerSet read_generators(const std::string& text);
StabilizerSet read_generator_file(const std::string& path);

std::string validation_report_json(const ValidationReport& report);

// Expression JSON: {"n_parties": N, "terms": [{"parties": [[i, s], ...],
// "coeff": {"a": ..., "b": ...}}, ...], "classical_bound": {...}?,
// "quantum_bound": {...}?}, with coefficients meaning a + b*sqrt2.
std::string bell_expression_json(const BellExpression& expr);
BellExpression bell_expression_from_json(const std::string& text);

}  // namespace ges

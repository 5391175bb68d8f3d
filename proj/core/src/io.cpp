#include "gesbell/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ges {

using nlohmann::json;

StabilizerSet read_generator_text(std::istream& in) {
  StabilizerSet set;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    bool blank = true;
    for (char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    }
    if (blank) continue;
    PauliOp op = pauli_from_string(line);
    if (set.generators.empty()) {
      set.n = op.n;
    } else if (op.n != set.n) {
      throw format_error("generator file mixes word widths");
    }
    set.generators.push_back(std::move(op));
  }
  if (set.generators.empty()) throw format_error("generator file contains no operators");
  return set;
}

StabilizerSet read_generator_text(const std::string& text) {
  std::istringstream in(text);
  return read_generator_text(in);
}

std::string write_generator_text(const StabilizerSet& set) {
  std::string out;
  for (const PauliOp& g : set.generators) {
    out += pauli_to_string(g);
    out += '\n';
  }
  return out;
}

StabilizerSet read_generator_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw format_error(std::string("generator JSON: ") + e.what());
  }
  if (!j.contains("n") || !j.contains("paulis"))
    throw format_error("generator JSON: expected keys \"n\" and \"paulis\"");
  StabilizerSet set;
  set.n = j.at("n").get<std::size_t>();
  for (const auto& word : j.at("paulis")) {
    PauliOp op = pauli_from_string(word.get<std::string>());
    if (op.n != set.n) throw format_error("generator JSON: word width does not match n");
    set.generators.push_back(std::move(op));
  }
  if (set.generators.empty()) throw format_error("generator JSON: no operators");
  return set;
}

std::string write_generator_json(const StabilizerSet& set) {
  json j;
  j["n"] = set.n;
  j["paulis"] = json::array();
  for (const PauliOp& g : set.generators) j["paulis"].push_back(pauli_to_string(g));
  return j.dump(2);
}

StabilizerSet read_generators(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? read_generator_json(text) : read_generator_text(text);
  }
  throw format_error("empty generator input");
}

StabilizerSet read_generator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw format_error("cannot open generator file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return read_generators(buffer.str());
}

std::string validation_report_json(const ValidationReport& report) {
  json j;
  j["abelian"] = report.abelian;
  j["independent"] = report.independent;
  j["minus_identity_free"] = report.minus_identity_free;
  j["rank"] = report.rank;
  j["dim_log2"] = report.dim_log2;
  if (report.dim_log2 >= 0 && report.dim_log2 <= 62) {
    j["subspace_dim"] = report.subspace_dim();
  } else if (report.dim_log2 < 0) {
    j["subspace_dim"] = 0;
  }
  return j.dump(2);
}

namespace {

json root2_json(const Root2& v) {
  return json{{"a", v.a.to_double()}, {"b", v.b.to_double()}};
}

Root2 root2_from_json(const json& j) {
  return Root2{Rational::from_double(j.at("a").get<double>()),
               Rational::from_double(j.at("b").get<double>())};
}

}  // namespace

std::string bell_expression_json(const BellExpression& expr) {
  json j;
  j["n_parties"] = expr.n_parties;
  j["terms"] = json::array();
  for (const auto& [label, coeff] : expr.terms) {
    json parties = json::array();
    for (const auto& [party, setting] : label) parties.push_back({party, setting});
    j["terms"].push_back({{"parties", parties}, {"coeff", root2_json(coeff)}});
  }
  if (expr.classical_bound) j["classical_bound"] = root2_json(*expr.classical_bound);
  if (expr.quantum_bound) j["quantum_bound"] = root2_json(*expr.quantum_bound);
  return j.dump(2);
}

BellExpression bell_expression_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw format_error(std::string("expression JSON: ") + e.what());
  }
  BellExpression expr;
  try {
    expr.n_parties = j.at("n_parties").get<std::size_t>();
    for (const auto& term : j.at("terms")) {
      CorrelatorLabel label;
      for (const auto& ps : term.at("parties")) {
        label.emplace_back(ps.at(0).get<std::size_t>(), ps.at(1).get<int>());
      }
      expr.add_term(label, root2_from_json(term.at("coeff")));
    }
    if (j.contains("classical_bound")) expr.classical_bound = root2_from_json(j["classical_bound"]);
    if (j.contains("quantum_bound")) expr.quantum_bound = root2_from_json(j["quantum_bound"]);
  } catch (const json::exception& e) {
    throw format_error(std::string("expression JSON: ") + e.what());
  }
  return expr;
}

}  // namespace ges

#include "semireg/report.hpp"

#include <fstream>
#include <sstream>

#include "semireg/errors.hpp"

namespace semireg {

namespace {

std::vector<std::int64_t> parse_integers(const std::string& line, std::size_t line_no) {
  std::istringstream ss(line);
  std::vector<std::int64_t> values;
  std::string token;
  while (ss >> token) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size())
      throw ValidationError(ValidationRule::Malformed,
                            "line " + std::to_string(line_no) + ": '" + token + "' is not an integer");
    values.push_back(v);
  }
  return values;
}

nlohmann::ordered_json vec_json(const IntVec& x) { return x.coords(); }

nlohmann::ordered_json vecs_json(const std::vector<IntVec>& xs) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& x : xs) arr.push_back(vec_json(x));
  return arr;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

RawInput parse_input(std::istream& in) {
  RawInput raw;
  bool header = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto values = parse_integers(line, line_no);
    if (!header) {
      if (values.size() != 2 || values[0] <= 0 || values[1] <= 0)
        throw ValidationError(ValidationRule::Malformed,
                              "line " + std::to_string(line_no) + ": header must be two positive integers 'd alpha'");
      raw.d = static_cast<std::size_t>(values[0]);
      raw.alpha = values[1];
      header = true;
      continue;
    }
    raw.generators.emplace_back(values);
  }
  if (!header) throw ValidationError(ValidationRule::Malformed, "missing header line 'd alpha'");
  return raw;
}

RawInput read_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError(ValidationRule::Malformed, "cannot open " + path);
  return parse_input(in);
}

SemigroupPresentation validate(const RawInput& raw) { return validate(raw.generators, raw.d, raw.alpha); }

nlohmann::ordered_json report_json(const RawInput& input, const Decomposition& decomposition,
                                   const RegularityReport& report) {
  nlohmann::ordered_json j;
  j["input"] = {{"d", input.d}, {"alpha", input.alpha}, {"generators", vecs_json(input.generators)}};
  j["f"] = report.f;
  j["codim"] = report.codim;
  j["dim"] = report.dim;
  j["alpha"] = report.alpha;
  j["reduction_number"] = report.red;
  j["regularity"] = report.reg;
  j["seminormal"] = report.seminormal;
  j["normal"] = report.normal;
  j["cohen_macaulay"] = report.cohen_macaulay;

  auto classes = nlohmann::ordered_json::array();
  for (std::size_t t = 0; t < decomposition.classes().size(); ++t) {
    const auto& c = decomposition.classes()[t];
    nlohmann::ordered_json cj;
    cj["gamma"] = vecs_json(c.residue.members);
    cj["h"] = vec_json(c.residue.shift);
    cj["deg_h"] = c.residue.shift_degree;
    cj["ideal_gens"] = vecs_json(c.ideal.generators());
    cj["ideal_regularity"] = report.classes[t].ideal_regularity;
    cj["in_gamma_set"] = report.classes[t].in_gamma_set;
    classes.push_back(std::move(cj));
  }
  j["classes"] = std::move(classes);

  auto bounds = nlohmann::ordered_json::array();
  for (const auto& b : report.bound_checks)
    bounds.push_back({{"name", b.name}, {"lhs", b.lhs}, {"rhs", b.rhs}, {"satisfied", b.satisfied}});
  j["bound_checks"] = std::move(bounds);
  j["warnings"] = report.warnings;
  return j;
}

nlohmann::ordered_json veronese_json(VeroneseParams params) {
  nlohmann::ordered_json j;
  j["d"] = params.d;
  j["alpha"] = params.alpha;
  j["regularity"] = veronese_regularity(params);
  const auto dc = veronese_deg_codim(params);
  // big integers are emitted as decimal strings
  j["degree"] = dc.degree.get_str();
  j["codim"] = dc.codim.get_str();
  j["deg_minus_codim"] = BigInt(dc.degree - dc.codim).get_str();
  return j;
}

std::string render_decomposition(const Decomposition& decomposition, const RegularityReport& report) {
  std::ostringstream out;
  out << "d=" << report.dim << " alpha=" << report.alpha << " f=" << report.f << " codim=" << report.codim << "\n";
  for (std::size_t t = 0; t < decomposition.classes().size(); ++t) {
    const auto& c = decomposition.classes()[t];
    out << "class " << t + 1 << ": h=" << to_string(c.residue.shift) << " deg_h=" << c.residue.shift_degree
        << " gamma={";
    for (std::size_t k = 0; k < c.residue.members.size(); ++k)
      out << (k ? "," : "") << to_string(c.residue.members[k]);
    out << "} ideal=" << to_string(c.ideal) << " reg=" << report.classes[t].ideal_regularity
        << (report.classes[t].in_gamma_set ? " *" : "") << "\n";
  }
  for (const auto& w : report.warnings) out << "warning: " << w << "\n";
  return out.str();
}

std::string render_regularity(const RegularityReport& report) {
  std::ostringstream out;
  out << "reg=" << report.reg << " red=" << report.red << "\n";
  for (const auto& w : report.warnings) out << "warning: " << w << "\n";
  return out.str();
}

std::string render_properties(const RegularityReport& report) {
  std::ostringstream out;
  out << "dim=" << report.dim << " deg=" << report.f << " codim=" << report.codim << " reg=" << report.reg
      << " red=" << report.red << "\n";
  out << "seminormal=" << yes_no(report.seminormal) << " normal=" << yes_no(report.normal)
      << " cohen_macaulay=" << yes_no(report.cohen_macaulay) << "\n";
  for (const auto& b : report.bound_checks)
    out << (b.satisfied ? "ok   " : "FAIL ") << b.name << " (" << b.lhs << " vs " << b.rhs << ")\n";
  for (const auto& w : report.warnings) out << "warning: " << w << "\n";
  return out.str();
}

std::string render_veronese(VeroneseParams params) {
  const auto dc = veronese_deg_codim(params);
  std::ostringstream out;
  out << "reg=" << veronese_regularity(params) << " deg=" << dc.degree.get_str() << " codim=" << dc.codim.get_str()
      << " deg-codim=" << BigInt(dc.degree - dc.codim).get_str() << "\n";
  return out.str();
}

}  // namespace semireg

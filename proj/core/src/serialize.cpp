#include "dualkit/serialize.hpp"

#include <cctype>
#include <sstream>

#include "dualkit/error.hpp"

namespace dualkit {

nlohmann::json to_json(const Rational& r) { return r.str(); }

nlohmann::json to_json(const std::vector<Rational>& values) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& v : values) a.push_back(v.str());
  return a;
}

nlohmann::json to_json(const PowerSeries& s) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& v : s.coeffs()) a.push_back(v.str());
  return a;
}

nlohmann::json to_json(const Polynomial& p) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& v : p.coeffs()) a.push_back(v.str());
  return a;
}

nlohmann::json to_json(const RiordanArray& r) {
  return {{"d", to_json(r.d())}, {"h", to_json(r.h())}, {"order", r.order()}};
}

nlohmann::json to_json(const NamedSequence& s) {
  return {{"name", s.name}, {"provenance", to_string(s.provenance)}, {"values", to_json(s.values)}};
}

nlohmann::json to_json(const PolynomialFamily& f) {
  nlohmann::json polys = nlohmann::json::array();
  for (const auto& p : f.polys) polys.push_back(to_json(p));
  return {{"name", f.name}, {"polys", polys}};
}

nlohmann::json to_json(const Point& p) {
  nlohmann::json o = nlohmann::json::object();
  for (const auto& [name, value] : p) o[name] = value.str();
  return o;
}

namespace {

nlohmann::json to_json(const Residual& r) { return {{"point", to_json(r.point)}, {"residual", r.value.str()}}; }

}  // namespace

nlohmann::json to_json(const IdentityReport& r, bool with_residuals) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  nlohmann::json j = {
      {"id", r.id},
      {"params", params},
      {"verdict", to_string(r.verdict)},
      {"printed_verdict", to_string(r.verdict_as_printed())},
      {"reading", r.reading},
      {"reinterpreted", r.reinterpreted},
      {"deterministic", r.deterministic},
      {"notes", r.notes},
      {"points", r.residuals.size()},
  };
  j["first_failure"] = r.first_failure ? to_json(*r.first_failure) : nlohmann::json(nullptr);
  if (r.printed_failure) j["printed_failure"] = to_json(*r.printed_failure);
  if (with_residuals) {
    nlohmann::json res = nlohmann::json::array();
    for (const auto& x : r.residuals) res.push_back(to_json(x));
    j["residuals"] = res;
  }
  return j;
}

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw Error(ErrorKind::ParseError, "expected a rational string, got " + j.dump());
}

std::vector<Rational> rationals_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& v : j) out.push_back(rational_from_json(v));
  return out;
}

PowerSeries series_from_json(const nlohmann::json& j) {
  auto v = rationals_from_json(j);
  if (v.empty()) throw Error(ErrorKind::ParseError, "a series needs at least one coefficient");
  return PowerSeries(std::move(v));
}

RiordanArray riordan_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("h")) {
    throw Error(ErrorKind::ParseError, "Riordan array JSON needs \"d\" and \"h\"");
  }
  PowerSeries d = series_from_json(j.at("d"));
  PowerSeries h = series_from_json(j.at("h"));
  if (j.contains("order")) {
    const auto n = j.at("order").get<std::size_t>();
    d = PowerSeries(std::vector<Rational>(d.coeffs().begin(), d.coeffs().end()), n);
    h = PowerSeries(std::vector<Rational>(h.coeffs().begin(), h.coeffs().end()), n);
  }
  return RiordanArray(std::move(d), std::move(h));
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '[') {
    const auto j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw Error(ErrorKind::ParseError, "malformed JSON array");
    return rationals_from_json(j);
  }
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(Rational::parse(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string matrix_to_csv(const Matrix& m) {
  std::ostringstream os;
  for (const auto& row : m) {
    for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << row[k].str();
    os << '\n';
  }
  return os.str();
}

std::string sequence_to_csv(const NamedSequence& s) {
  std::ostringstream os;
  os << "n,value\n";
  for (std::size_t n = 0; n < s.values.size(); ++n) os << n << ',' << s.values[n].str() << '\n';
  return os.str();
}

}  // namespace dualkit

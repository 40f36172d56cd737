#include "rbnc/serialize.hpp"

#include "rbnc/errors.hpp"

namespace rbnc {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

Rational coefficient_from(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw ParseError("coefficient must be a string or an integer");
}

int degree_from(const Json& j) {
  const Json& d = field(j, "degree");
  if (!d.is_number_integer() || d.get<long long>() < 0 || d.get<long long>() > SetPartition::kMaxSize)
    throw ParseError("degree must be an integer in 0..32");
  return static_cast<int>(d.get<long long>());
}

Basis basis_from(const Json& j) {
  const Json& b = field(j, "basis");
  if (!b.is_string()) throw ParseError("basis must be a string");
  return parse_basis(b.get<std::string>());
}

}  // namespace

Json to_json(const NCSymElement& x) {
  Json terms = Json::array();
  for (const auto& [pi, c] : x.terms()) terms.push_back({{"blocks", pi.to_string()}, {"coeff", to_string(c)}});
  return {{"degree", x.degree()}, {"basis", std::string(1, basis_letter(x.basis()))}, {"terms", terms}};
}

NCSymElement ncsym_from_json(const Json& j) {
  try {
    NCSymElement out(degree_from(j), basis_from(j));
    const Json& terms = field(j, "terms");
    if (!terms.is_array()) throw ParseError("terms must be an array");
    for (const Json& t : terms) {
      const Json& blocks = field(t, "blocks");
      if (!blocks.is_string()) throw ParseError("blocks must be a string");
      SetPartition pi = SetPartition::parse(blocks.get<std::string>());
      // "1/2/3" parses with n = 3 already; the degree must agree.
      if (pi.size() != out.degree()) throw ParseError("term " + pi.to_string() + " does not match the degree");
      out.add_term(pi, coefficient_from(field(t, "coeff")));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const CSymElement& x) {
  Json terms = Json::array();
  for (const auto& [lambda, c] : x.terms()) {
    Json parts = Json::array();
    for (int p : lambda.parts()) parts.push_back(p);
    terms.push_back({{"partition", parts}, {"coeff", to_string(c)}});
  }
  return {{"degree", x.degree()},
          {"basis", std::string(1, basis_letter(x.basis()))},
          {"commutative", true},
          {"terms", terms}};
}

CSymElement csym_from_json(const Json& j) {
  try {
    CSymElement out(degree_from(j), basis_from(j));
    const Json& terms = field(j, "terms");
    if (!terms.is_array()) throw ParseError("terms must be an array");
    for (const Json& t : terms) {
      std::vector<int> parts = field(t, "partition").get<std::vector<int>>();
      out.add_term(IntPartition(std::move(parts)), coefficient_from(field(t, "coeff")));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  } catch (const DegreeMismatchError& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const VerificationReport& report) {
  Json j = {{"check", report.check}, {"status", std::string(to_string(report.status))}};
  if (report.status == CheckStatus::Fail) j["witness"] = report.detail;
  if (report.status == CheckStatus::Skipped) j["reason"] = report.detail;
  return j;
}

}  // namespace rbnc

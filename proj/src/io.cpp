#include "waring/io.hpp"

#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

namespace waring {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw WaringError(ErrorCode::kInvalidInput, where + ": " + what);
}

const Json& require(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) bad(where, std::string("missing \"") + key + "\"");
  return obj.at(key);
}

int read_int(const Json& obj, const char* key) {
  const auto& v = require(obj, key, key);
  if (!v.is_number_integer()) bad(key, "expected an integer");
  return v.get<int>();
}

mpq_class read_scalar(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return mpq_class(v.dump());
  if (!v.is_string()) bad(where, "expected an integer or a \"num/den\" string, got " + v.dump());
  return parse_scalar(v.get<std::string>(), where);
}

std::string scalar_text(const mpq_class& q) { return q.get_str(); }

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <class T>
std::optional<T> optional_from(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

std::string FieldDescriptor::label() const { return rational ? "rational" : "prime:" + std::to_string(prime); }

FieldDescriptor parse_field(const std::string& text, const std::string& where) {
  if (text == "rational") return {true, PrimeField::kDefaultPrime};
  if (text == "prime") return {false, default_prime()};
  static const std::regex prime_re("prime:([0-9]{1,10})");
  std::smatch m;
  if (!std::regex_match(text, m, prime_re)) bad(where, "expected \"rational\" or \"prime:<p>\", got \"" + text + "\"");
  const std::uint64_t p = std::stoull(m[1].str());
  if (p >= (std::uint64_t{1} << 32) || p < 3 || !PrimeField::is_prime(p))
    bad(where, m[1].str() + " is not an odd prime below 2^32");
  return {false, p};
}

std::uint64_t default_prime() {
  const char* env = std::getenv("WARING_PRIME");
  if (!env || !*env) return PrimeField::kDefaultPrime;
  return parse_field(std::string("prime:") + env, "WARING_PRIME").prime;
}

mpq_class parse_scalar(const std::string& text, const std::string& where) {
  static const std::regex scalar_re("[+-]?[0-9]+(/[0-9]+)?");
  if (!std::regex_match(text, scalar_re)) bad(where, "\"" + text + "\" is not an integer or num/den");
  std::string body = text[0] == '+' ? text.substr(1) : text;
  const auto slash = body.find('/');
  if (slash != std::string::npos && mpz_class(body.substr(slash + 1)) == 0) bad(where, "zero denominator");
  mpq_class q(body);
  q.canonicalize();
  return q;
}

DecompositionFile parse_decomposition(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw WaringError(ErrorCode::kInvalidInput, std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) bad("document", "expected an object");
  DecompositionFile f;
  f.n = read_int(j, "n");
  f.d = read_int(j, "d");
  if (f.n < 1) bad("n", "must be at least 1");
  if (f.d < 1) bad("d", "must be at least 1");
  const auto& field = require(j, "field", "field");
  if (!field.is_string()) bad("field", "expected a string");
  f.field = parse_field(field.get<std::string>());
  const auto& terms = require(j, "terms", "terms");
  if (!terms.is_array() || terms.empty()) bad("terms", "expected a nonempty array");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string where = "terms[" + std::to_string(i) + "]";
    const auto& t = terms[i];
    DecompositionFile::Term term;
    if (t.is_object() && t.contains("weight")) term.weight = read_scalar(t.at("weight"), where + ".weight");
    const auto& coeffs = require(t, "coeffs", where);
    if (!coeffs.is_array()) bad(where + ".coeffs", "expected an array");
    if (static_cast<int>(coeffs.size()) != f.n + 1)
      bad(where + ".coeffs",
          "has " + std::to_string(coeffs.size()) + " entries, expected n+1 = " + std::to_string(f.n + 1));
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      term.coeffs.push_back(read_scalar(coeffs[k], where + ".coeffs[" + std::to_string(k) + "]"));
    f.terms.push_back(std::move(term));
  }
  return f;
}

DecompositionFile read_decomposition(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw WaringError(ErrorCode::kInvalidInput, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_decomposition(ss.str());
}

std::string serialize(const DecompositionFile& f) {
  Json j;
  j["n"] = f.n;
  j["d"] = f.d;
  j["field"] = f.field.label();
  j["terms"] = Json::array();
  for (const auto& t : f.terms) {
    Json term;
    term["weight"] = scalar_text(t.weight);
    term["coeffs"] = Json::array();
    for (const auto& c : t.coeffs) term["coeffs"].push_back(scalar_text(c));
    j["terms"].push_back(term);
  }
  return j.dump(2) + "\n";
}

Json report_to_json(const CertReport& rep) {
  Json j;
  j["status"] = to_string(rep.status);
  j["stage"] = to_string(rep.stage);
  j["reason"] = to_string(rep.reason);
  Json d;
  d["n"] = rep.n;
  d["d"] = rep.d;
  d["r"] = rep.r;
  d["field"] = rep.field;
  d["exact"] = rep.exact;
  d["span_rows"] = rep.span_rows;
  d["span_cols"] = rep.span_cols;
  d["rank_span"] = rep.rank_span;
  d["flattening"] = rep.flattening;
  d["flattening_param"] = rep.flattening_param;
  d["flattening_rank"] = optional_json(rep.flattening_rank);
  d["expected_flattening_rank"] = optional_json(rep.expected_flattening_rank);
  d["normal_dim"] = optional_json(rep.normal_dim);
  d["expected_normal_dim"] = optional_json(rep.expected_normal_dim);
  d["tangent_dim"] = optional_json(rep.tangent_dim);
  d["expected_tangent_dim"] = optional_json(rep.expected_tangent_dim);
  d["smooth"] = optional_json(rep.smooth);
  d["ell"] = optional_json(rep.ell);
  d["hessian_rows"] = rep.hessian_rows;
  d["hessian_cols"] = rep.hessian_cols;
  d["hessian_ranks"] = rep.hessian_ranks;
  d["hessian_kernel_is_point"] = rep.hessian_kernel_is_point;
  d["timings_ms"] = Json::array();
  for (const auto& [name, ms] : rep.timings_ms) d["timings_ms"].push_back(Json::array({name, ms}));
  j["diagnostics"] = d;
  j["notes"] = rep.notes;
  return j;
}

CertReport report_from_json(const Json& j) {
  CertReport rep;
  rep.status = parse_status(j.at("status").get<std::string>());
  rep.stage = parse_stage(j.at("stage").get<std::string>());
  rep.reason = parse_reason(j.at("reason").get<std::string>());
  const auto& d = j.at("diagnostics");
  rep.n = d.at("n").get<int>();
  rep.d = d.at("d").get<int>();
  rep.r = d.at("r").get<std::size_t>();
  rep.field = d.at("field").get<std::string>();
  rep.exact = d.at("exact").get<bool>();
  rep.span_rows = d.at("span_rows").get<std::size_t>();
  rep.span_cols = d.at("span_cols").get<std::size_t>();
  rep.rank_span = d.at("rank_span").get<std::size_t>();
  rep.flattening = d.at("flattening").get<std::string>();
  rep.flattening_param = d.at("flattening_param").get<int>();
  rep.flattening_rank = optional_from<std::size_t>(d, "flattening_rank");
  rep.expected_flattening_rank = optional_from<std::size_t>(d, "expected_flattening_rank");
  rep.normal_dim = optional_from<std::size_t>(d, "normal_dim");
  rep.expected_normal_dim = optional_from<std::size_t>(d, "expected_normal_dim");
  rep.tangent_dim = optional_from<std::size_t>(d, "tangent_dim");
  rep.expected_tangent_dim = optional_from<std::size_t>(d, "expected_tangent_dim");
  rep.smooth = optional_from<bool>(d, "smooth");
  rep.ell = optional_from<std::size_t>(d, "ell");
  rep.hessian_rows = d.at("hessian_rows").get<std::size_t>();
  rep.hessian_cols = d.at("hessian_cols").get<std::size_t>();
  rep.hessian_ranks = d.at("hessian_ranks").get<std::vector<std::size_t>>();
  rep.hessian_kernel_is_point = d.at("hessian_kernel_is_point").get<std::vector<bool>>();
  for (const auto& t : d.at("timings_ms")) rep.timings_ms.emplace_back(t.at(0).get<std::string>(), t.at(1).get<double>());
  rep.notes = j.at("notes").get<std::vector<std::string>>();
  return rep;
}

Json scan_to_json(const ScanResult& result) {
  Json j;
  const auto& c = result.config;
  j["n"] = c.n;
  j["d"] = c.d;
  j["r"] = c.r;
  j["trials"] = c.trials;
  j["prime"] = c.prime;
  j["seed"] = c.seed;
  j["certified"] = result.certified;
  j["certified_fraction"] = result.certified_fraction;
  j["modal_failure_stage"] = result.modal_failure_stage ? Json(to_string(*result.modal_failure_stage)) : Json(nullptr);
  j["modal_hessian_profile"] = result.modal_hessian_profile;
  j["per_trial"] = Json::array();
  for (const auto& t : result.trials) {
    Json tj;
    tj["status"] = to_string(t.status);
    tj["stage"] = to_string(t.stage);
    tj["reason"] = to_string(t.reason);
    tj["rank_span"] = t.rank_span;
    tj["flattening_rank"] = optional_json(t.flattening_rank);
    tj["tangent_dim"] = optional_json(t.tangent_dim);
    tj["normal_dim"] = optional_json(t.normal_dim);
    tj["hessian_ranks"] = t.hessian_ranks;
    j["per_trial"].push_back(tj);
  }
  j["note"] = kGenericDisclaimer;
  return j;
}

}  // namespace waring

#pragma once

// Text formats: decomposition files (JSON with exact scalar strings), the
// certification report, and scan summaries.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "waring/criteria.hpp"
#include "waring/field.hpp"
#include "waring/scan.hpp"
#include "waring/veronese.hpp"

namespace waring {

using Json = nlohmann::ordered_json;

// "rational" or "prime:<p>".
struct FieldDescriptor {
  bool rational = true;
  std::uint64_t prime = PrimeField::kDefaultPrime;

  std::string label() const;
  bool operator==(const FieldDescriptor&) const = default;
};

// Throws kInvalidInput naming `where` on malformed descriptors.
FieldDescriptor parse_field(const std::string& text, const std::string& where = "field");

// Default modulus: WARING_PRIME if set, else 2^31 - 1.
std::uint64_t default_prime();

struct DecompositionFile {
  int n = 0;
  int d = 0;
  FieldDescriptor field;
  struct Term {
    mpq_class weight{1};
    std::vector<mpq_class> coeffs;
  };
  std::vector<Term> terms;
};

// Integer or "num/den" with optional sign; nothing else. Throws kInvalidInput
// naming `where`.
mpq_class parse_scalar(const std::string& text, const std::string& where);

DecompositionFile parse_decomposition(const std::string& text);
DecompositionFile read_decomposition(const std::string& path);

// Canonical form: reduced fractions, fixed key order, two-space indent.
std::string serialize(const DecompositionFile& file);

template <class Field>
WaringInput<Field> to_input(const Field& F, const DecompositionFile& file) {
  WaringInput<Field> w{file.n, file.d, {}};
  for (std::size_t i = 0; i < file.terms.size(); ++i) {
    const auto& t = file.terms[i];
    WaringTerm<Field> term;
    try {
      term.weight = F.from_rational(t.weight);
      for (const auto& c : t.coeffs) term.form.push_back(F.from_rational(c));
    } catch (const std::domain_error& e) {
      throw WaringError(ErrorCode::kInvalidInput, "terms[" + std::to_string(i) + "]: " + e.what());
    }
    w.terms.push_back(std::move(term));
  }
  validate(F, w);
  return w;
}

Json report_to_json(const CertReport& rep);
CertReport report_from_json(const Json& j);

Json scan_to_json(const ScanResult& result);

}  // namespace waring

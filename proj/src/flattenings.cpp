#include "waring/flattenings.hpp"

namespace waring {

const char* to_string(FlatteningKind kind) {
  return kind == FlatteningKind::kCatalecticant ? "catalecticant" : "koszul";
}

int default_koszul_degree(int n) { return std::max(1, n / 2); }

std::size_t rank_per_term(const FlatteningSpec& spec, int n) {
  // A Koszul flattening of v^3 factors through w -> w ^ v on Lambda^a.
  return spec.kind == FlatteningKind::kCatalecticant ? 1 : binomial(n, spec.param);
}

}  // namespace waring

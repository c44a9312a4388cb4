#include "framegeo/catalog.hpp"

namespace framegeo {

namespace {

// A warped product frame: [e_1,e_3] = e_1, [e_2,e_3] = e_2, orthonormal
// metric, xi = e_3, phi the rotation of the transverse plane. Kenmotsu.
constexpr std::string_view kKenmotsu3 = R"({
  "name": "kenmotsu3",
  "dimension": 3,
  "metric": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
  "structure_constants": [
    {"i": 1, "j": 3, "k": 1, "value": 1},
    {"i": 2, "j": 3, "k": 2, "value": 1}
  ],
  "phi": [[0, 1, 0], [-1, 0, 0], [0, 0, 0]],
  "xi": [0, 0, 1]
}
)";

// Abelian flat control: same contact data on a torus-like frame. A valid
// almost contact metric structure that is not Kenmotsu.
constexpr std::string_view kFlat3 = R"({
  "name": "flat3",
  "dimension": 3,
  "metric": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
  "structure_constants": [],
  "phi": [[0, 1, 0], [-1, 0, 0], [0, 0, 0]],
  "xi": [0, 0, 1]
}
)";

} // namespace

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> catalog = {
      {"kenmotsu3", kKenmotsu3},
      {"flat3", kFlat3},
  };
  return catalog;
}

std::optional<std::string_view> catalog_document(std::string_view name) {
  for (const auto& entry : builtin_catalog()) {
    if (entry.name == name) return entry.document;
  }
  return std::nullopt;
}

} // namespace framegeo

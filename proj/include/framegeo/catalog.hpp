#ifndef FRAMEGEO_CATALOG_HPP
#define FRAMEGEO_CATALOG_HPP

#include <optional>
#include <string_view>
#include <vector>

namespace framegeo {

/// Built-in manifold documents, emitted bit-exactly by the example
/// command. The same bytes ship under data/ in the source tree.
struct CatalogEntry {
  std::string_view name;
  std::string_view document;
};

const std::vector<CatalogEntry>& builtin_catalog();
std::optional<std::string_view> catalog_document(std::string_view name);

} // namespace framegeo

#endif

#ifndef NILCX_CATALOG_IO_HPP
#define NILCX_CATALOG_IO_HPP

#include <string>

#include "json.hpp"
#include "nilcx/catalog.hpp"

namespace nilcx {

std::string baseKindName(BaseKind b);
BaseKind baseKindFromName(const std::string& s);

/// Full serialization of a catalog entry: algebra, stored structures with
/// their expectations, parametric families, and the bundle-row data.
nlohmann::json entryToJson(const CatalogEntry& entry);

}  // namespace nilcx

#endif

#ifndef FOXH_CATALOG_HPP
#define FOXH_CATALOG_HPP

#include <string>
#include <vector>

#include "hspec.hpp"

namespace foxh {

// Built-in simple-pole reference specs used by the oracle-equivalence and
// contour-shift suites.
struct CatalogEntry {
  std::string name;
  HFunctionSpec spec;
};

const std::vector<CatalogEntry>& catalog();

}  // namespace foxh

#endif

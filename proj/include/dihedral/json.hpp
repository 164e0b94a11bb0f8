#pragma once

// JSON views of reports. Element lists use the display grammar of
// to_string(const Element&); key order is fixed.

#include <json.hpp>

#include "dihedral/equivalence.hpp"
#include "dihedral/infinite.hpp"
#include "dihedral/spaces.hpp"

namespace dihedral {

using Json = nlohmann::ordered_json;

Json to_json(const std::vector<Element>& elements);
Json to_json(const SpaceReport& report);
Json to_json(const EquivClass& cls);
Json to_json(const SubsetDescriptor& d);
Json to_json(const InfiniteSpaces& spaces);

}  // namespace dihedral

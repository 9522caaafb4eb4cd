#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cosetlab/group.hpp"

namespace cosetlab {

/// Built-in groups in listing order.
const std::vector<std::string>& catalog_names();

/// Spec for a family name ("S4", "Q8") or an 'x'-separated product of them
/// ("C2xC2xC2"). Throws UnknownFamily on anything else.
GroupSpec spec_from_name(std::string_view name);

}  // namespace cosetlab

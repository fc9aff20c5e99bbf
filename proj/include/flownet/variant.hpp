#pragma once

#include <string>
#include <string_view>

namespace flownet {

// Which path families a p-path flow may use.
enum class SplitVariant { kUnrestricted, kArcDisjoint, kVertexDisjoint };

// "any", "arc", "vertex".
std::string to_string(SplitVariant variant);
SplitVariant parse_split_variant(std::string_view name);

}  // namespace flownet

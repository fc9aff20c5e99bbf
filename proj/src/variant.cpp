#include "flownet/variant.hpp"

#include "flownet/error.hpp"

namespace flownet {

std::string to_string(SplitVariant variant) {
  switch (variant) {
    case SplitVariant::kUnrestricted:
      return "any";
    case SplitVariant::kArcDisjoint:
      return "arc";
    case SplitVariant::kVertexDisjoint:
      return "vertex";
  }
  return "any";
}

SplitVariant parse_split_variant(std::string_view name) {
  if (name == "any" || name == "unrestricted") return SplitVariant::kUnrestricted;
  if (name == "arc" || name == "arc_disjoint") return SplitVariant::kArcDisjoint;
  if (name == "vertex" || name == "vertex_disjoint") return SplitVariant::kVertexDisjoint;
  throw InputError("unknown variant '" + std::string(name) + "'");
}

}  // namespace flownet

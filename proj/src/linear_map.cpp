#include "hnambu/linear_map.hpp"

namespace hnambu {

std::string to_string(MapKind kind) {
  switch (kind) {
    case MapKind::identity: return "identity";
    case MapKind::matrix: return "matrix";
    case MapKind::substitution: return "substitution";
    case MapKind::scaling: return "scaling";
    case MapKind::composite: return "composite";
    case MapKind::custom: return "custom";
  }
  return "custom";
}

}  // namespace hnambu

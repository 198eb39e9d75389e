#pragma once

#include <string>

#include "trinity/flagmap.hpp"

namespace trinity {

/// (Z/2)^3 with the three coordinate involutions: 8 flags, type (2,2),
/// trinity-symmetric.  The smallest base on which the covering construction
/// can be checked exhaustively.
RegularMap toy_z2cube();

/// 2-skeleton of the tetrahedron: S4 on 24 flags, type (3,3), orientable,
/// self-dual but not self-Petrie-dual.
RegularMap toy_tetrahedron();

/// Lookup by name ("z2cube", "tetrahedron"); throws input_error otherwise.
RegularMap toy_by_name(const std::string& name);

} // namespace trinity

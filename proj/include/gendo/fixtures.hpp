#pragma once

#include "gendo/algebra.hpp"
#include "gendo/kupisch.hpp"

#include <string>
#include <vector>

namespace gendo {

/// Two vertices, loop a at vertex 1, b1: 1 -> 2, b2: 2 -> 1, relations
/// a^2 - b1 b2 and b2 b1. Vertex "1" is index 0, vertex "2" is index 1.
QuiverPresentation penny_farthing_quiver(const Field& f);
AlgebraPtr penny_farthing(const Field& f);

/// k[x,y]/(x^2, y^2, xy - yx) with basis e, x, y, x*y.
AlgebraPtr commutative_local(const Field& f);

/// 1 -> 2 without relations.
AlgebraPtr a2_line(const Field& f);

/// k[x]/(x^2) given by raw structure constants.
AlgebraPtr dual_numbers(const Field& f);

/// The ground field as a one-dimensional algebra.
AlgebraPtr ground_field(const Field& f);

}  // namespace gendo

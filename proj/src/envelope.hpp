#pragma once

#include <vector>

#include "grasstropic/soliton.hpp"

namespace grasstropic::soliton::detail {

// a x + b y + c for one candidate index set.
struct LinearForm {
  Subset J;
  Rational a, b, c;
};

// Planar subdivision of the box by the upper envelope of the forms.
ContourPlot upper_envelope(const std::vector<LinearForm>& forms, const BoundingBox& bbox);

// Runs fn(i) for i in [0, count) on up to GRASSTROPIC_THREADS threads.
void parallel_for(int count, const std::function<void(int)>& fn);

}  // namespace grasstropic::soliton::detail

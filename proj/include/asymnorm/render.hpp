#pragma once

#include <string>

#include "asymnorm/compactness.hpp"
#include "asymnorm/instance_io.hpp"

namespace asymnorm {

class UnsupportedDimension : public InputError {
 public:
  using InputError::InputError;
};

// SVG 1.1 drawing of a planar instance: closure(K) clipped to the view box,
// the theta(0) fan anchored at the center, E(K) markers and S(K) shading.
// Throws UnsupportedDimension unless dim == 2.
std::string render_svg(const Problem& problem, const CompactnessCertificate& outcome);

}  // namespace asymnorm

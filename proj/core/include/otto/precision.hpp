#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace otto {

// IEEE binary128-equivalent software float (113-bit significand). Used by
// the oracles where double-precision objective noise would swamp the
// argmax resolution.
using Quad = boost::multiprecision::cpp_bin_float_quad;

}  // namespace otto

#pragma once

#include "maxmin/core.hpp"

namespace fixtures {

using maxmin::Box;
using maxmin::Matrix;
using maxmin::Tick;
using maxmin::Vector;

inline constexpr Tick kTop = 10;

/// The 4x4 worked example over [0, 10].
inline Matrix<Tick> example_matrix() {
  return {kTop, {{4, 4, 4, 5}, {2, 2, 7, 2}, {3, 8, 3, 3}, {7, 3, 3, 3}}};
}

inline Box<Tick> example_box() { return {Vector<Tick>(kTop, {2, 3, 2, 4}), Vector<Tick>(kTop, {7, 9, 6, 5})}; }

inline Matrix<Tick> a2() { return {kTop, {{5, 0}, {5, 0}}}; }

inline Box<Tick> a2_box() { return {Vector<Tick>(kTop, {0, 0}), Vector<Tick>(kTop, {5, 5})}; }

inline Vector<Tick> v(std::initializer_list<Tick> ticks) { return {kTop, ticks}; }

}  // namespace fixtures

#ifndef QSPLINE_QSPLINE_HPP
#define QSPLINE_QSPLINE_HPP

// Quaternionic B-splines, the fundamental cardinal interpolating spline of
// quaternionic order, its filter numerics, and the associated sampling series.

#include "qspline/axial.hpp"
#include "qspline/bspline.hpp"
#include "qspline/csv.hpp"
#include "qspline/errors.hpp"
#include "qspline/fft.hpp"
#include "qspline/fundamental.hpp"
#include "qspline/grid.hpp"
#include "qspline/quaternion.hpp"
#include "qspline/sampling.hpp"
#include "qspline/special.hpp"

#endif

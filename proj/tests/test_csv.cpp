#include <catch2/catch_amalgamated.hpp>
#include "qspline/qspline.hpp"

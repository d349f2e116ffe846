#pragma once

#include "fpqh/exact.hpp"
#include "fpqh/experiments.hpp"
#include "fpqh/generators.hpp"
#include "fpqh/geometry.hpp"
#include "fpqh/io.hpp"
#include "fpqh/metrics.hpp"
#include "fpqh/quickhull.hpp"
#include "fpqh/reduction.hpp"

#pragma once

#include "maxmin/core.hpp"
#include "maxmin/graph.hpp"
#include "maxmin/spectral.hpp"
#include "maxmin/solver.hpp"
#include "maxmin/oracle.hpp"
#include "maxmin/conformism.hpp"
#include "maxmin/robustness.hpp"

#pragma once

#include "shiftbound/classic_bounds.hpp"
#include "shiftbound/envelope.hpp"
#include "shiftbound/experiments.hpp"
#include "shiftbound/graph.hpp"
#include "shiftbound/graph_bounds.hpp"
#include "shiftbound/jacobi.hpp"
#include "shiftbound/parse.hpp"
#include "shiftbound/region.hpp"
#include "shiftbound/rng.hpp"
#include "shiftbound/shifted_brauer.hpp"
#include "shiftbound/shifted_gershgorin.hpp"
#include "shiftbound/spread.hpp"
#include "shiftbound/symmetric_matrix.hpp"

#pragma once

#include "omega/bose_mesner.hpp"
#include "omega/certificate.hpp"
#include "omega/combinatorics.hpp"
#include "omega/construction.hpp"
#include "omega/errors.hpp"
#include "omega/exact.hpp"
#include "omega/exact_solver.hpp"
#include "omega/gf2.hpp"
#include "omega/hypercube.hpp"
#include "omega/rational_matrix.hpp"
#include "omega/set_io.hpp"

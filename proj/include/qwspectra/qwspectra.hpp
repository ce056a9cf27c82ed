#pragma once

// Umbrella header.

#include "charpoly.hpp"
#include "errors.hpp"
#include "gaussian.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "isospec.hpp"
#include "jacobi.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "theorems.hpp"
#include "walk_matrices.hpp"

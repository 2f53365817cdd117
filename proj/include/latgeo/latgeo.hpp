#ifndef LATGEO_LATGEO_HPP
#define LATGEO_LATGEO_HPP

#include "latgeo/critical.hpp"
#include "latgeo/descent.hpp"
#include "latgeo/errors.hpp"
#include "latgeo/flat_torus.hpp"
#include "latgeo/geometry.hpp"
#include "latgeo/invariants.hpp"
#include "latgeo/io.hpp"
#include "latgeo/lattice.hpp"
#include "latgeo/random.hpp"
#include "latgeo/scalar.hpp"
#include "latgeo/simplex.hpp"
#include "latgeo/svg.hpp"

#endif  // LATGEO_LATGEO_HPP

#pragma once

// Umbrella header for the flowpoly library.

#include "flowpoly/errors.hpp"
#include "flowpoly/geometry.hpp"
#include "flowpoly/io.hpp"
#include "flowpoly/models.hpp"
#include "flowpoly/network.hpp"
#include "flowpoly/oracle.hpp"
#include "flowpoly/paths.hpp"
#include "flowpoly/rational.hpp"
#include "flowpoly/verify.hpp"

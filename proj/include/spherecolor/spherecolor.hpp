#pragma once

#include "spherecolor/error.hpp"
#include "spherecolor/poset.hpp"
#include "spherecolor/matching.hpp"
#include "spherecolor/gf2.hpp"
#include "spherecolor/bipartite.hpp"
#include "spherecolor/sphere_color.hpp"
#include "spherecolor/planar.hpp"
#include "spherecolor/svg.hpp"
#include "spherecolor/io.hpp"

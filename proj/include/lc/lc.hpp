// Umbrella header: pulls in the whole public surface.
#pragma once

#include <lc/graph.hpp>
#include <lc/cert.hpp>
#include <lc/enumerate.hpp>
#include <lc/connectivity_core.hpp>
#include <lc/ears.hpp>
#include <lc/minor.hpp>
#include <lc/building_blocks.hpp>
#include <lc/connectivity_schemes.hpp>
#include <lc/transforms.hpp>
#include <lc/combinators.hpp>
#include <lc/minor_free.hpp>
#include <lc/fuzz.hpp>

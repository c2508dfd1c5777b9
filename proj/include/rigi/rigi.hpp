#pragma once

// Umbrella header for the 2D combinatorial rigidity toolkit.

#include "rigi/campaign.hpp"
#include "rigi/connectivity.hpp"
#include "rigi/covers.hpp"
#include "rigi/edge_list.hpp"
#include "rigi/generators.hpp"
#include "rigi/graph.hpp"
#include "rigi/graph6.hpp"
#include "rigi/matrix_rank.hpp"
#include "rigi/pebble.hpp"
#include "rigi/prng.hpp"
#include "rigi/report.hpp"
#include "rigi/rigidity.hpp"

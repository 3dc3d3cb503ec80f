#pragma once

#include "bench.hpp"
#include "bitset.hpp"
#include "graph.hpp"
#include "hardness.hpp"
#include "instance_gen.hpp"
#include "io.hpp"
#include "quantum.hpp"
#include "random.hpp"
#include "solver.hpp"
#include "weighting.hpp"

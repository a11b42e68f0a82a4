#pragma once

#include "metricdim/constructions.hpp"
#include "metricdim/distance.hpp"
#include "metricdim/enumerate.hpp"
#include "metricdim/families.hpp"
#include "metricdim/graph.hpp"
#include "metricdim/io.hpp"
#include "metricdim/products.hpp"
#include "metricdim/resolving.hpp"
#include "metricdim/self_resolved.hpp"
#include "metricdim/solver.hpp"
#include "metricdim/vertex_set.hpp"

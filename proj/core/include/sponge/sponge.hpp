#pragma once

#include "sponge/classify.hpp"
#include "sponge/components.hpp"
#include "sponge/deciders.hpp"
#include "sponge/delta_graph.hpp"
#include "sponge/error.hpp"
#include "sponge/gap_sequence.hpp"
#include "sponge/geometry.hpp"
#include "sponge/metrics.hpp"
#include "sponge/model.hpp"
#include "sponge/parallel.hpp"
#include "sponge/rational.hpp"
#include "sponge/spatial_grid.hpp"
#include "sponge/union_find.hpp"

#pragma once

// Umbrella header: the entropy of the number of colours seen after rolling
// properly coloured dice, computed exactly on the associated r-uniform
// multi-hypergraph.

#include "hyperent/bounds.hpp"
#include "hyperent/canonical.hpp"
#include "hyperent/closed_form.hpp"
#include "hyperent/enumerate.hpp"
#include "hyperent/errors.hpp"
#include "hyperent/exact_dist.hpp"
#include "hyperent/hypergraph.hpp"
#include "hyperent/hypergraph_io.hpp"
#include "hyperent/orientation.hpp"
#include "hyperent/pmf.hpp"
#include "hyperent/rational.hpp"
#include "hyperent/search.hpp"

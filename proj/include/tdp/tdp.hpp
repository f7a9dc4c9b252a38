#pragma once

// Umbrella header for the total domination polynomial toolkit.

#include "tdp/analysis.hpp"
#include "tdp/canonical.hpp"
#include "tdp/closed_form.hpp"
#include "tdp/connectivity.hpp"
#include "tdp/count.hpp"
#include "tdp/errors.hpp"
#include "tdp/families.hpp"
#include "tdp/generate.hpp"
#include "tdp/graph.hpp"
#include "tdp/graph6.hpp"
#include "tdp/poly.hpp"
#include "tdp/predicates.hpp"
#include "tdp/recurrence.hpp"
#include "tdp/roots.hpp"
#include "tdp/transitive.hpp"
#include "tdp/vertex_set.hpp"

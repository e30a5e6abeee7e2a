#pragma once

#include "localchrom/canonical.hpp"
#include "localchrom/colouring.hpp"
#include "localchrom/deadline.hpp"
#include "localchrom/decomposition.hpp"
#include "localchrom/extremal_search.hpp"
#include "localchrom/families.hpp"
#include "localchrom/graph.hpp"
#include "localchrom/hom_solver.hpp"
#include "localchrom/io.hpp"
#include "localchrom/local_structure.hpp"
#include "localchrom/lp.hpp"
#include "localchrom/rational.hpp"
#include "localchrom/vertex_set.hpp"
#include "localchrom/weighting.hpp"

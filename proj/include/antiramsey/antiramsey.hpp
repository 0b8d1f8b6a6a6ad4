#pragma once

#include "bounds.hpp"
#include "coloring.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "rainbow.hpp"
#include "rational.hpp"
#include "search.hpp"

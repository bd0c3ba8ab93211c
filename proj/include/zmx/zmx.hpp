#pragma once

#include "zmx/adversary.hpp"
#include "zmx/algorithms.hpp"
#include "zmx/analysis.hpp"
#include "zmx/corpus.hpp"
#include "zmx/enumerate.hpp"
#include "zmx/generators.hpp"
#include "zmx/graph.hpp"
#include "zmx/graph_io.hpp"
#include "zmx/invariants.hpp"
#include "zmx/model.hpp"
#include "zmx/synthesis.hpp"

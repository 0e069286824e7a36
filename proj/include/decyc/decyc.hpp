#pragma once

#include "decyc/canonical.hpp"
#include "decyc/certificate.hpp"
#include "decyc/connectivity.hpp"
#include "decyc/decomposition.hpp"
#include "decyc/decycling.hpp"
#include "decyc/error.hpp"
#include "decyc/experiment.hpp"
#include "decyc/generators.hpp"
#include "decyc/genus.hpp"
#include "decyc/graph.hpp"
#include "decyc/id_set.hpp"
#include "decyc/io.hpp"
#include "decyc/partition.hpp"
#include "decyc/spanning_trees.hpp"
#include "decyc/xuong.hpp"

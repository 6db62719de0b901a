#pragma once

#include "edge.hpp"
#include "highprec.hpp"
#include "identities.hpp"
#include "kernel.hpp"
#include "linalg.hpp"
#include "measure.hpp"
#include "montecarlo.hpp"
#include "partition.hpp"
#include "random.hpp"
#include "rsk.hpp"
#include "scalar.hpp"
#include "series.hpp"
#include "stats.hpp"
#include "symfunc.hpp"
#include "tableau.hpp"

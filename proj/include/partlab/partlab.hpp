#pragma once

#include "partlab/enumerate.hpp"
#include "partlab/fillings.hpp"
#include "partlab/generating_functions.hpp"
#include "partlab/numeric.hpp"
#include "partlab/partition.hpp"
#include "partlab/paths.hpp"
#include "partlab/pattern.hpp"
#include "partlab/recurrences.hpp"
#include "partlab/series.hpp"
#include "partlab/statistics.hpp"
#include "partlab/sweep.hpp"
#include "partlab/trees.hpp"
#include "partlab/verify.hpp"

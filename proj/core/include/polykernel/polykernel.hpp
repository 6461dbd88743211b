#pragma once

#include "polykernel/analysis.hpp"
#include "polykernel/errors.hpp"
#include "polykernel/index_set.hpp"
#include "polykernel/kernel.hpp"
#include "polykernel/native_space.hpp"
#include "polykernel/point_set.hpp"
#include "polykernel/solvers.hpp"
#include "polykernel/unisolvency.hpp"
#include "polykernel/version.hpp"

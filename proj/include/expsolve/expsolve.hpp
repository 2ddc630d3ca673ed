#pragma once

#include "expsolve/classify.hpp"
#include "expsolve/errors.hpp"
#include "expsolve/exact.hpp"
#include "expsolve/expr.hpp"
#include "expsolve/precision.hpp"
#include "expsolve/rational.hpp"
#include "expsolve/real.hpp"
#include "expsolve/roots.hpp"
#include "expsolve/rules.hpp"
#include "expsolve/solvers.hpp"
#include "expsolve/tower.hpp"

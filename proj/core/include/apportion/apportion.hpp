#pragma once

#include "apportion/allocation.hpp"
#include "apportion/errors.hpp"
#include "apportion/methods.hpp"
#include "apportion/oracle.hpp"
#include "apportion/rational.hpp"
#include "apportion/seeded.hpp"
#include "apportion/tally.hpp"
#include "apportion/tie_policy.hpp"

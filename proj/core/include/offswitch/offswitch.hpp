#pragma once

#include "offswitch/beliefs.hpp"
#include "offswitch/designer.hpp"
#include "offswitch/errors.hpp"
#include "offswitch/incentives.hpp"
#include "offswitch/policies.hpp"
#include "offswitch/quadrature.hpp"
#include "offswitch/sweeps.hpp"

#pragma once

#include "weakint/analytics.hpp"
#include "weakint/errors.hpp"
#include "weakint/estimation.hpp"
#include "weakint/model.hpp"
#include "weakint/oam.hpp"
#include "weakint/quadrature.hpp"

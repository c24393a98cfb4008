#pragma once

#include "gaussian_rational.hpp"
#include "phase_scalar.hpp"
#include "twisted_algebra.hpp"
#include "relations.hpp"
#include "hopf_maps.hpp"
#include "serialization.hpp"
#include "expression.hpp"
#include "harness.hpp"

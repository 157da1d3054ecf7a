#pragma once

#include "core.hpp"
#include "semigroup.hpp"
#include "polyring.hpp"
#include "linalg.hpp"
#include "canonical_ideal.hpp"
#include "syzygy.hpp"
#include "deformation.hpp"
#include "tangent.hpp"
#include "moduli_solver.hpp"
#include "verify.hpp"
#include "pipeline.hpp"

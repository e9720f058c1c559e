#pragma once

// Umbrella header: exact recurrence data, operator relations, dimension
// classification and Lie closure for generalized oscillator algebras built
// from orthogonal-polynomial recurrence coefficients.

#include "oscalg/classify.hpp"
#include "oscalg/closure.hpp"
#include "oscalg/epseq.hpp"
#include "oscalg/error.hpp"
#include "oscalg/expr.hpp"
#include "oscalg/json_io.hpp"
#include "oscalg/linalg.hpp"
#include "oscalg/moments.hpp"
#include "oscalg/oscillator.hpp"
#include "oscalg/polynomial.hpp"
#include "oscalg/rational.hpp"
#include "oscalg/recurrence.hpp"
#include "oscalg/shift_op.hpp"

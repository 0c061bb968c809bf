#pragma once

#include "orbitstrata/errors.hpp"
#include "orbitstrata/algebra/scalar.hpp"
#include "orbitstrata/algebra/matrix2.hpp"
#include "orbitstrata/algebra/lie.hpp"
#include "orbitstrata/algebra/sample.hpp"
#include "orbitstrata/algebra/json_io.hpp"
#include "orbitstrata/lattice/graph.hpp"
#include "orbitstrata/lattice/gauge.hpp"
#include "orbitstrata/lattice/phase.hpp"
#include "orbitstrata/invariants/invariants.hpp"
#include "orbitstrata/strata/strata.hpp"
#include "orbitstrata/tracepoly/monomial.hpp"
#include "orbitstrata/tracepoly/polynomial.hpp"
#include "orbitstrata/tracepoly/text.hpp"
#include "orbitstrata/tracepoly/adapted.hpp"
#include "orbitstrata/tracepoly/sigma.hpp"
#include "orbitstrata/tracepoly/radical.hpp"
#include "orbitstrata/tracepoly/eval.hpp"

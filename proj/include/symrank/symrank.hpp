#pragma once

#include "symrank/error.hpp"
#include "symrank/exactfield/quadext.hpp"
#include "symrank/exactfield/rational.hpp"
#include "symrank/exactfield/scalar.hpp"
#include "symrank/exactfield/squarefree.hpp"
#include "symrank/linalg/csv.hpp"
#include "symrank/linalg/matrix.hpp"
#include "symrank/linalg/rank.hpp"
#include "symrank/ensemble/bigraph.hpp"
#include "symrank/ensemble/ensemble.hpp"
#include "symrank/ensemble/pair_function.hpp"
#include "symrank/ensemble/tournament.hpp"
#include "symrank/spectra/spectra.hpp"
#include "symrank/designs/design.hpp"
#include "symrank/designs/hadamard.hpp"
#include "symrank/families/clique.hpp"
#include "symrank/families/constructions.hpp"
#include "symrank/families/search.hpp"
#include "symrank/families/set_family.hpp"

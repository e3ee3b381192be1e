#pragma once

#include "qhpp/builtin_scenarios.hpp"
#include "qhpp/covers.hpp"
#include "qhpp/cyclotomic.hpp"
#include "qhpp/errors.hpp"
#include "qhpp/kodaira.hpp"
#include "qhpp/ledger.hpp"
#include "qhpp/lefschetz.hpp"
#include "qhpp/matrix.hpp"
#include "qhpp/rational.hpp"
#include "qhpp/reference_tables.hpp"
#include "qhpp/scenario.hpp"
#include "qhpp/singularity.hpp"

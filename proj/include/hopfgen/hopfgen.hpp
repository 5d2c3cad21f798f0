#pragma once

#include "hopfgen/acceptance.hpp"
#include "hopfgen/arith.hpp"
#include "hopfgen/cocycle.hpp"
#include "hopfgen/errors.hpp"
#include "hopfgen/generic_base.hpp"
#include "hopfgen/group.hpp"
#include "hopfgen/hopf.hpp"
#include "hopfgen/identities.hpp"
#include "hopfgen/intmat.hpp"
#include "hopfgen/json_io.hpp"
#include "hopfgen/lattice.hpp"
#include "hopfgen/linalg.hpp"
#include "hopfgen/report.hpp"
#include "hopfgen/tring.hpp"

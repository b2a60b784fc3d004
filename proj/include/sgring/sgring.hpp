#pragma once

#include "sgring/error.hpp"
#include "sgring/arith.hpp"
#include "sgring/lattice.hpp"
#include "sgring/semigroup.hpp"
#include "sgring/apery.hpp"
#include "sgring/series.hpp"
#include "sgring/canonical.hpp"
#include "sgring/cyclic_quotient.hpp"
#include "sgring/report.hpp"

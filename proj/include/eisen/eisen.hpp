#pragma once

#include "eisen/core.hpp"
#include "eisen/divisors.hpp"
#include "eisen/errors.hpp"
#include "eisen/literal.hpp"
#include "eisen/mersenne.hpp"
#include "eisen/perfect.hpp"
#include "eisen/primes.hpp"
#include "eisen/rational.hpp"

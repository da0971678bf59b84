#pragma once

// Umbrella header.

#include "qhankel/bipoly.hpp"
#include "qhankel/error.hpp"
#include "qhankel/families.hpp"
#include "qhankel/gcd.hpp"
#include "qhankel/hankel.hpp"
#include "qhankel/jfraction.hpp"
#include "qhankel/motzkin.hpp"
#include "qhankel/operators.hpp"
#include "qhankel/qkernel.hpp"
#include "qhankel/ratfunc.hpp"
#include "qhankel/substitute.hpp"
#include "qhankel/verify.hpp"

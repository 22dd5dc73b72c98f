#pragma once

#include "puiseux/cyclotomic.hpp"
#include "puiseux/error.hpp"
#include "puiseux/factor.hpp"
#include "puiseux/factor_engine.hpp"
#include "puiseux/fp_poly.hpp"
#include "puiseux/monoid.hpp"
#include "puiseux/parser.hpp"
#include "puiseux/prime_field.hpp"
#include "puiseux/puiseux_poly.hpp"
#include "puiseux/qpoly.hpp"
#include "puiseux/rat.hpp"

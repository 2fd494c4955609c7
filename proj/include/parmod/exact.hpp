#pragma once

#include "parmod/exact/errors.hpp"
#include "parmod/exact/json_io.hpp"
#include "parmod/exact/linalg.hpp"
#include "parmod/exact/poly.hpp"
#include "parmod/exact/ratfunc.hpp"
#include "parmod/exact/resultant.hpp"
#include "parmod/exact/roots.hpp"
#include "parmod/exact/scalar.hpp"

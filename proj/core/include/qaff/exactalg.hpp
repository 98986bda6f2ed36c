#pragma once

#include "qaff/matrix.hpp"
#include "qaff/parse.hpp"
#include "qaff/polynomial.hpp"
#include "qaff/rational_function.hpp"
#include "qaff/sring.hpp"

#pragma once

#include "knotshadow/error.hpp"
#include "knotshadow/algebra.hpp"
#include "knotshadow/diagram.hpp"
#include "knotshadow/families.hpp"
#include "knotshadow/formulas.hpp"
#include "knotshadow/tables.hpp"
#include "knotshadow/expr.hpp"

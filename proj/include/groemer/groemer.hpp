#ifndef GROEMER_GROEMER_HPP
#define GROEMER_GROEMER_HPP

#include "groemer/arith.hpp"
#include "groemer/params.hpp"
#include "groemer/criteria.hpp"
#include "groemer/search.hpp"
#include "groemer/geometry.hpp"
#include "groemer/report.hpp"

#endif

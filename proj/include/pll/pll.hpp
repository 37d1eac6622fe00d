#pragma once

#include "pll/caplimits.hpp"
#include "pll/csv.hpp"
#include "pll/detstats.hpp"
#include "pll/errors.hpp"
#include "pll/linkbudget.hpp"
#include "pll/mcoracle.hpp"
#include "pll/optimize.hpp"
#include "pll/ppmcore.hpp"
#include "pll/sweep.hpp"
#include "pll/table2.hpp"

namespace pll {
inline constexpr const char *kVersion = "0.1.0";
}

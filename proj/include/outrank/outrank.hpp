#pragma once

// Umbrella header for the ranking engine. The HTTP layer lives separately in
// outrank/service.hpp so that library users do not pull in httplib.

#include "outrank/basketball.hpp"
#include "outrank/config.hpp"
#include "outrank/criteria.hpp"
#include "outrank/csv.hpp"
#include "outrank/error.hpp"
#include "outrank/json_io.hpp"
#include "outrank/outranking.hpp"
#include "outrank/pipeline.hpp"
#include "outrank/preference.hpp"
#include "outrank/promethee.hpp"
#include "outrank/stats.hpp"
#include "outrank/table.hpp"
#include "outrank/tuning.hpp"

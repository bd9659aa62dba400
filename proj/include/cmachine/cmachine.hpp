#pragma once

#include "cmachine/count_series.hpp"
#include "cmachine/engines/registry.hpp"
#include "cmachine/enumerate.hpp"
#include "cmachine/io.hpp"
#include "cmachine/machine.hpp"
#include "cmachine/permutation.hpp"
#include "cmachine/series/growth.hpp"
#include "cmachine/series/guess.hpp"
#include "cmachine/series/multi_series.hpp"
#include "cmachine/series/rational_series.hpp"
#include "cmachine/series/systems.hpp"

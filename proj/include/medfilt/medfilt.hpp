#pragma once

#include "medfilt/baselines.hpp"
#include "medfilt/bench.hpp"
#include "medfilt/block.hpp"
#include "medfilt/core.hpp"
#include "medfilt/debug.hpp"
#include "medfilt/filter.hpp"
#include "medfilt/generators.hpp"
#include "medfilt/io.hpp"
#include "medfilt/verify.hpp"

#pragma once

#include "robotgames/bigint.hpp"
#include "robotgames/models.hpp"
#include "robotgames/reductions.hpp"
#include "robotgames/engine.hpp"
#include "robotgames/strategies.hpp"
#include "robotgames/solver.hpp"
#include "robotgames/verify.hpp"
#include "robotgames/io.hpp"

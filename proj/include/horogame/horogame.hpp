#pragma once

#include "horogame/analysis.hpp"
#include "horogame/ba.hpp"
#include "horogame/ball.hpp"
#include "horogame/cf.hpp"
#include "horogame/config.hpp"
#include "horogame/family.hpp"
#include "horogame/game.hpp"
#include "horogame/halfplane.hpp"
#include "horogame/horoball.hpp"
#include "horogame/perfectness.hpp"
#include "horogame/rational.hpp"
#include "horogame/records.hpp"
#include "horogame/rng.hpp"
#include "horogame/spaces.hpp"
#include "horogame/strategies.hpp"

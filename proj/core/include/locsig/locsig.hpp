#pragma once

#include "locsig/catalog.hpp"
#include "locsig/fibration.hpp"
#include "locsig/germ.hpp"
#include "locsig/picard.hpp"
#include "locsig/rational.hpp"
#include "locsig/scenario.hpp"
#include "locsig/warnings.hpp"

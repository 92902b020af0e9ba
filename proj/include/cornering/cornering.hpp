#pragma once

#include "cornering/base.hpp"
#include "cornering/comb.hpp"
#include "cornering/lenses.hpp"
#include "cornering/optics.hpp"
#include "cornering/sliding_equivalence.hpp"

#pragma once

#include "cornering/oracle/enumerate.hpp"
#include "cornering/oracle/free_sliding.hpp"
#include "cornering/oracle/interchange.hpp"
#include "cornering/oracle/sliding.hpp"
#include "cornering/oracle/verdict.hpp"

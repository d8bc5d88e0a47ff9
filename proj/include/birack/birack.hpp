#pragma once

#include "core.hpp"
#include "groups.hpp"
#include "racks.hpp"
#include "solution.hpp"
#include "twisting.hpp"
#include "braces.hpp"
#include "enveloping.hpp"
#include "coloring.hpp"
#include "search.hpp"
#include "io.hpp"

#pragma once

// Convenience umbrella: the whole library.

#include "basics.hpp"
#include "drawing.hpp"
#include "flips.hpp"
#include "generate.hpp"
#include "json_io.hpp"
#include "morph.hpp"
#include "recognize.hpp"
#include "svg.hpp"
#include "triangulation.hpp"
#include "verify.hpp"
#include "wood.hpp"

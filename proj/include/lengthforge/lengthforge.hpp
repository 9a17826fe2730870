#pragma once

// Realization of prescribed sets of factorization lengths in numerical
// monoids, with independent verification by exhaustive enumeration.

#include "arith.hpp"
#include "cli.hpp"
#include "construct.hpp"
#include "engine.hpp"
#include "json_io.hpp"
#include "monoid.hpp"
#include "verify.hpp"

#pragma once

#include "arith.hpp"
#include "error.hpp"
#include "hilbert.hpp"
#include "ideals.hpp"
#include "io.hpp"
#include "metrics.hpp"
#include "notation.hpp"
#include "oracle.hpp"
#include "orbits.hpp"
#include "structures.hpp"

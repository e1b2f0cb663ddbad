#pragma once

#include "mincode/bitvector.hpp"
#include "mincode/boolfn.hpp"
#include "mincode/code.hpp"
#include "mincode/errors.hpp"
#include "mincode/gf2matrix.hpp"
#include "mincode/gf2t.hpp"
#include "mincode/io.hpp"
#include "mincode/minimal.hpp"
#include "mincode/parallel.hpp"
#include "mincode/random.hpp"
#include "mincode/spread.hpp"

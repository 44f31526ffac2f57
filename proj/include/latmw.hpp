#pragma once

// Umbrella header for the latmw library.

#include "latmw/common.hpp"
#include "latmw/cyclotomic.hpp"
#include "latmw/finite_field.hpp"
#include "latmw/group.hpp"
#include "latmw/io.hpp"
#include "latmw/lattice.hpp"
#include "latmw/macwilliams.hpp"
#include "latmw/matrix_enum.hpp"
#include "latmw/support.hpp"

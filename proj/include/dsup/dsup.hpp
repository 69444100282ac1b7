// Convenience umbrella for the whole library.

#pragma once

#include "dsup/basis.hpp"
#include "dsup/bounds.hpp"
#include "dsup/cli.hpp"
#include "dsup/matrix_io.hpp"
#include "dsup/pnorm.hpp"
#include "dsup/search.hpp"
#include "dsup/support.hpp"
#include "dsup/types.hpp"

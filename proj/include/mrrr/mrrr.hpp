#pragma once

#include "mrrr/config.hpp"
#include "mrrr/eigenvector.hpp"
#include "mrrr/generators.hpp"
#include "mrrr/matrix_io.hpp"
#include "mrrr/metrics.hpp"
#include "mrrr/profile.hpp"
#include "mrrr/representation.hpp"
#include "mrrr/rrr.hpp"
#include "mrrr/solver.hpp"
#include "mrrr/sturm.hpp"
#include "mrrr/task_pool.hpp"
#include "mrrr/tridiagonal.hpp"

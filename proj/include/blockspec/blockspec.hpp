#pragma once

// Umbrella header: block-structured Hermitian random matrices, their
// reductions to independent families, limiting spectral laws, and the
// free-probability moment engine.

#include "blockspec/errors.hpp"
#include "blockspec/free_moments.hpp"
#include "blockspec/hermitian.hpp"
#include "blockspec/io.hpp"
#include "blockspec/laws.hpp"
#include "blockspec/linalg.hpp"
#include "blockspec/nc_pairing.hpp"
#include "blockspec/parallel.hpp"
#include "blockspec/reduction.hpp"
#include "blockspec/rng.hpp"
#include "blockspec/simulate.hpp"
#include "blockspec/spectral_stats.hpp"
#include "blockspec/structure.hpp"
#include "blockspec/structure_io.hpp"
#include "blockspec/types.hpp"
#include "blockspec/wigner.hpp"

#pragma once

#include "blockspec/rng.hpp"
#include "blockspec/spectral_stats.hpp"
#include "blockspec/structure.hpp"
#include "blockspec/wigner.hpp"

namespace blockspec {

// An ensemble experiment: draw `replicates` independent block families,
// assemble each under `structure`, and pool the spectra.  Replicate r runs
// on Seed{seed.root, seed.stream + r} and block l of a replicate on its
// substream l, so results are reproducible entry for entry regardless of
// thread count.
struct SimulationConfig {
  BlockStructure structure;
  Index n = 200;
  int replicates = 100;
  Seed seed;
  int threads = 1;
  EntryLaw entry_law = EntryLaw::kGaussian;
  DiagonalLaw diagonal_law = DiagonalLaw::kGaussian;
};

SpectralSample simulate_esd(const SimulationConfig& config);

// Same experiment for the entry-dependent kn x kn matrix that repeats
// floor(k/2)+1 scalar Wigner matrices in a circulant tile pattern.
SpectralSample simulate_dependent_esd(int k, Index n, int replicates, Seed seed,
                                      int threads);

}  // namespace blockspec

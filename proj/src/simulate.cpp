#include "blockspec/simulate.hpp"

#include "blockspec/parallel.hpp"

namespace blockspec {

namespace {

void check_run(Index n, int replicates, int threads) {
  if (n < 1) throw ConfigError("simulate: n must be >= 1");
  if (replicates < 1) throw ConfigError("simulate: replicates must be >= 1");
  if (threads < 1) throw ConfigError("simulate: threads must be >= 1");
}

}  // namespace

SpectralSample simulate_esd(const SimulationConfig& config) {
  check_run(config.n, config.replicates, config.threads);
  const WignerSpec block_spec{config.n, 1.0, Flavor::kReal, config.diagonal_law,
                              config.entry_law};
  const int symbols = config.structure.alphabet_size();

  std::vector<Spectrum> spectra(static_cast<std::size_t>(config.replicates));
  parallel_for(config.replicates, config.threads, [&](int r) {
    const Seed rep_seed{config.seed.root,
                        config.seed.stream + static_cast<std::uint64_t>(r)};
    const auto blocks = sample_wigner_family<double>(block_spec, rep_seed, symbols);
    spectra[static_cast<std::size_t>(r)] =
        eigenvalues(assemble(config.structure, blocks));
  });
  return pool_spectra(spectra);
}

SpectralSample simulate_dependent_esd(int k, Index n, int replicates, Seed seed,
                                      int threads) {
  if (k < 1) throw ConfigError("simulate: k must be >= 1");
  check_run(n, replicates, threads);

  std::vector<Spectrum> spectra(static_cast<std::size_t>(replicates));
  parallel_for(replicates, threads, [&](int r) {
    const Seed rep_seed{seed.root, seed.stream + static_cast<std::uint64_t>(r)};
    spectra[static_cast<std::size_t>(r)] =
        eigenvalues(build_dependent_wigner(k, n, rep_seed).matrix);
  });
  return pool_spectra(spectra);
}

}  // namespace blockspec

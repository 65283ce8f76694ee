// blockspec: Monte Carlo spectra of Hermitian block-matrix ensembles,
// exact limiting moments via non-crossing pair counts, and closed-form
// limiting densities for comparison and plotting.
//
// Subcommands:
//   simulate   pool eigenvalues across replicates; histogram + summary
//   moments    exact limiting spectral moments of a block structure
//   density    pdf/cdf grid of the closed-form limiting law
//   reduce     block-circulant reduction check: spectra + entry variances
//   dependent  entry-dependent matrix: similarity checks, then a spectrum
//
// Exit codes: 0 success, 2 configuration error, 3 numerical-contract
// violation, 4 work budget exceeded.
//
// Data artifacts are CSV (default) or JSON via --format; every run prints
// a versioned JSON summary to stdout and, when --out is given, writes it
// next to the artifact as <stem>.summary.json.  Output bytes do not depend
// on --threads.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "blockspec/blockspec.hpp"

namespace {

using nlohmann::json;
using namespace blockspec;

struct RunConfig {
  std::string structure = "circulant";
  std::string structure_file;
  int k = 2;
  Index n = 200;
  int reps = 100;
  std::uint64_t seed = 42;
  int bins = 60;
  int max_order = 8;
  int grid = 512;
  std::string out;
  std::string format = "csv";
  int threads = 0;  // 0 = all available cores
};

int resolve_threads(const RunConfig& c) {
  if (c.threads > 0) return c.threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::uint64_t work_budget() {
  const char* env = std::getenv("BLOCKSPEC_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultWorkBudget;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*env == '-' || end == env || *end != '\0')
    throw ConfigError("BLOCKSPEC_BUDGET must be a nonnegative integer");
  return v;
}

bool is_builtin(const RunConfig& c) { return c.structure_file.empty(); }

BlockStructure resolve_structure(const RunConfig& c) {
  if (!is_builtin(c)) return load_structure_file(c.structure_file);
  if (c.structure == "circulant") return circulant_structure(c.k);
  if (c.structure == "toeplitz") return toeplitz_structure(c.k);
  if (c.structure == "wigner-full") return full_wigner_structure(c.k);
  // The dependent ensemble shares the circulant's limiting moments.
  if (c.structure == "dependent-wigner") return circulant_structure(c.k);
  throw ConfigError("unknown structure '" + c.structure +
                    "' (expected circulant, toeplitz, wigner-full, or "
                    "dependent-wigner)");
}

// Closed-form limiting law, where one exists for the builtin.
std::optional<SemicircleMixture> closed_form_limit(const RunConfig& c) {
  if (!is_builtin(c)) return std::nullopt;
  if (c.structure == "circulant" || c.structure == "dependent-wigner")
    return circulant_limit(c.k);
  if (c.structure == "wigner-full")
    return semicircle_law(0.0, static_cast<double>(c.k));
  return std::nullopt;
}

json structure_source_json(const RunConfig& c) {
  if (!is_builtin(c)) return {{"source", "file"}, {"path", c.structure_file}};
  return {{"source", "builtin"}, {"name", c.structure}, {"k", c.k}};
}

json seed_json(const RunConfig& c) {
  return {{"root", c.seed}, {"stream", 0}};
}

json law_json(const SemicircleMixture& law) {
  json components = json::array();
  for (const auto& part : law.components())
    components.push_back({{"weight", part.weight},
                          {"center", part.law.center},
                          {"variance", part.law.variance}});
  return {{"components", components}, {"support_radius", law.support_radius()}};
}

json summary_base(const std::string& command, json config) {
  return {{"schema", "blockspec.summary.v1"},
          {"command", command},
          {"config", std::move(config)},
          {"results", json::object()}};
}

// Prints the summary to stdout; with --out also writes <stem>.summary.json.
void emit_summary(const RunConfig& c, const json& summary) {
  std::cout << summary.dump(2) << '\n';
  if (c.out.empty()) return;
  std::filesystem::path p(c.out);
  p.replace_extension();
  p += ".summary.json";
  write_text_file(p.string(), summary.dump(2) + "\n");
}

void emit_artifact(const RunConfig& c, const std::string& csv, const json& rows) {
  if (c.out.empty()) return;
  if (c.format == "csv")
    write_text_file(c.out, csv);
  else
    write_text_file(c.out, rows.dump(2) + "\n");
}

json histogram_rows(const Histogram& h) {
  json rows = json::array();
  for (int b = 0; b < h.bins(); ++b)
    rows.push_back({{"bin_left", h.edges[static_cast<std::size_t>(b)]},
                    {"bin_right", h.edges[static_cast<std::size_t>(b) + 1]},
                    {"density", h.densities[static_cast<std::size_t>(b)]}});
  return rows;
}

std::string histogram_csv(const Histogram& h) {
  std::ostringstream out;
  write_histogram_csv(out, h);
  return out.str();
}

json sample_results(const SpectralSample& sample,
                    const std::optional<SemicircleMixture>& law) {
  json results{{"eigenvalue_count", sample.size()},
               {"min", sample.min()},
               {"max", sample.max()},
               {"empirical_moments",
                {{"m2", empirical_moment(sample, 2)},
                 {"m4", empirical_moment(sample, 4)},
                 {"m6", empirical_moment(sample, 6)}}}};
  if (law) {
    results["ks_distance"] =
        ks_distance(sample, [&](double x) { return mixture_cdf(*law, x); });
    results["limit_law"] = law_json(*law);
  }
  return results;
}

json simulate_config_json(const RunConfig& c) {
  return {{"structure", structure_source_json(c)}, {"n", c.n},
          {"replicates", c.reps},                  {"seed", seed_json(c)},
          {"bins", c.bins},                        {"out", c.out},
          {"format", c.format}};
}

int cmd_simulate(const RunConfig& c) {
  const int threads = resolve_threads(c);
  SpectralSample sample =
      is_builtin(c) && c.structure == "dependent-wigner"
          ? simulate_dependent_esd(c.k, c.n, c.reps, Seed{c.seed, 0}, threads)
          : simulate_esd({resolve_structure(c), c.n, c.reps, Seed{c.seed, 0},
                          threads, EntryLaw::kGaussian, DiagonalLaw::kGaussian});
  const Histogram h = histogram(sample, c.bins);

  json summary = summary_base("simulate", simulate_config_json(c));
  summary["results"] = sample_results(sample, closed_form_limit(c));
  emit_artifact(c, histogram_csv(h), histogram_rows(h));
  emit_summary(c, summary);
  return 0;
}

int cmd_moments(const RunConfig& c) {
  const BlockStructure structure = resolve_structure(c);
  const MomentTable table =
      limiting_moment_table(structure, c.max_order, work_budget());
  const std::optional<SemicircleMixture> law = closed_form_limit(c);

  std::ostringstream csv;
  csv << (law ? "order,moment,reference,difference\n" : "order,moment\n");
  json rows = json::array();
  double max_gap = 0.0;
  for (int order = 0; order <= table.max_order(); ++order) {
    const double m = table.moment(order);
    json row{{"order", order}, {"moment", m}};
    csv << order << ',' << format_double(m);
    if (law) {
      const double reference = mixture_moment(*law, order);
      const double difference = m - reference;
      max_gap = std::max(max_gap, std::abs(difference));
      row["reference"] = reference;
      row["difference"] = difference;
      csv << ',' << format_double(reference) << ',' << format_double(difference);
    }
    csv << '\n';
    rows.push_back(std::move(row));
  }

  json summary = summary_base(
      "moments", {{"structure", structure_source_json(c)},
                  {"max_order", c.max_order},
                  {"out", c.out},
                  {"format", c.format}});
  summary["results"] = {{"structure_id", table.structure_id}, {"moments", rows}};
  if (law) {
    summary["results"]["limit_law"] = law_json(*law);
    summary["results"]["max_reference_gap"] = max_gap;
  }
  emit_artifact(c, csv.str(), rows);
  emit_summary(c, summary);
  if (law && max_gap > 1e-9)
    throw ContractError("moments: combinatorial and closed-form moments "
                        "disagree by " +
                        format_double(max_gap));
  return 0;
}

int cmd_density(const RunConfig& c) {
  const std::optional<SemicircleMixture> law = closed_form_limit(c);
  if (!law)
    throw ConfigError("density: no closed-form limiting law for structure '" +
                      (is_builtin(c) ? c.structure : c.structure_file) + "'");

  const double halfwidth = law->support_radius() * 1.05;
  std::vector<double> xs(static_cast<std::size_t>(c.grid));
  std::vector<double> pdf(xs.size()), cdf(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    xs[i] = -halfwidth +
            2.0 * halfwidth * static_cast<double>(i) /
                static_cast<double>(c.grid - 1);
    pdf[i] = mixture_pdf(*law, xs[i]);
    cdf[i] = mixture_cdf(*law, xs[i]);
  }

  std::ostringstream csv;
  write_density_csv(csv, xs, pdf, cdf);
  json rows = json::array();
  for (std::size_t i = 0; i < xs.size(); ++i)
    rows.push_back({{"x", xs[i]}, {"pdf", pdf[i]}, {"cdf", cdf[i]}});

  json summary = summary_base(
      "density", {{"structure", structure_source_json(c)},
                  {"grid", c.grid},
                  {"out", c.out},
                  {"format", c.format}});
  summary["results"] = {{"limit_law", law_json(*law)},
                        {"grid_halfwidth", halfwidth},
                        {"cdf_last", cdf.back()}};
  emit_artifact(c, csv.str(), rows);
  emit_summary(c, summary);
  return 0;
}

int cmd_reduce(const RunConfig& c) {
  const auto blocks = sample_dependent_scalar_blocks(c.k, c.n, Seed{c.seed, 0});
  const double discrepancy = verify_reduction(blocks, c.k);
  const std::vector<double> sampled =
      reduced_variance_check(c.k, c.n, c.reps, Seed{c.seed, 0});

  std::ostringstream csv;
  csv << "member,sample_variance,exact_variance\n";
  json rows = json::array();
  double variance_gap = 0.0;
  for (int j = 1; j <= c.k; ++j) {
    const double sample = sampled[static_cast<std::size_t>(j - 1)];
    const double exact = circulant_component_variance(c.k, j);
    variance_gap = std::max(variance_gap, std::abs(sample - exact));
    csv << j << ',' << format_double(sample) << ',' << format_double(exact)
        << '\n';
    rows.push_back(
        {{"member", j}, {"sample_variance", sample}, {"exact_variance", exact}});
  }

  json summary = summary_base(
      "reduce", {{"k", c.k},
                 {"n", c.n},
                 {"replicates", c.reps},
                 {"seed", seed_json(c)},
                 {"out", c.out},
                 {"format", c.format}});
  summary["results"] = {{"spectrum_discrepancy", discrepancy},
                        {"member_variances", rows},
                        {"max_variance_gap", variance_gap}};
  emit_artifact(c, csv.str(), rows);
  emit_summary(c, summary);
  if (discrepancy > 1e-9)
    throw ContractError("reduce: spectrum discrepancy " +
                        format_double(discrepancy) + " exceeds 1e-9");
  return 0;
}

int cmd_dependent(const RunConfig& c) {
  // One exact draw: the permutation similarity must reproduce the block
  // assembly entry for entry, and the spectra must coincide.
  const DependentWignerDraw draw = build_dependent_wigner(c.k, c.n, Seed{c.seed, 0});
  const RealMatrix conjugated =
      commutation_conjugate(draw.matrix.matrix(), c.k, c.n);
  const RealMatrix assembled =
      assemble(circulant_structure(c.k), draw.blocks).matrix();
  const double entry_gap = (conjugated - assembled).cwiseAbs().maxCoeff();

  const Spectrum whole = eigenvalues(draw.matrix);
  const Spectrum parts = eigenvalues(Hermitian<double>::assume(assembled));
  double spectrum_gap = 0.0;
  for (Index i = 0; i < whole.size(); ++i)
    spectrum_gap =
        std::max(spectrum_gap, std::abs(whole.values(i) - parts.values(i)));

  const int threads = resolve_threads(c);
  const SpectralSample sample =
      simulate_dependent_esd(c.k, c.n, c.reps, Seed{c.seed, 0}, threads);
  const Histogram h = histogram(sample, c.bins);

  json summary = summary_base(
      "dependent", {{"k", c.k},
                    {"n", c.n},
                    {"replicates", c.reps},
                    {"seed", seed_json(c)},
                    {"bins", c.bins},
                    {"out", c.out},
                    {"format", c.format}});
  summary["results"] = sample_results(sample, circulant_limit(c.k));
  summary["results"]["entry_gap"] = entry_gap;
  summary["results"]["spectrum_gap"] = spectrum_gap;
  emit_artifact(c, histogram_csv(h), histogram_rows(h));
  emit_summary(c, summary);
  if (entry_gap > 1e-12)
    throw ContractError("dependent: similarity check failed, entry gap " +
                        format_double(entry_gap));
  if (spectrum_gap > 1e-9)
    throw ContractError("dependent: spectra disagree by " +
                        format_double(spectrum_gap));
  return 0;
}

void add_structure_flags(CLI::App& cmd, RunConfig& c) {
  const auto structure = cmd.add_option(
      "--structure", c.structure,
      "Builtin structure: circulant, toeplitz, wigner-full, dependent-wigner");
  const auto file = cmd.add_option("--structure-file", c.structure_file,
                                   "Load the block structure from a JSON file");
  structure->excludes(file);
  cmd.add_option("--k", c.k, "Block grid size for builtin structures")
      ->check(CLI::PositiveNumber);
}

void add_output_flags(CLI::App& cmd, RunConfig& c) {
  cmd.add_option("--out", c.out, "Data artifact path (summary goes beside it)");
  cmd.add_option("--format", c.format, "Artifact format")
      ->check(CLI::IsMember({"csv", "json"}));
}

void add_sampling_flags(CLI::App& cmd, RunConfig& c) {
  cmd.add_option("--n", c.n, "Block dimension")->check(CLI::PositiveNumber);
  cmd.add_option("--reps", c.reps, "Number of replicates")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--seed", c.seed, "Root seed for the replicate streams");
  cmd.add_option("--threads", c.threads,
                 "Worker threads (default: all cores; never affects output)")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Spectra of random Hermitian block matrices: simulation, exact "
      "limiting moments, and closed-form limiting laws"};
  app.require_subcommand(1);
  RunConfig c;

  CLI::App* simulate = app.add_subcommand(
      "simulate", "Pool eigenvalues across replicates into a histogram");
  add_structure_flags(*simulate, c);
  add_sampling_flags(*simulate, c);
  simulate->add_option("--bins", c.bins, "Histogram bins")
      ->check(CLI::PositiveNumber);
  add_output_flags(*simulate, c);

  CLI::App* moments = app.add_subcommand(
      "moments", "Exact limiting spectral moments of a block structure");
  add_structure_flags(*moments, c);
  moments->add_option("--max-order", c.max_order, "Highest moment order")
      ->check(CLI::NonNegativeNumber);
  add_output_flags(*moments, c);

  CLI::App* density = app.add_subcommand(
      "density", "Closed-form limiting pdf/cdf on a grid");
  add_structure_flags(*density, c);
  density->add_option("--grid", c.grid, "Number of grid points")
      ->check(CLI::Range(2, 1 << 20));
  add_output_flags(*density, c);

  CLI::App* reduce = app.add_subcommand(
      "reduce", "Check the block-circulant reduction: spectra and variances");
  reduce->add_option("--k", c.k, "Circulant size")->check(CLI::PositiveNumber);
  add_sampling_flags(*reduce, c);
  add_output_flags(*reduce, c);

  CLI::App* dependent = app.add_subcommand(
      "dependent", "Entry-dependent matrix: similarity checks and spectrum");
  dependent->add_option("--k", c.k, "Circulant size")->check(CLI::PositiveNumber);
  add_sampling_flags(*dependent, c);
  dependent->add_option("--bins", c.bins, "Histogram bins")
      ->check(CLI::PositiveNumber);
  add_output_flags(*dependent, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (simulate->parsed()) return cmd_simulate(c);
    if (moments->parsed()) return cmd_moments(c);
    if (density->parsed()) return cmd_density(c);
    if (reduce->parsed()) return cmd_reduce(c);
    return cmd_dependent(c);
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const ContractError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

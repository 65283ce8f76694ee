#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "blockspec/spectral_stats.hpp"

namespace blockspec {

// Shortest representation that parses back to the same double.
std::string format_double(double v);

// CSV with header bin_left,bin_right,density.
void write_histogram_csv(std::ostream& out, const Histogram& h);

// CSV with header eigenvalue; one pooled eigenvalue per line.
void write_sample_csv(std::ostream& out, const SpectralSample& sample);

// CSV with header x,pdf,cdf.
void write_density_csv(std::ostream& out, const std::vector<double>& xs,
                       const std::vector<double>& pdf,
                       const std::vector<double>& cdf);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace blockspec

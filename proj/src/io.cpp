#include "blockspec/io.hpp"

#include <charconv>
#include <fstream>

#include "blockspec/errors.hpp"

namespace blockspec {

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw ContractError("format_double: conversion failed");
  return std::string(buf, ptr);
}

void write_histogram_csv(std::ostream& out, const Histogram& h) {
  out << "bin_left,bin_right,density\n";
  for (int b = 0; b < h.bins(); ++b)
    out << format_double(h.edges[static_cast<std::size_t>(b)]) << ','
        << format_double(h.edges[static_cast<std::size_t>(b) + 1]) << ','
        << format_double(h.densities[static_cast<std::size_t>(b)]) << '\n';
}

void write_sample_csv(std::ostream& out, const SpectralSample& sample) {
  out << "eigenvalue\n";
  for (double v : sample.values()) out << format_double(v) << '\n';
}

void write_density_csv(std::ostream& out, const std::vector<double>& xs,
                       const std::vector<double>& pdf,
                       const std::vector<double>& cdf) {
  if (xs.size() != pdf.size() || xs.size() != cdf.size())
    throw ConfigError("write_density_csv: column lengths differ");
  out << "x,pdf,cdf\n";
  for (std::size_t i = 0; i < xs.size(); ++i)
    out << format_double(xs[i]) << ',' << format_double(pdf[i]) << ','
        << format_double(cdf[i]) << '\n';
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open for writing: " + path);
  out << content;
  if (!out) throw ConfigError("failed writing: " + path);
}

}  // namespace blockspec

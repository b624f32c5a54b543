#pragma once

// Output formats.
//   csv        header row, then data rows; RFC 4180 quoting, CRLF line ends,
//              numbers in shortest round-trip decimal
//   json       field names follow the C++ type fields (PhaseCoefficients as
//              A, B, C_modulus, C_phase); complex numbers as {"re", "im"}
//   plot-data  two whitespace-separated columns per line, one block per
//              curve, blocks separated by one blank line, no comments
//
// Block order in plot-data:
//   report  fringe pattern (detector_phase intensity), when present
//   sweep   (parameter, C_modulus), (parameter, F), (argmax, decade max)
//   fringe  the pattern only, one line per sample

#include <string>
#include <vector>

#include "dephase/scenario.hpp"
#include "dephase/sweep.hpp"

namespace dephase {

enum class OutputFormat { Csv, Json, PlotData };

// "csv", "json", "plot-data"; throws ConfigError otherwise.
OutputFormat parse_output_format(const std::string& name);

std::string format_number(double v);
std::string csv_field(const std::string& s);

std::string emit(const ScenarioReport& report, OutputFormat format);
std::string emit(const SweepResult& sweep, OutputFormat format);
std::string emit(const std::vector<FringeSample>& pattern, OutputFormat format);

ScenarioReport report_from_json(const std::string& text);
SweepResult sweep_from_json(const std::string& text);

}  // namespace dephase

#pragma once

#include <string>
#include <vector>

namespace histavg {

// Formats with 12 significant digits, matching the CSV schema.
std::string format_number(double v);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

CsvTable read_csv(const std::string& path);

// mean +/- stderr band with an optional reference curve, as a standalone SVG.
void write_regret_svg(const std::string& path, const std::vector<double>& mean,
                      const std::vector<double>& stderr_band, const std::vector<double>& reference,
                      const std::string& reference_label);

}  // namespace histavg

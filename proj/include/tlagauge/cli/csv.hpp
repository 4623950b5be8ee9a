// csv.hpp: comma-separated output with 17 significant digits and LF endings

#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace tlagauge {

class CsvWriter {
public:
    // Throws Error when the file cannot be opened.
    CsvWriter(const std::string& path, const std::vector<std::string>& header);

    void row(const std::vector<double>& values);

private:
    std::ofstream out_;
    std::size_t columns_;
};

std::string format_number(double v);

} // namespace tlagauge

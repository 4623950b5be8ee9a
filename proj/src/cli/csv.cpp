#include "tlagauge/cli/csv.hpp"

#include <cstdio>

#include "tlagauge/errors.hpp"

namespace tlagauge {

std::string format_number(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& header)
    : out_(path, std::ios::binary), columns_(header.size())
{
    if (!out_) {
        throw Error("cannot open " + path + " for writing");
    }
    for (std::size_t i = 0; i < header.size(); ++i) {
        out_ << (i ? "," : "") << header[i];
    }
    out_ << '\n';
}

void CsvWriter::row(const std::vector<double>& values)
{
    if (values.size() != columns_) {
        throw Error("csv row has " + std::to_string(values.size()) + " values, header has " +
                    std::to_string(columns_));
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        out_ << (i ? "," : "") << format_number(values[i]);
    }
    out_ << '\n';
}

} // namespace tlagauge

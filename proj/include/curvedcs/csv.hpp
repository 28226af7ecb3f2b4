#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace curvedcs {

// Numeric table rendered as RFC-4180-style CSV: header row, LF line endings,
// values at 17 significant digits ('.' decimal point). Rendering the same
// table twice produces identical bytes.

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

// One double at 17 significant digits (round-trip exact).
std::string format_value(double v);

std::string to_csv(const Table& table);
void write_csv(std::ostream& out, const Table& table);
void write_csv_file(const std::string& path, const Table& table);

}  // namespace curvedcs

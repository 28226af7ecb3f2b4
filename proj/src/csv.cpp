#include "curvedcs/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace curvedcs {

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string to_csv(const Table& table) {
    std::ostringstream out;
    write_csv(out, table);
    return out.str();
}

void write_csv(std::ostream& out, const Table& table) {
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        if (i > 0) {
            out << ',';
        }
        out << table.header[i];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        if (row.size() != table.header.size()) {
            throw std::invalid_argument("write_csv: row width does not match header");
        }
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) {
                out << ',';
            }
            out << format_value(row[i]);
        }
        out << '\n';
    }
}

void write_csv_file(const std::string& path, const Table& table) {
    std::ofstream out(path, std::ios::binary);  // binary keeps LF endings everywhere
    if (!out) {
        throw std::runtime_error("write_csv_file: cannot open '" + path + "' for writing");
    }
    write_csv(out, table);
    out.flush();
    if (!out) {
        throw std::runtime_error("write_csv_file: write to '" + path + "' failed");
    }
}

}  // namespace curvedcs

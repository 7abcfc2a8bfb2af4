/*   Copyright 2026 The neutro authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
 */

#include "neutro/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "neutro/errors.hpp"

namespace neutro::csv {

namespace {

bool parse_double(const std::string& field, double& out) {
    const char* begin = field.c_str();
    char* end = nullptr;
    out = std::strtod(begin, &end);
    if (end == begin) return false;
    while (*end == ' ' || *end == '\t' || *end == '\r') ++end;
    return *end == '\0';
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    return fields;
}

}  // namespace

std::vector<std::vector<double>> read_numeric(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConstructionError("cannot open CSV file '" + path + "'");

    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        const auto fields = split_fields(line);
        std::vector<double> row;
        row.reserve(fields.size());
        bool ok = true;
        for (const auto& f : fields) {
            double v;
            if (!parse_double(f, v)) {
                ok = false;
                break;
            }
            row.push_back(v);
        }
        if (!ok) {
            if (lineno == 1) continue;  // header line
            throw ConstructionError(path + ":" + std::to_string(lineno) +
                                    ": non-numeric CSV field");
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ConstructionError("CSV file '" + path + "' has no data rows");
    return rows;
}

std::string format_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_numeric(const std::string& path, const std::string& header,
                   const std::vector<std::vector<double>>& rows) {
    std::ofstream out(path);
    if (!out) throw ConstructionError("cannot open '" + path + "' for writing");
    out << header << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ",";
            out << format_value(row[i]);
        }
        out << "\n";
    }
}

}  // namespace neutro::csv

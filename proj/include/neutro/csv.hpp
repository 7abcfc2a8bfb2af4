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

#pragma once

#include <string>
#include <vector>

namespace neutro::csv {

/// Reads a CSV file of doubles. A leading header line (first field not
/// numeric) is skipped. Parse failures throw ConstructionError with the
/// offending line number.
std::vector<std::vector<double>> read_numeric(const std::string& path);

/// Writes rows under a header line. Values use round-trip precision.
void write_numeric(const std::string& path, const std::string& header,
                   const std::vector<std::vector<double>>& rows);

std::string format_value(double v);

}  // namespace neutro::csv

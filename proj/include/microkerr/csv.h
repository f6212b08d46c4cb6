// Copyright 2026 The microkerr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MICROKERR_CSV_H
#define MICROKERR_CSV_H

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace microkerr {

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    bool operator==(const CsvTable &) const = default;
};

/// Fixed notation with `precision` decimals for precision < 17; the shortest
/// string that parses back to exactly `value` for precision >= 17. Output
/// assumes IEEE-754 binary64 and does not depend on the C locale.
std::string format_number(double value, int precision);

/// RFC 4180: comma separated, CRLF-free ("\n") line ends, fields quoted only
/// when they contain a comma, quote or newline.
void write_csv(std::ostream &out, const CsvTable &table);
std::string to_csv(const CsvTable &table);

/// Inverse of write_csv. Throws ConfigError on unbalanced quotes or ragged
/// rows.
CsvTable parse_csv(std::istream &in);

}  // namespace microkerr

#endif  // MICROKERR_CSV_H

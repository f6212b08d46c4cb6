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

#include "microkerr/csv.h"

#include <charconv>
#include <sstream>

#include "microkerr/errors.h"

namespace microkerr {

std::string format_number(double value, int precision) {
    char buf[400];
    std::to_chars_result res;
    if (precision >= 17) {
        res = std::to_chars(buf, buf + sizeof(buf), value);
    } else {
        res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed, precision < 0 ? 0 : precision);
    }
    std::string out(buf, res.ptr);
    // "-0.000000" carries no information beyond "0.000000".
    if (out.find_first_not_of("-0.") == std::string::npos && out.front() == '-') {
        out.erase(0, 1);
    }
    return out;
}

namespace {

void write_field(std::ostream &out, const std::string &field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) {
        out << field;
        return;
    }
    out << '"';
    for (char c : field) {
        if (c == '"') out << '"';
        out << c;
    }
    out << '"';
}

void write_row(std::ostream &out, const std::vector<std::string> &row) {
    for (size_t i = 0; i < row.size(); ++i) {
        if (i) out << ',';
        write_field(out, row[i]);
    }
    out << '\n';
}

}  // namespace

void write_csv(std::ostream &out, const CsvTable &table) {
    write_row(out, table.header);
    for (const auto &row : table.rows) write_row(out, row);
}

std::string to_csv(const CsvTable &table) {
    std::ostringstream o;
    write_csv(o, table);
    return o.str();
}

CsvTable parse_csv(std::istream &in) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    bool quoted = false;
    bool any = false;
    char c;
    while (in.get(c)) {
        any = true;
        if (quoted) {
            if (c == '"') {
                if (in.peek() == '"') {
                    in.get(c);
                    field += '"';
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            record.push_back(std::move(field));
            field.clear();
        } else if (c == '\n') {
            record.push_back(std::move(field));
            field.clear();
            records.push_back(std::move(record));
            record.clear();
            any = false;
        } else if (c != '\r') {
            field += c;
        }
    }
    if (quoted) {
        throw ConfigError("csv: unterminated quoted field");
    }
    if (any) {
        record.push_back(std::move(field));
        records.push_back(std::move(record));
    }

    CsvTable table;
    if (records.empty()) return table;
    table.header = std::move(records.front());
    for (size_t r = 1; r < records.size(); ++r) {
        if (records[r].size() != table.header.size()) {
            throw ConfigError("csv: row " + std::to_string(r) + " has " + std::to_string(records[r].size()) +
                              " fields, header has " + std::to_string(table.header.size()));
        }
        table.rows.push_back(std::move(records[r]));
    }
    return table;
}

}  // namespace microkerr

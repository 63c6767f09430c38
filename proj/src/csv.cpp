// Copyright 2026 The crtft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "crtft/csv.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>

namespace crtft::csv {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_vector(std::ostream& os, const ComplexVec& v) {
    os << "index,re,im\n";
    for (std::size_t i = 0; i < v.size(); ++i)
        os << i << ',' << format_double(v[i].real()) << ',' << format_double(v[i].imag()) << '\n';
}

void write_grid(std::ostream& os, char axis, const std::vector<double>& axis_values,
                const ComplexVec& v) {
    os << axis << ",re,im\n";
    for (std::size_t i = 0; i < v.size(); ++i)
        os << format_double(axis_values[i]) << ',' << format_double(v[i].real()) << ','
           << format_double(v[i].imag()) << '\n';
}

namespace {

double parse_field(const std::string& field, std::size_t line_no) {
    const char* s = field.c_str();
    char* end = nullptr;
    const double v = std::strtod(s, &end);
    if (end == s || *end != '\0')
        throw ParseError("csv line " + std::to_string(line_no) + ": bad number '" + field + "'");
    if (!std::isfinite(v))
        throw ParseError("csv line " + std::to_string(line_no) + ": non-finite value");
    return v;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

}  // namespace

ComplexVec read_vector(std::istream& is) {
    std::string line;
    if (!std::getline(is, line))
        throw ParseError("csv input is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "index,re,im" && line != "x,re,im" && line != "y,re,im")
        throw ParseError("csv header must be index,re,im / x,re,im / y,re,im, got '" + line + "'");

    ComplexVec out;
    std::size_t line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::vector<std::string> fields = split_fields(line);
        if (fields.size() != 3)
            throw ParseError("csv line " + std::to_string(line_no) + ": expected 3 fields, got " +
                             std::to_string(fields.size()));
        out.emplace_back(parse_field(fields[1], line_no), parse_field(fields[2], line_no));
    }
    return out;
}

}  // namespace crtft::csv

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

#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "crtft/dft.hpp"

namespace crtft::csv {

using dft::ComplexVec;

/// Shortest decimal form that round-trips the double bit-exactly (%.17g).
std::string format_double(double v);

/// Rows `<index>,<re>,<im>` under the header `index,re,im`.
void write_vector(std::ostream& os, const ComplexVec& v);

/// Rows `<axis[i]>,<re>,<im>` under `x,re,im` or `y,re,im`.
void write_grid(std::ostream& os, char axis, const std::vector<double>& axis_values,
                const ComplexVec& v);

/// Reads any of the three layouts back; the first column is positional
/// only and its value is ignored. Throws ParseError on malformed input.
ComplexVec read_vector(std::istream& is);

}  // namespace crtft::csv

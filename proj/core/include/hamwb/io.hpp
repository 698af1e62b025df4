// Copyright 2026 The hamwb Authors
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

#include <string>
#include <string_view>

#include "hamwb/digraph.hpp"

namespace hamwb {

/// Two text encodings of a digraph, both UTF-8 with LF line ends and '#'
/// comment lines.
///
///   arc-list:  "n <count>" header, then one "a <u> <v>" line per arc.
///   matrix:    n rows of n characters in {0,1}; row u column v is 1 iff
///              (u,v) is an arc; the diagonal must be 0.
enum class TextFormat { arc_list, matrix };

/// Throws ParseError carrying the 1-based line of the first problem.
Digraph parse_digraph(std::string_view text, TextFormat format);

/// Picks the format from the first non-comment line: "n ..." is an arc list,
/// anything else a matrix.
Digraph parse_digraph(std::string_view text);

/// Arcs are written in lexicographic order, so equal digraphs serialise to
/// identical bytes.
std::string serialize_digraph(const Digraph& d,
                              TextFormat format = TextFormat::arc_list);

}  // namespace hamwb

/*
 * Copyright 2026 The lightsout Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <string>
#include <string_view>

#include "lightsout/digraph.hpp"

namespace lightsout {

/**
 * Graph file format:
 *
 *   # optional comment lines
 *   n <vertex count>
 *   <tail> <head>
 *   ...
 *
 * Indices are 0-based. Blank lines and '#' comment lines may appear anywhere;
 * the header must be the first other line. Throws ParseError naming the line
 * on any malformed line, out-of-range index, self-loop or duplicate arc.
 */
Digraph parse_graph(std::string_view text);

/// Reads and parses a graph file. Throws InputError if the file cannot be read.
Digraph read_graph_file(const std::string& path);

/// Canonical text: header, then arcs in sorted order, one per line.
std::string format_graph(const Digraph& d);

} // namespace lightsout

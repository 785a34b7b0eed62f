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

#include "lightsout/graph_file.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "lightsout/errors.hpp"

namespace lightsout {

namespace {

std::vector<std::string_view>
split_ws(std::string_view line)
{
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

std::size_t
parse_index(std::string_view token, std::size_t line)
{
    std::size_t value = 0;
    const char* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        throw ParseError(line, "expected a nonnegative integer, got '" + std::string(token) + "'");
    }
    return value;
}

} // namespace

Digraph
parse_graph(std::string_view text)
{
    std::optional<std::size_t> n;
    std::vector<Arc> arcs;
    std::set<Arc> seen;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        const std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        const auto tokens = split_ws(line);
        if (tokens.empty() || tokens.front().front() == '#') continue;

        if (!n) {
            if (tokens.size() != 2 || tokens[0] != "n") {
                throw ParseError(line_no, "expected header 'n <count>'");
            }
            n = parse_index(tokens[1], line_no);
            if (*n == 0) throw ParseError(line_no, "vertex count must be at least 1");
            continue;
        }

        if (tokens.size() != 2) throw ParseError(line_no, "expected '<tail> <head>'");
        const Arc a{parse_index(tokens[0], line_no), parse_index(tokens[1], line_no)};
        if (a.tail >= *n || a.head >= *n) {
            throw ParseError(line_no, "vertex index out of range [0, " + std::to_string(*n) + ")");
        }
        if (a.tail == a.head) throw ParseError(line_no, "self-loop at vertex " + std::to_string(a.tail));
        if (!seen.insert(a).second) {
            throw ParseError(line_no, "duplicate arc " + std::to_string(a.tail) + " " +
                                          std::to_string(a.head));
        }
        arcs.push_back(a);
    }
    if (!n) throw ParseError(line_no, "missing header 'n <count>'");
    return Digraph::from_arcs(*n, arcs);
}

Digraph
read_graph_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open graph file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

std::string
format_graph(const Digraph& d)
{
    std::string out = "n " + std::to_string(d.order()) + "\n";
    for (const Arc& a : d.arcs()) {
        out += std::to_string(a.tail);
        out += ' ';
        out += std::to_string(a.head);
        out += '\n';
    }
    return out;
}

} // namespace lightsout

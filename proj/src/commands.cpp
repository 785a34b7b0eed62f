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

#include "lightsout/commands.hpp"

#include <charconv>
#include <ostream>
#include <vector>

#include <CLI11.hpp>

#include "lightsout/digraph.hpp"
#include "lightsout/errors.hpp"
#include "lightsout/feedback.hpp"
#include "lightsout/game.hpp"
#include "lightsout/graph_file.hpp"
#include "lightsout/oracle.hpp"

namespace lightsout {

namespace {

Labeling
parse_labels(const std::string& text, std::size_t n, Modulus k)
{
    std::vector<long long> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string_view tok(text.data() + pos, comma - pos);
        unsigned long long v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
            throw InputError("bad label '" + std::string(tok) + "'");
        }
        if (v >= k.value()) {
            throw InputError("label " + std::to_string(v) + " is not a residue mod " +
                             std::to_string(k.value()));
        }
        values.push_back(static_cast<long long>(v));
        pos = comma + 1;
    }
    if (values.size() != n) {
        throw InputError("expected " + std::to_string(n) + " labels, got " +
                         std::to_string(values.size()));
    }
    return Labeling(k, values);
}

void
write_vertices(std::ostream& out, std::span<const VertexId> vs)
{
    for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
}

void
write_arcs(std::ostream& out, std::span<const Arc> arcs)
{
    if (arcs.empty()) {
        out << "(none)";
        return;
    }
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        out << (i ? " " : "") << arcs[i].tail << "->" << arcs[i].head;
    }
}

int
cmd_solve(const std::string& file, long long k_raw, const std::string& labels, std::ostream& out)
{
    const Digraph d = read_graph_file(file);
    const Modulus k(k_raw);
    const auto x = solve_labeling(d, parse_labels(labels, d.order(), k));
    if (!x) {
        out << "UNWINNABLE\n";
        return kExitNegative;
    }
    for (std::size_t i = 0; i < x->size(); ++i) out << (i ? "," : "") << (*x)[i];
    out << '\n';
    return kExitOk;
}

int
cmd_classify(const std::string& file, long long k_min, long long k_max, std::ostream& out)
{
    const Digraph d = read_graph_file(file);
    if (k_max < k_min) throw InputError("--k-max is smaller than --k-min");
    (void)Modulus(k_min);  // validates the range
    (void)Modulus(k_max);

    const BigInt det = neighborhood_determinant(d);
    const SccDecomposition scc = strong_components(d);
    std::vector<BigInt> dets;
    out << "det(N) = " << det << '\n';
    out << "components " << scc.components.size() << '\n';
    for (std::size_t c = 0; c < scc.components.size(); ++c) {
        dets.push_back(neighborhood_determinant(induced_subgraph(d, scc.components[c]).graph));
        out << "component " << c << ": ";
        write_vertices(out, scc.components[c]);
        out << " (det " << dets.back() << ")\n";
    }
    for (long long kv = k_min; kv <= k_max; ++kv) {
        out << kv << ": " << (is_k_aw(d, Modulus(kv)) ? "k-AW" : "not k-AW") << '\n';
    }
    return kExitOk;
}

int
cmd_min_fas(const std::string& file, bool all, std::ostream& out)
{
    const Digraph d = read_graph_file(file);
    const VertexOrdering order = min_fas_ordering(d);
    const FeedbackArcSet fas = feedback_arcs_of_ordering(d, order);
    out << "size " << fas.arcs.size() << '\n';
    out << "ordering ";
    write_vertices(out, order.perm());
    out << "\narcs ";
    write_arcs(out, fas.arcs);
    out << '\n';
    if (!all) return kExitOk;

    const auto sets = all_minimum_fas(d);
    out << "minimum sets " << sets.size() << '\n';
    for (std::size_t i = 0; i < sets.size(); ++i) {
        out << "set " << i << ": ";
        write_arcs(out, sets[i].arcs);
        out << "; ordering ";
        write_vertices(out, sets[i].ordering.perm());
        out << "; " << describe(classify_arc_induced(d, sets[i])) << '\n';
    }
    return kExitOk;
}

int
cmd_scc(const std::string& file, std::ostream& out)
{
    const Digraph d = read_graph_file(file);
    const SccDecomposition scc = strong_components(d);
    for (std::size_t c = 0; c < scc.components.size(); ++c) {
        out << "component " << c << ": ";
        write_vertices(out, scc.components[c]);
        out << '\n';
    }
    return kExitOk;
}

int
cmd_census(long long n, long long k_max, bool summary_only, std::ostream& out)
{
    if (n < 1) throw InputError("--n must be at least 1");
    if (k_max < 2) throw InputError("--k-max must be at least 2");
    const CensusReport report =
        run_theorem_census(static_cast<std::size_t>(n), static_cast<std::uint64_t>(k_max));
    write_census(out, report, !summary_only);
    return report.passed() ? kExitOk : kExitNegative;
}

} // namespace

int
run_command(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"k-lights-out game on directed graphs", "lightsout"};
    app.require_subcommand(1);

    std::string file, labels;
    long long k = 0, k_min = 0, k_max = 0, n = 0;
    bool all = false, summary_only = false;

    auto* solve = app.add_subcommand("solve", "find a winning toggle vector for a labeling");
    solve->add_option("--k", k, "modulus")->required();
    solve->add_option("--labels", labels, "comma-separated labels in vertex order")->required();
    solve->add_option("file", file, "graph file")->required();

    auto* classify = app.add_subcommand("classify", "decide k-always-winnability over a range of k");
    classify->add_option("--k-min", k_min, "smallest modulus")->required();
    classify->add_option("--k-max", k_max, "largest modulus")->required();
    classify->add_option("file", file, "graph file")->required();

    auto* min_fas = app.add_subcommand("min-fas", "minimum feedback arc sets");
    min_fas->add_option("file", file, "graph file")->required();
    min_fas->add_flag("--all", all, "list every minimum arc set with its arc-induced class");

    auto* scc = app.add_subcommand("scc", "strong components in acyclic order");
    scc->add_option("file", file, "graph file")->required();

    auto* census = app.add_subcommand("census", "cross-check theorems on all small tournaments");
    census->add_option("--n", n, "largest tournament order")->required();
    census->add_option("--k-max", k_max, "largest modulus")->required();
    census->add_flag("--summary", summary_only, "print only the summary block");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }

    try {
        if (solve->parsed()) return cmd_solve(file, k, labels, out);
        if (classify->parsed()) return cmd_classify(file, k_min, k_max, out);
        if (min_fas->parsed()) return cmd_min_fas(file, all, out);
        if (scc->parsed()) return cmd_scc(file, out);
        return cmd_census(n, k_max, summary_only, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
}

} // namespace lightsout

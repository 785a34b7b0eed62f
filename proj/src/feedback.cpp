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

#include "lightsout/feedback.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <tuple>
#include <utility>

namespace lightsout {

namespace {

using Mask = std::uint32_t;

struct BitGraph {
    std::vector<Mask> out;
    std::vector<Mask> in;
};

BitGraph
to_bits(const Digraph& d)
{
    BitGraph g{std::vector<Mask>(d.order(), 0), std::vector<Mask>(d.order(), 0)};
    for (const Arc& a : d.arcs()) {
        g.out[a.tail] |= Mask{1} << a.head;
        g.in[a.head] |= Mask{1} << a.tail;
    }
    return g;
}

// best[S]: fewest backward arcs over all orderings of the vertex subset S.
std::vector<std::uint16_t>
subset_costs(const BitGraph& g)
{
    const std::size_t n = g.out.size();
    std::vector<std::uint16_t> best(std::size_t{1} << n, 0);
    for (Mask s = 1; s < best.size(); ++s) {
        unsigned result = ~0u;
        for (Mask rest = s; rest != 0; rest &= rest - 1) {
            const unsigned v = static_cast<unsigned>(std::countr_zero(rest));
            const Mask without = s & ~(Mask{1} << v);
            // v last among S: its arcs into the rest of S point backward
            const unsigned c = best[without] + static_cast<unsigned>(std::popcount(g.out[v] & without));
            result = std::min(result, c);
        }
        best[s] = static_cast<std::uint16_t>(result);
    }
    return best;
}

// Placing v first among `remaining` makes every arc into v from the rest backward.
unsigned
first_cost(const BitGraph& g, Mask remaining, unsigned v)
{
    return static_cast<unsigned>(std::popcount(g.in[v] & remaining & ~(Mask{1} << v)));
}

void
check_fas_order(const Digraph& d, std::size_t limit)
{
    if (d.order() > limit) {
        throw CapacityError("feedback arc set search limited to " + std::to_string(limit) +
                            " vertices, got " + std::to_string(d.order()));
    }
}

} // namespace

std::string
describe(const ArcInducedClass& c)
{
    struct Visitor {
        std::string operator()(const shape::Empty&) const { return "empty"; }
        std::string operator()(const shape::DirectedPath& p) const
        {
            return "directed path, m=" + std::to_string(p.arcs);
        }
        std::string operator()(const shape::DirectedStar& s) const
        {
            return "directed star (s=" + std::to_string(s.in_arcs) + ", t=" +
                   std::to_string(s.out_arcs) + "), m=" + std::to_string(s.intervals);
        }
        std::string operator()(const shape::Other&) const { return "other"; }
    };
    return std::visit(Visitor{}, c);
}

FeedbackArcSet
feedback_arcs_of_ordering(const Digraph& d, const VertexOrdering& order)
{
    if (order.size() != d.order()) throw InputError("ordering size does not match the digraph");
    FeedbackArcSet fas{order, {}};
    for (const Arc& a : d.arcs()) {
        if (order.position(a.tail) > order.position(a.head)) fas.arcs.push_back(a);
    }
    return fas;  // d.arcs() is sorted, so fas.arcs is too
}

std::size_t
min_fas_size(const Digraph& d)
{
    check_fas_order(d, kMaxFasDpOrder);
    if (d.order() == 0) return 0;
    return subset_costs(to_bits(d)).back();
}

VertexOrdering
min_fas_ordering(const Digraph& d)
{
    check_fas_order(d, kMaxFasDpOrder);
    const std::size_t n = d.order();
    const BitGraph g = to_bits(d);
    const auto best = subset_costs(g);

    std::vector<VertexId> perm;
    Mask remaining = static_cast<Mask>(best.size() - 1);
    while (remaining != 0) {
        for (unsigned v = 0; v < n; ++v) {
            if (!(remaining >> v & 1)) continue;
            const Mask rest = remaining & ~(Mask{1} << v);
            if (first_cost(g, remaining, v) + best[rest] == best[remaining]) {
                perm.push_back(v);
                remaining = rest;
                break;
            }
        }
    }
    return VertexOrdering(std::move(perm));
}

std::vector<FeedbackArcSet>
all_minimum_fas(const Digraph& d)
{
    check_fas_order(d, kMaxFasEnumerationOrder);
    const std::size_t n = d.order();
    const BitGraph g = to_bits(d);
    const auto best = subset_costs(g);

    // Depth-first over optimal prefixes with ascending choices yields the
    // optimal orderings in lexicographic order, so the first ordering seen
    // for an arc set is its smallest witness.
    std::map<std::vector<Arc>, VertexOrdering> found;
    std::vector<VertexId> perm;
    perm.reserve(n);

    auto extend = [&](auto&& self, Mask remaining) -> void {
        if (remaining == 0) {
            VertexOrdering order(perm);
            auto fas = feedback_arcs_of_ordering(d, order);
            found.try_emplace(std::move(fas.arcs), std::move(order));
            return;
        }
        for (unsigned v = 0; v < n; ++v) {
            if (!(remaining >> v & 1)) continue;
            const Mask rest = remaining & ~(Mask{1} << v);
            if (first_cost(g, remaining, v) + best[rest] != best[remaining]) continue;
            perm.push_back(v);
            self(self, rest);
            perm.pop_back();
        }
    };
    extend(extend, static_cast<Mask>(best.size() - 1));

    std::vector<FeedbackArcSet> out;
    out.reserve(found.size());
    for (auto& [arcs, order] : found) out.push_back({order, arcs});
    return out;
}

bool
check_min_fas_gap(const FeedbackArcSet& fas)
{
    return std::all_of(fas.arcs.begin(), fas.arcs.end(), [&](const Arc& a) {
        const std::size_t pt = fas.ordering.position(a.tail);
        const std::size_t ph = fas.ordering.position(a.head);
        return pt >= ph + 2;
    });
}

FeedbackIntervals
feedback_intervals(const VertexOrdering& order, std::span<const Arc> arcs)
{
    const std::size_t n = order.size();
    std::vector<char> is_head(n, 0), is_tail(n, 0);
    for (const Arc& a : arcs) {
        if (a.tail >= n || a.head >= n) throw InputError("arc endpoint outside the ordering");
        is_tail[a.tail] = 1;
        is_head[a.head] = 1;
    }

    // With two or more arcs at most one vertex can touch all of them.
    std::optional<VertexId> center;
    if (arcs.size() >= 2) {
        for (VertexId c : {arcs.front().tail, arcs.front().head}) {
            if (std::all_of(arcs.begin(), arcs.end(),
                            [c](const Arc& a) { return a.tail == c || a.head == c; })) {
                center = c;
            }
        }
    }

    auto runs = [&](const std::vector<char>& member, IntervalKind kind) {
        std::vector<FeedbackInterval> out;
        for (std::size_t p = 0; p < n;) {
            if (!member[order.at(p)]) {
                ++p;
                continue;
            }
            std::size_t q = p;
            while (q + 1 < n && member[order.at(q + 1)]) ++q;
            out.push_back({p, q, kind});
            p = q + 1;
        }
        return out;
    };

    std::vector<FeedbackInterval> all = runs(is_head, IntervalKind::Head);
    for (const FeedbackInterval& t : runs(is_tail, IntervalKind::Tail)) {
        auto same = std::find_if(all.begin(), all.end(), [&](const FeedbackInterval& h) {
            return h.first == t.first && h.last == t.last;
        });
        if (same == all.end()) all.push_back(t);
    }
    for (FeedbackInterval& iv : all) {
        if (center && iv.first == iv.last && order.at(iv.first) == *center) {
            iv.kind = IntervalKind::Center;
        }
    }
    std::sort(all.begin(), all.end(), [](const FeedbackInterval& a, const FeedbackInterval& b) {
        return std::tie(a.first, a.last) < std::tie(b.first, b.last);
    });
    return {std::move(all)};
}

ArcInducedClass
classify_arc_induced(const Digraph& d, const FeedbackArcSet& fas)
{
    const auto& arcs = fas.arcs;
    if (arcs.empty()) return shape::Empty{};

    const Subgraph sub = arc_induced_subgraph(d, arcs);
    const Digraph& g = sub.graph;

    // Directed path: one source, in/out degree <= 1, walk covers every vertex.
    bool degrees_ok = g.order() == g.size() + 1;
    std::optional<VertexId> source;
    for (VertexId v = 0; v < g.order() && degrees_ok; ++v) {
        if (g.in_neighbors(v).size() > 1 || g.out_neighbors(v).size() > 1) degrees_ok = false;
        if (g.in_neighbors(v).empty()) {
            if (source) degrees_ok = false;
            source = v;
        }
    }
    if (degrees_ok && source) {
        std::size_t visited = 1;
        VertexId v = *source;
        while (!g.out_neighbors(v).empty() && visited <= g.order()) {
            v = g.out_neighbors(v).front();
            ++visited;
        }
        if (visited == g.order()) return shape::DirectedPath{g.size()};
    }

    // Directed star: some vertex is an endpoint of every arc.
    for (VertexId c = 0; c < g.order(); ++c) {
        const std::size_t s = g.in_neighbors(c).size();
        const std::size_t t = g.out_neighbors(c).size();
        if (s + t != g.size() || g.order() != s + t + 1) continue;
        const std::size_t m = feedback_intervals(fas.ordering, arcs).count();
        return shape::DirectedStar{s, t, m};
    }
    return shape::Other{};
}

Residue
fibonacci_mod(std::size_t n, Modulus k)
{
    Residue a = 0, b = k.reduce(1);
    for (std::size_t i = 0; i < n; ++i) {
        a = std::exchange(b, k.add(a, b));
    }
    return a;
}

bool
predict_k_aw_path(std::size_t m, Modulus k)
{
    if (m < 1) throw InputError("path criterion needs at least one arc");
    return std::gcd(fibonacci_mod(m + 2, k), k.value()) == 1;
}

bool
predict_k_aw_star(std::size_t m, Modulus k)
{
    if (m < 2) throw InputError("star criterion needs at least two feedback intervals");
    return std::gcd(static_cast<std::uint64_t>(m), k.value()) == 1;
}

IntMatrix
build_path_matrix(std::size_t m)
{
    if (m < 1) throw InputError("path matrix needs m >= 1");
    IntMatrix a(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        a(i, i) = 1;
        if (i + 1 < m) a(i, i + 1) = 1;
        if (i > 0) a(i, i - 1) = -1;
    }
    a(m - 1, m - 1) = 2;
    return a;
}

IntMatrix
build_star_matrix(std::span<const std::size_t> head_interval_sizes, std::size_t s)
{
    if (head_interval_sizes.empty()) throw InputError("star matrix needs at least one head interval");
    std::size_t dim = 1;
    for (std::size_t h : head_interval_sizes) {
        if (h == 0) throw InputError("head interval sizes must be positive");
        dim += h;
    }

    IntMatrix a(dim, dim);
    const std::size_t last = dim - 1;
    std::size_t offset = 0;
    for (std::size_t h : head_interval_sizes) {
        for (std::size_t i = 0; i < h; ++i) {
            for (std::size_t j = 0; j <= i; ++j) a(offset + i, offset + j) = 1;
            a(offset + i, last) = 1;
        }
        offset += h;
    }
    for (std::size_t j = 0; j < last; ++j) a(last, j) = -1;
    a(last, last) = static_cast<long long>(s) + 1;
    return a;
}

} // namespace lightsout

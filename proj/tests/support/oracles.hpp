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

// Independent reference computations used only by the tests. Nothing here
// calls into the elimination, Smith form or subset-DP code it checks.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "lightsout/digraph.hpp"

namespace lightsout::testing {

using SmallMatrix = std::vector<std::vector<long long>>;

/// Laplace expansion along the first row.
inline long long
cofactor_det(const SmallMatrix& a)
{
    const std::size_t n = a.size();
    if (n == 0) return 1;
    if (n == 1) return a[0][0];
    long long total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (a[0][c] == 0) continue;
        SmallMatrix minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<long long> row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != c) row.push_back(a[r][j]);
            minor.push_back(std::move(row));
        }
        const long long term = a[0][c] * cofactor_det(minor);
        total += (c % 2 == 0) ? term : -term;
    }
    return total;
}

/// All x in Z_k^n with a x == c (mod k), lexicographic.
inline std::vector<std::vector<long long>>
all_solutions_mod(const SmallMatrix& a, const std::vector<long long>& c, long long k)
{
    const std::size_t n = a.empty() ? 0 : a[0].size();
    std::vector<std::vector<long long>> out;
    std::vector<long long> x(n, 0);
    for (;;) {
        bool ok = true;
        for (std::size_t r = 0; r < a.size() && ok; ++r) {
            long long s = 0;
            for (std::size_t j = 0; j < n; ++j) s += a[r][j] * x[j];
            ok = (((s - c[r]) % k) + k) % k == 0;
        }
        if (ok) out.push_back(x);
        std::size_t i = n;
        while (i > 0 && ++x[i - 1] == k) x[--i] = 0;
        if (i == 0) break;
    }
    return out;
}

/// Press vertices one at a time: each press adds 1 to v and everything v
/// dominates.
inline std::vector<long long>
press_one_by_one(const Digraph& d, std::vector<long long> labels, const std::vector<long long>& presses,
                 long long k)
{
    for (VertexId v = 0; v < d.order(); ++v) {
        for (long long p = 0; p < presses[v]; ++p) {
            labels[v] = (labels[v] + 1) % k;
            for (const Arc& a : d.arcs())
                if (a.tail == v) labels[a.head] = (labels[a.head] + 1) % k;
        }
    }
    return labels;
}

inline std::vector<Arc>
backward_arcs(const Digraph& d, const std::vector<VertexId>& perm)
{
    std::vector<std::size_t> pos(perm.size());
    for (std::size_t p = 0; p < perm.size(); ++p) pos[perm[p]] = p;
    std::vector<Arc> out;
    for (const Arc& a : d.arcs())
        if (pos[a.tail] > pos[a.head]) out.push_back(a);
    return out;
}

/// Minimum over all n! orderings, and every arc set achieving it.
struct PermutationSweep {
    std::size_t minimum = 0;
    std::set<std::vector<Arc>> minimum_sets;
};

inline PermutationSweep
sweep_orderings(const Digraph& d)
{
    std::vector<VertexId> perm(d.order());
    std::iota(perm.begin(), perm.end(), VertexId{0});
    PermutationSweep s;
    s.minimum = d.size() + 1;
    do {
        auto arcs = backward_arcs(d, perm);
        if (arcs.size() < s.minimum) {
            s.minimum = arcs.size();
            s.minimum_sets.clear();
        }
        if (arcs.size() == s.minimum) s.minimum_sets.insert(std::move(arcs));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return s;
}

inline std::uint64_t
fibonacci(unsigned n)
{
    std::uint64_t a = 0, b = 1;
    for (unsigned i = 0; i < n; ++i) {
        const std::uint64_t t = a + b;
        a = b;
        b = t;
    }
    return a;
}

/// Every labeled simple digraph on n vertices (2^(n(n-1)) of them).
inline std::vector<Digraph>
all_digraphs(std::size_t n)
{
    std::vector<Arc> pairs;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = 0; j < n; ++j)
            if (i != j) pairs.push_back({i, j});
    std::vector<Digraph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<Arc> arcs;
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if (mask >> b & 1) arcs.push_back(pairs[b]);
        out.push_back(Digraph::from_arcs(n, arcs));
    }
    return out;
}

} // namespace lightsout::testing

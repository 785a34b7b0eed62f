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

#include "lightsout/game.hpp"

namespace lightsout {

namespace {

void
check_labeling(const Digraph& d, const Labeling& labels)
{
    if (labels.size() != d.order()) {
        throw InputError("labeling has " + std::to_string(labels.size()) +
                         " entries for a digraph on " + std::to_string(d.order()) + " vertices");
    }
}

} // namespace

ToggleVector
PlayTranscript::toggles() const
{
    ToggleVector x(final_labeling.modulus(), presses.size());
    for (std::size_t p = 0; p < presses.size(); ++p) {
        x.set(ordering.at(p), static_cast<long long>(presses[p]));
    }
    return x;
}

IntMatrix
neighborhood_matrix(const Digraph& d)
{
    const std::size_t n = d.order();
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    for (const Arc& a : d.arcs()) m(a.tail, a.head) = 1;
    return m;
}

ModMatrix
system_matrix(const Digraph& d, Modulus k)
{
    const std::size_t n = d.order();
    ModMatrix m(k, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    for (const Arc& a : d.arcs()) m.set(a.head, a.tail, 1);
    return m;
}

Labeling
apply_toggles(const Digraph& d, const Labeling& labels, const ToggleVector& x)
{
    check_labeling(d, labels);
    if (x.size() != d.order()) throw InputError("toggle vector has the wrong length");
    if (x.modulus() != labels.modulus()) throw InputError("modulus mismatch");

    const Modulus k = labels.modulus();
    Labeling out = labels;
    for (VertexId j = 0; j < d.order(); ++j) {
        Residue acc = k.add(labels[j], x[j]);
        for (VertexId i : d.in_neighbors(j)) acc = k.add(acc, x[i]);
        out.set(j, static_cast<long long>(acc));
    }
    return out;
}

std::optional<ToggleVector>
solve_labeling(const Digraph& d, const Labeling& labels)
{
    check_labeling(d, labels);
    const Modulus k = labels.modulus();
    ModVector rhs(k, d.order());
    for (std::size_t j = 0; j < d.order(); ++j) rhs.set(j, static_cast<long long>(k.neg(labels[j])));

    auto x = solve_mod(system_matrix(d, k), rhs);
    if (!x) return std::nullopt;
    return ToggleVector(*x);
}

BigInt
neighborhood_determinant(const Digraph& d)
{
    return det_int(neighborhood_matrix(d));
}

bool
is_k_aw(const Digraph& d, Modulus k)
{
    return is_unit_mod(neighborhood_determinant(d), k);
}

bool
is_k_aw_componentwise(const Digraph& d, Modulus k)
{
    for (const auto& comp : strong_components(d).components) {
        if (!is_k_aw(induced_subgraph(d, comp).graph, k)) return false;
    }
    return true;
}

PlayTranscript
greedy_play(const Digraph& d, const VertexOrdering& order, const Labeling& labels)
{
    check_labeling(d, labels);
    if (order.size() != d.order()) throw InputError("ordering size does not match the digraph");

    const Modulus k = labels.modulus();
    PlayTranscript t{order, std::vector<Residue>(order.size(), 0), labels};
    for (std::size_t p = 0; p < order.size(); ++p) {
        const VertexId v = order.at(p);
        const Residue presses = k.neg(t.final_labeling[v]);
        t.presses[p] = presses;
        if (presses == 0) continue;
        t.final_labeling.set(v, 0);
        for (VertexId w : d.out_neighbors(v)) {
            t.final_labeling.set(w, static_cast<long long>(k.add(t.final_labeling[w], presses)));
        }
    }
    return t;
}

} // namespace lightsout

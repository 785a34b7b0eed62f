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

#include <optional>
#include <vector>

#include "lightsout/digraph.hpp"
#include "lightsout/modalg.hpp"

namespace lightsout {

struct LabelingTag;
struct ToggleTag;

/// Vertex labels over Z_k; the game state.
using Labeling = ResidueVector<LabelingTag>;
/// Number of presses per vertex over Z_k (k presses are a no-op).
using ToggleVector = ResidueVector<ToggleTag>;

/// Result of pressing vertices greedily along an ordering.
struct PlayTranscript {
    VertexOrdering ordering;
    std::vector<Residue> presses;  // presses[p]: count for ordering.at(p)
    Labeling final_labeling;

    /// Presses indexed by vertex id.
    ToggleVector toggles() const;
};

/// N = A + I: N(i, j) = 1 iff i == j or i -> j.
IntMatrix neighborhood_matrix(const Digraph& d);

/// Coefficient matrix of the winning condition: M(j, i) = 1 iff i == j or
/// i -> j, i.e. the transpose of N reduced mod k. Row j sums the presses
/// that reach vertex j.
ModMatrix system_matrix(const Digraph& d, Modulus k);

/// out[j] = labels[j] + sum_i M(j, i) * x[i] (mod k).
Labeling apply_toggles(const Digraph& d, const Labeling& labels, const ToggleVector& x);

/// A toggle vector that turns `labels` into the zero labeling, or nullopt.
std::optional<ToggleVector> solve_labeling(const Digraph& d, const Labeling& labels);

/// det(N) as an exact integer.
BigInt neighborhood_determinant(const Digraph& d);

/// Every labeling over Z_k is winnable, i.e. gcd(det N, k) == 1.
bool is_k_aw(const Digraph& d, Modulus k);

/// AND of is_k_aw over the subdigraphs induced by the strong components.
bool is_k_aw_componentwise(const Digraph& d, Modulus k);

/// Press each vertex of `order` in turn until its label is 0, i.e.
/// (k - label) mod k times at its turn.
PlayTranscript greedy_play(const Digraph& d, const VertexOrdering& order, const Labeling& labels);

} // namespace lightsout

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

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "lightsout/digraph.hpp"
#include "lightsout/modalg.hpp"

namespace lightsout {

/// Backward arcs of an ordering: v -> w with position(v) > position(w).
/// Arcs are kept sorted.
struct FeedbackArcSet {
    VertexOrdering ordering;
    std::vector<Arc> arcs;
};

namespace shape {

struct Empty {
    friend bool operator==(const Empty&, const Empty&) = default;
};

struct DirectedPath {
    std::size_t arcs = 0;  // m >= 1
    friend bool operator==(const DirectedPath&, const DirectedPath&) = default;
};

/// Center with s in-arcs and t out-arcs. `intervals` is the feedback
/// interval count of the witnessing ordering.
struct DirectedStar {
    std::size_t in_arcs = 0;   // s
    std::size_t out_arcs = 0;  // t
    std::size_t intervals = 0; // m
    friend bool operator==(const DirectedStar&, const DirectedStar&) = default;
};

struct Other {
    friend bool operator==(const Other&, const Other&) = default;
};

} // namespace shape

using ArcInducedClass =
    std::variant<shape::Empty, shape::DirectedPath, shape::DirectedStar, shape::Other>;

/// "empty", "directed path, m=2", "directed star (s=0, t=2), m=3", "other".
std::string describe(const ArcInducedClass& c);

enum class IntervalKind {
    Head,
    Tail,
    Center,  // singleton run holding the vertex incident to every arc
};

struct FeedbackInterval {
    std::size_t first = 0;  // positions in the ordering, inclusive
    std::size_t last = 0;
    IntervalKind kind = IntervalKind::Head;

    friend bool operator==(const FeedbackInterval&, const FeedbackInterval&) = default;
};

/// Feedback intervals sorted by first position. A vertex set that is both a
/// head run and a tail run appears once.
struct FeedbackIntervals {
    std::vector<FeedbackInterval> intervals;

    std::size_t count() const noexcept { return intervals.size(); }
};

/// Largest order accepted by min_fas_size.
inline constexpr std::size_t kMaxFasDpOrder = 20;
/// Largest order accepted by all_minimum_fas.
inline constexpr std::size_t kMaxFasEnumerationOrder = 8;

/// Throws InputError if the ordering does not match d's vertex set.
FeedbackArcSet feedback_arcs_of_ordering(const Digraph& d, const VertexOrdering& order);

/// Exact minimum feedback arc set size by dynamic programming over vertex
/// subsets. Throws CapacityError for n > kMaxFasDpOrder.
std::size_t min_fas_size(const Digraph& d);

/// One ordering achieving min_fas_size (lexicographically smallest).
VertexOrdering min_fas_ordering(const Digraph& d);

/// Every distinct minimum feedback arc set, sorted by arc list, each with its
/// lexicographically smallest witnessing ordering. Throws CapacityError for
/// n > kMaxFasEnumerationOrder.
std::vector<FeedbackArcSet> all_minimum_fas(const Digraph& d);

/// Every backward arc spans at least two positions.
bool check_min_fas_gap(const FeedbackArcSet& fas);

/// Maximal runs of head feedback vertices and of tail feedback vertices of
/// `arcs` along `order`.
FeedbackIntervals feedback_intervals(const VertexOrdering& order, std::span<const Arc> arcs);

/// Shape of D_S. A single arc is reported as DirectedPath{1}.
ArcInducedClass classify_arc_induced(const Digraph& d, const FeedbackArcSet& fas);

/// F_n mod k with F_0 = 0, F_1 = 1.
Residue fibonacci_mod(std::size_t n, Modulus k);

/// Path criterion: gcd(k, F_{m+2}) == 1. Throws InputError for m < 1.
bool predict_k_aw_path(std::size_t m, Modulus k);

/// Star criterion: gcd(k, m) == 1. Throws InputError for m < 2.
bool predict_k_aw_star(std::size_t m, Modulus k);

/// Tridiagonal A_m: A_1 = [2]; otherwise 1 on the diagonal except a final 2,
/// 1 above and -1 below the diagonal.
IntMatrix build_path_matrix(std::size_t m);

/**
 * Block matrix for a star with r = head_interval_sizes.size() head runs and
 * s tail runs:
 *
 *   [ L_{h1}   0     ...   1 ]
 *   [   0    L_{h2}  ...   1 ]
 *   [  -1     -1     ... s+1 ]
 *
 * where L_h is the h x h lower-triangular all-ones matrix.
 */
IntMatrix build_star_matrix(std::span<const std::size_t> head_interval_sizes, std::size_t s);

} // namespace lightsout

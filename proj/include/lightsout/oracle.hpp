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
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lightsout/digraph.hpp"
#include "lightsout/feedback.hpp"
#include "lightsout/game.hpp"

namespace lightsout {

/// Largest k^n searched by the brute-force engines.
inline constexpr std::uint64_t kBruteForceBudget = 10'000'000;
/// Largest tournament order for enumeration and census.
inline constexpr std::size_t kMaxTournamentOrder = 6;
inline constexpr std::uint64_t kMaxCensusModulus = 30;

/// Lexicographically smallest winning toggle vector by exhaustive search of
/// Z_k^n. Throws CapacityError when k^n exceeds kBruteForceBudget.
std::optional<ToggleVector> brute_force_solve(const Digraph& d, const Labeling& labels);

/// Whether the press map x -> M x hits all k^n labelings. Throws
/// CapacityError when k^n exceeds kBruteForceBudget.
bool brute_force_is_k_aw(const Digraph& d, Modulus k);

/// 2^(n(n-1)/2).
std::uint64_t tournament_count(std::size_t n);

/// Labeled tournament encoded by `mask`: pairs (i, j), i < j, are numbered
/// in lexicographic order and bit b set means i -> j, clear means j -> i.
Digraph tournament_from_mask(std::size_t n, std::uint64_t mask);

/// Visit every labeled tournament on n vertices once, mask ascending.
/// Throws CapacityError for n > kMaxTournamentOrder, InputError for n == 0.
void for_each_tournament(std::size_t n,
                         const std::function<void(std::uint64_t mask, const Digraph&)>& visit);

/// Seeded source of random instances; the same seed yields the same stream.
class InstanceSampler {
  public:
    explicit InstanceSampler(std::uint64_t seed) : rng_(seed) {}

    /// Each ordered non-loop pair is an arc independently with probability p.
    Digraph digraph(std::size_t n, double p);
    /// Random digraph whose arcs all point forward along a hidden random ordering.
    Digraph dag(std::size_t n, double p);
    VertexOrdering ordering(std::size_t n);
    Labeling labeling(std::size_t n, Modulus k);
    std::size_t uniform(std::size_t lo, std::size_t hi);  // inclusive

  private:
    bool coin(double p);

    std::mt19937_64 rng_;
};

/// Throws InputError unless 0 <= p <= 1.
Digraph random_digraph(std::size_t n, double p, std::uint64_t seed);

/// One (tournament, k) evaluation of the census.
struct CensusRecord {
    std::uint64_t mask = 0;
    std::size_t n = 0;
    std::uint64_t k = 0;
    bool aw = false;                       // gcd(det N, k) == 1
    bool componentwise = false;            // strong-component reduction
    std::optional<bool> brute;             // exhaustive check when k^n is small
    std::size_t min_fas = 0;
    std::string shape;                     // class of the first path/star witness, else first witness
    std::optional<bool> path_prediction;   // Fibonacci criterion, if some witness is a path
    std::optional<bool> star_prediction;   // interval criterion, if some witness is a star
    bool agree = true;
};

struct CensusSummary {
    std::size_t tournaments = 0;
    std::size_t strong_tournaments = 0;
    std::size_t acyclic_tournaments = 0;
    std::size_t path_tournaments = 0;      // strong, some minimum FAS induces a path
    std::size_t star_tournaments = 0;      // strong, some minimum FAS induces a star
    std::size_t star_interval_conflicts = 0; // star witnesses with differing m
    std::size_t records = 0;
    std::size_t path_checks = 0;
    std::size_t star_checks = 0;
    std::size_t brute_checks = 0;
    std::size_t disagreements = 0;
};

struct CensusReport {
    std::vector<CensusRecord> records;
    CensusSummary summary;

    bool passed() const noexcept { return summary.disagreements == 0; }
};

/**
 * Evaluate every labeled tournament on 1..n_max vertices for k = 2..k_max.
 *
 * Each record compares the determinant verdict against the strong-component
 * reduction, the brute-force oracle where k^n <= brute_budget, the acyclic
 * theorem for transitive tournaments, and, on strong tournaments, the path
 * and star criteria of every minimum feedback arc set witness whose
 * arc-induced subgraph has that shape. Throws CapacityError for
 * n_max > kMaxTournamentOrder or k_max > kMaxCensusModulus.
 */
CensusReport run_theorem_census(std::size_t n_max, std::uint64_t k_max,
                                std::uint64_t brute_budget = 1000);

/// Tab-separated table, one record per line after a '#' header, then a
/// "summary" block of "key<TAB>value" lines. Booleans print as 1/0, absent
/// values as '-'.
void write_census(std::ostream& os, const CensusReport& report, bool records = true);

} // namespace lightsout

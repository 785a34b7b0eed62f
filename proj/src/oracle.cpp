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

#include "lightsout/oracle.hpp"

#include <algorithm>
#include <ostream>

namespace lightsout {

namespace {

// k^n if it does not exceed budget.
std::optional<std::uint64_t>
power_within(std::uint64_t k, std::size_t n, std::uint64_t budget)
{
    std::uint64_t p = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (p > budget / k) return std::nullopt;
        p *= k;
    }
    return p;
}

std::uint64_t
search_space(const Digraph& d, Modulus k)
{
    auto total = power_within(k.value(), d.order(), kBruteForceBudget);
    if (!total) {
        throw CapacityError("exhaustive search over " + std::to_string(k.value()) + "^" +
                            std::to_string(d.order()) + " vectors exceeds the budget");
    }
    return *total;
}

// Odometer over Z_k^n, last coordinate fastest (lexicographic order).
bool
advance(std::vector<Residue>& x, std::uint64_t k)
{
    for (std::size_t i = x.size(); i-- > 0;) {
        if (++x[i] < k) return true;
        x[i] = 0;
    }
    return false;
}

const char*
flag(bool b)
{
    return b ? "1" : "0";
}

const char*
flag(const std::optional<bool>& b)
{
    return b ? flag(*b) : "-";
}

} // namespace

std::optional<ToggleVector>
brute_force_solve(const Digraph& d, const Labeling& labels)
{
    if (labels.size() != d.order()) throw InputError("labeling size does not match the digraph");
    const Modulus k = labels.modulus();
    search_space(d, k);

    const std::size_t n = d.order();
    std::vector<Residue> x(n, 0);
    do {
        bool wins = true;
        for (VertexId j = 0; j < n && wins; ++j) {
            std::uint64_t label = labels[j] + x[j];
            for (VertexId i : d.in_neighbors(j)) label += x[i];
            wins = label % k.value() == 0;
        }
        if (wins) {
            ToggleVector out(k, n);
            for (std::size_t i = 0; i < n; ++i) out.set(i, static_cast<long long>(x[i]));
            return out;
        }
    } while (advance(x, k.value()));
    return std::nullopt;
}

bool
brute_force_is_k_aw(const Digraph& d, Modulus k)
{
    const std::uint64_t total = search_space(d, k);
    const std::size_t n = d.order();
    const std::uint64_t kv = k.value();

    // Onto iff injective on a finite set, so count distinct images.
    std::vector<char> seen(total, 0);
    std::uint64_t distinct = 0;
    std::vector<Residue> x(n, 0);
    do {
        std::uint64_t code = 0;
        for (VertexId j = n; j-- > 0;) {
            std::uint64_t y = x[j];
            for (VertexId i : d.in_neighbors(j)) y += x[i];
            code = code * kv + y % kv;
        }
        if (!seen[code]) {
            seen[code] = 1;
            ++distinct;
        }
    } while (advance(x, kv));
    return distinct == total;
}

std::uint64_t
tournament_count(std::size_t n)
{
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

Digraph
tournament_from_mask(std::size_t n, std::uint64_t mask)
{
    if (n == 0) throw InputError("tournament needs at least one vertex");
    if (n > kMaxTournamentOrder) throw CapacityError("tournament order above " + std::to_string(kMaxTournamentOrder));
    std::vector<Arc> arcs;
    std::size_t bit = 0;
    for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = i + 1; j < n; ++j, ++bit) {
            if (mask >> bit & 1) {
                arcs.push_back({i, j});
            } else {
                arcs.push_back({j, i});
            }
        }
    }
    return Digraph::from_arcs(n, arcs);
}

void
for_each_tournament(std::size_t n, const std::function<void(std::uint64_t, const Digraph&)>& visit)
{
    if (n == 0) throw InputError("tournament needs at least one vertex");
    if (n > kMaxTournamentOrder) {
        throw CapacityError("tournament enumeration limited to " +
                            std::to_string(kMaxTournamentOrder) + " vertices");
    }
    const std::uint64_t count = tournament_count(n);
    for (std::uint64_t mask = 0; mask < count; ++mask) visit(mask, tournament_from_mask(n, mask));
}

bool
InstanceSampler::coin(double p)
{
    // 53 random bits -> uniform in [0, 1); portable across standard libraries
    const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    return u < p;
}

std::size_t
InstanceSampler::uniform(std::size_t lo, std::size_t hi)
{
    const std::uint64_t span = hi - lo + 1;
    return lo + static_cast<std::size_t>(rng_() % span);
}

Digraph
InstanceSampler::digraph(std::size_t n, double p)
{
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("arc probability must be in [0, 1]");
    std::vector<Arc> arcs;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = 0; j < n; ++j)
            if (i != j && coin(p)) arcs.push_back({i, j});
    return Digraph::from_arcs(n, arcs);
}

Digraph
InstanceSampler::dag(std::size_t n, double p)
{
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("arc probability must be in [0, 1]");
    const VertexOrdering hidden = ordering(n);
    std::vector<Arc> arcs;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (coin(p)) arcs.push_back({hidden.at(a), hidden.at(b)});
    return Digraph::from_arcs(n, arcs);
}

VertexOrdering
InstanceSampler::ordering(std::size_t n)
{
    std::vector<VertexId> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    // Fisher-Yates with our own index draw so the stream is portable.
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[uniform(0, i - 1)]);
    return VertexOrdering(std::move(perm));
}

Labeling
InstanceSampler::labeling(std::size_t n, Modulus k)
{
    Labeling l(k, n);
    for (std::size_t i = 0; i < n; ++i) l.set(i, static_cast<long long>(rng_() % k.value()));
    return l;
}

Digraph
random_digraph(std::size_t n, double p, std::uint64_t seed)
{
    InstanceSampler sampler(seed);
    return sampler.digraph(n, p);
}

CensusReport
run_theorem_census(std::size_t n_max, std::uint64_t k_max, std::uint64_t brute_budget)
{
    if (n_max > kMaxTournamentOrder) {
        throw CapacityError("census limited to tournaments on at most " +
                            std::to_string(kMaxTournamentOrder) + " vertices");
    }
    if (k_max > kMaxCensusModulus) {
        throw CapacityError("census limited to k <= " + std::to_string(kMaxCensusModulus));
    }
    if (n_max < 1) throw InputError("census needs n_max >= 1");
    if (k_max < 2) throw InputError("census needs k_max >= 2");

    CensusReport report;
    CensusSummary& sum = report.summary;

    for (std::size_t n = 1; n <= n_max; ++n) {
        for_each_tournament(n, [&](std::uint64_t mask, const Digraph& d) {
            ++sum.tournaments;
            const BigInt det = neighborhood_determinant(d);
            const SccDecomposition scc = strong_components(d);
            std::vector<BigInt> component_dets;
            for (const auto& comp : scc.components) {
                component_dets.push_back(neighborhood_determinant(induced_subgraph(d, comp).graph));
            }
            const bool strong = scc.components.size() == 1;
            const bool acyclic = scc.components.size() == n;
            sum.strong_tournaments += strong;
            sum.acyclic_tournaments += acyclic;

            std::vector<std::size_t> path_lengths, star_intervals;
            std::string shape_text = "-";
            std::size_t min_fas = 0;
            if (strong) {
                const auto witnesses = all_minimum_fas(d);
                min_fas = witnesses.front().arcs.size();
                shape_text = describe(classify_arc_induced(d, witnesses.front()));
                bool shape_set = false;
                for (const auto& w : witnesses) {
                    const ArcInducedClass c = classify_arc_induced(d, w);
                    if (auto* p = std::get_if<shape::DirectedPath>(&c)) {
                        path_lengths.push_back(p->arcs);
                    } else if (auto* s = std::get_if<shape::DirectedStar>(&c)) {
                        star_intervals.push_back(s->intervals);
                    } else {
                        continue;
                    }
                    if (!shape_set) {
                        shape_text = describe(c);
                        shape_set = true;
                    }
                }
                sum.path_tournaments += !path_lengths.empty();
                sum.star_tournaments += !star_intervals.empty();
                if (std::adjacent_find(star_intervals.begin(), star_intervals.end(),
                                       std::not_equal_to<>()) != star_intervals.end()) {
                    ++sum.star_interval_conflicts;
                }
            } else {
                min_fas = min_fas_size(d);
            }

            for (std::uint64_t kv = 2; kv <= k_max; ++kv) {
                const Modulus k(static_cast<long long>(kv));
                CensusRecord r;
                r.mask = mask;
                r.n = n;
                r.k = kv;
                r.aw = is_unit_mod(det, k);
                r.componentwise = std::all_of(component_dets.begin(), component_dets.end(),
                                              [k](const BigInt& cd) { return is_unit_mod(cd, k); });
                r.min_fas = min_fas;
                r.shape = shape_text;

                bool agree = r.aw == r.componentwise;
                if (acyclic) agree = agree && r.aw;
                if (power_within(kv, n, brute_budget)) {
                    r.brute = brute_force_is_k_aw(d, k);
                    agree = agree && *r.brute == r.aw;
                    ++sum.brute_checks;
                }
                for (std::size_t m : path_lengths) {
                    const bool predicted = predict_k_aw_path(m, k);
                    if (!r.path_prediction) r.path_prediction = predicted;
                    agree = agree && predicted == r.aw;
                }
                for (std::size_t m : star_intervals) {
                    const bool predicted = predict_k_aw_star(m, k);
                    if (!r.star_prediction) r.star_prediction = predicted;
                    agree = agree && predicted == r.aw;
                }
                sum.path_checks += r.path_prediction.has_value();
                sum.star_checks += r.star_prediction.has_value();
                r.agree = agree;
                sum.disagreements += !agree;
                report.records.push_back(std::move(r));
            }
        });
    }
    sum.records = report.records.size();
    return report;
}

void
write_census(std::ostream& os, const CensusReport& report, bool records)
{
    if (records) {
        os << "# mask\tn\tk\taw\tcomponents\tbrute\tmin_fas\tshape\tpath\tstar\tagree\n";
        for (const CensusRecord& r : report.records) {
            os << r.mask << '\t' << r.n << '\t' << r.k << '\t' << flag(r.aw) << '\t'
               << flag(r.componentwise) << '\t' << flag(r.brute) << '\t' << r.min_fas << '\t'
               << r.shape << '\t' << flag(r.path_prediction) << '\t' << flag(r.star_prediction)
               << '\t' << flag(r.agree) << '\n';
        }
    }
    const CensusSummary& s = report.summary;
    os << "summary\n"
       << "tournaments\t" << s.tournaments << '\n'
       << "strong\t" << s.strong_tournaments << '\n'
       << "acyclic\t" << s.acyclic_tournaments << '\n'
       << "path_witnessed\t" << s.path_tournaments << '\n'
       << "star_witnessed\t" << s.star_tournaments << '\n'
       << "star_interval_conflicts\t" << s.star_interval_conflicts << '\n'
       << "records\t" << s.records << '\n'
       << "path_checks\t" << s.path_checks << '\n'
       << "star_checks\t" << s.star_checks << '\n'
       << "brute_checks\t" << s.brute_checks << '\n'
       << "disagreements\t" << s.disagreements << '\n';
}

} // namespace lightsout

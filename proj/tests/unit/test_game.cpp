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

#include <doctest.h>

#include "lightsout/feedback.hpp"
#include "lightsout/game.hpp"
#include "lightsout/oracle.hpp"
#include "support/oracles.hpp"

using namespace lightsout;

namespace {

Digraph
c3()
{
    const Arc arcs[] = {{0, 1}, {1, 2}, {2, 0}};
    return Digraph::from_arcs(3, arcs);
}

Digraph
path3()
{
    const Arc arcs[] = {{0, 1}, {1, 2}};
    return Digraph::from_arcs(3, arcs);
}

Digraph
two_triangles()
{
    const Arc arcs[] = {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}};
    return Digraph::from_arcs(6, arcs);
}

std::vector<long long>
values(const std::vector<Residue>& r)
{
    return {r.begin(), r.end()};
}

// Calls fn for every vector in Z_k^n.
template <class Fn>
void
for_each_vector(std::size_t n, long long k, Fn fn)
{
    std::vector<long long> x(n, 0);
    for (;;) {
        fn(x);
        std::size_t i = n;
        while (i > 0 && ++x[i - 1] == k) x[--i] = 0;
        if (i == 0) return;
    }
}

} // namespace

TEST_CASE("neighborhood_matrix")
{
    CHECK(neighborhood_matrix(c3()) == IntMatrix{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    CHECK(neighborhood_matrix(Digraph::from_arcs(2, {})) == IntMatrix::identity(2));
    const Arc one[] = {{0, 1}};
    CHECK(neighborhood_matrix(Digraph::from_arcs(2, one)) == IntMatrix{{1, 1}, {0, 1}});
}

TEST_CASE("system_matrix is the transpose of N")
{
    CHECK(system_matrix(c3(), Modulus(3)) == ModMatrix(Modulus(3), {{1, 0, 1}, {1, 1, 0}, {0, 1, 1}}));
    CHECK(system_matrix(Digraph::from_arcs(3, {}), Modulus(5)) ==
          ModMatrix(Modulus(5), IntMatrix::identity(3)));
    InstanceSampler sampler(3);
    for (int i = 0; i < 50; ++i) {
        const Digraph d = sampler.digraph(sampler.uniform(1, 6), 0.4);
        const Modulus k(static_cast<long long>(sampler.uniform(2, 9)));
        CHECK(system_matrix(d, k) == ModMatrix(k, neighborhood_matrix(d).transposed()));
    }
    CHECK_THROWS_AS(system_matrix(c3(), Modulus(1)), InputError);
}

TEST_CASE("apply_toggles examples")
{
    const Modulus k3(3);
    CHECK(apply_toggles(c3(), Labeling(k3, {1, 1, 1}), ToggleVector(k3, {1, 1, 1})).is_zero());
    const Labeling l(k3, {2, 0, 1});
    CHECK(apply_toggles(c3(), l, ToggleVector(k3, 3)) == l);

    const Arc one[] = {{0, 1}};
    const Modulus k2(2);
    const Labeling out = apply_toggles(Digraph::from_arcs(2, one), Labeling(k2, {0, 0}), ToggleVector(k2, {1, 0}));
    CHECK(values(out.residues()) == std::vector<long long>{1, 1});

    CHECK_THROWS_AS(apply_toggles(c3(), Labeling(k3, {1, 1}), ToggleVector(k3, 3)), InputError);
    CHECK_THROWS_AS(apply_toggles(c3(), Labeling(k3, 3), ToggleVector(Modulus(4), 3)), InputError);
}

TEST_CASE("apply_toggles matches single presses and the system matrix")
{
    InstanceSampler sampler(17);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = sampler.uniform(1, 6);
        const Modulus k(static_cast<long long>(sampler.uniform(2, 7)));
        const Digraph d = sampler.digraph(n, 0.35);
        const Labeling l = sampler.labeling(n, k);
        const ToggleVector x(sampler.labeling(n, k));

        const Labeling out = apply_toggles(d, l, x);
        const auto expected = testing::press_one_by_one(d, values(l.residues()), values(x.residues()),
                                                        static_cast<long long>(k.value()));
        CHECK(values(out.residues()) == expected);

        const ModVector mx = system_matrix(d, k).apply(ModVector(x));
        for (std::size_t j = 0; j < n; ++j) CHECK(out[j] == k.add(l[j], mx[j]));
    }
}

TEST_CASE("toggling is an additive group action")
{
    InstanceSampler sampler(19);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = sampler.uniform(1, 6);
        const Modulus k(static_cast<long long>(sampler.uniform(2, 7)));
        const Digraph d = sampler.digraph(n, 0.5);
        const Labeling l = sampler.labeling(n, k);
        const ToggleVector x(sampler.labeling(n, k));
        const ToggleVector y(sampler.labeling(n, k));

        ToggleVector sum(k, n);
        for (std::size_t i = 0; i < n; ++i) sum.set(i, static_cast<long long>(k.add(x[i], y[i])));
        CHECK(apply_toggles(d, apply_toggles(d, l, x), y) == apply_toggles(d, l, sum));
        CHECK(apply_toggles(d, apply_toggles(d, l, y), x) == apply_toggles(d, l, sum));
        CHECK(apply_toggles(d, l, ToggleVector(k, n)) == l);

        // pressing vertex by vertex in a random order gives the same result
        const VertexOrdering order = sampler.ordering(n);
        Labeling stepwise = l;
        for (VertexId v : order.perm()) {
            ToggleVector only(k, n);
            only.set(v, static_cast<long long>(x[v]));
            stepwise = apply_toggles(d, stepwise, only);
        }
        CHECK(stepwise == apply_toggles(d, l, x));
    }
}

TEST_CASE("solve_labeling examples")
{
    const Modulus k3(3), k2(2);
    auto x = solve_labeling(c3(), Labeling(k3, {1, 1, 1}));
    REQUIRE(x);
    CHECK(values(x->residues()) == std::vector<long long>{1, 1, 1});
    CHECK(apply_toggles(c3(), Labeling(k3, {1, 1, 1}), *x).is_zero());

    CHECK_FALSE(solve_labeling(c3(), Labeling(k2, {1, 0, 0})));
    int winners = 0;
    for_each_vector(3, 2, [&](const std::vector<long long>& t) {
        winners += apply_toggles(c3(), Labeling(k2, {1, 0, 0}), ToggleVector(k2, t)).is_zero();
    });
    CHECK(winners == 0);

    InstanceSampler sampler(23);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = sampler.uniform(1, 7);
        const Modulus k(static_cast<long long>(sampler.uniform(2, 12)));
        const Digraph dag = sampler.dag(n, 0.5);
        const Labeling l = sampler.labeling(n, k);
        const auto sol = solve_labeling(dag, l);
        REQUIRE(sol);
        CHECK(apply_toggles(dag, l, *sol).is_zero());
    }
    CHECK_THROWS_AS(solve_labeling(c3(), Labeling(k3, 2)), InputError);
}

TEST_CASE("solve_labeling and is_k_aw against exhaustive search, n <= 3, k <= 4")
{
    for (std::size_t n = 1; n <= 3; ++n) {
        for (const Digraph& d : testing::all_digraphs(n)) {
            for (long long kv = 2; kv <= 4; ++kv) {
                const Modulus k(kv);
                bool every_label_wins = true;
                for_each_vector(n, kv, [&](const std::vector<long long>& lv) {
                    const Labeling l(k, lv);
                    bool winnable = false;
                    for_each_vector(n, kv, [&](const std::vector<long long>& tv) {
                        winnable = winnable || apply_toggles(d, l, ToggleVector(k, tv)).is_zero();
                    });
                    const auto sol = solve_labeling(d, l);
                    CHECK(sol.has_value() == winnable);
                    if (sol) CHECK(apply_toggles(d, l, *sol).is_zero());
                    every_label_wins = every_label_wins && winnable;
                });
                CHECK(is_k_aw(d, k) == every_label_wins);
            }
        }
    }
}

TEST_CASE("is_k_aw examples")
{
    CHECK(neighborhood_determinant(c3()) == 2);
    CHECK_FALSE(is_k_aw(c3(), Modulus(2)));
    CHECK(is_k_aw(c3(), Modulus(3)));
    for (long long k = 2; k <= 12; ++k) CHECK(is_k_aw(path3(), Modulus(k)));
    CHECK(is_k_aw(Digraph(), Modulus(2)));  // empty digraph, det of 0x0 is 1
}

TEST_CASE("is_k_aw_componentwise")
{
    CHECK_FALSE(is_k_aw_componentwise(two_triangles(), Modulus(2)));
    CHECK(is_k_aw_componentwise(two_triangles(), Modulus(3)));
    CHECK(is_k_aw(two_triangles(), Modulus(3)));
    CHECK_FALSE(is_k_aw(two_triangles(), Modulus(2)));
    for (long long k = 2; k <= 10; ++k) CHECK(is_k_aw_componentwise(path3(), Modulus(k)));

    InstanceSampler sampler(29);
    for (int trial = 0; trial < 600; ++trial) {
        const std::size_t n = sampler.uniform(1, 7);
        const double p = 0.1 + 0.1 * static_cast<double>(sampler.uniform(0, 5));
        const Digraph d = sampler.digraph(n, p);
        for (long long k = 2; k <= 6; ++k) {
            CHECK(is_k_aw(d, Modulus(k)) == is_k_aw_componentwise(d, Modulus(k)));
        }
    }
}

TEST_CASE("greedy_play examples")
{
    const Modulus k3(3), k2(2);
    PlayTranscript t = greedy_play(path3(), VertexOrdering::identity(3), Labeling(k3, {1, 2, 0}));
    CHECK(t.presses == std::vector<Residue>{2, 2, 1});
    CHECK(t.final_labeling.is_zero());

    t = greedy_play(c3(), VertexOrdering::identity(3), Labeling(k2, {1, 1, 1}));
    CHECK(t.presses == std::vector<Residue>{1, 0, 1});
    CHECK(values(t.final_labeling.residues()) == std::vector<long long>{1, 0, 0});

    t = greedy_play(c3(), VertexOrdering({1, 2, 0}), Labeling(Modulus(5), 3));
    CHECK(t.presses == std::vector<Residue>{0, 0, 0});
    CHECK(t.final_labeling.is_zero());

    CHECK_THROWS_AS(greedy_play(c3(), VertexOrdering::identity(2), Labeling(k2, 3)), InputError);
}

TEST_CASE("greedy_play transcript consistency and the non-head lemma")
{
    InstanceSampler sampler(31);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = sampler.uniform(1, 8);
        const Modulus k(static_cast<long long>(sampler.uniform(2, 9)));
        const Digraph d = sampler.digraph(n, 0.4);
        const VertexOrdering order = sampler.ordering(n);
        const Labeling l = sampler.labeling(n, k);

        const PlayTranscript t = greedy_play(d, order, l);
        CHECK(t.final_labeling == apply_toggles(d, l, t.toggles()));

        const FeedbackArcSet fas = feedback_arcs_of_ordering(d, order);
        std::vector<char> head(n, 0);
        for (const Arc& a : fas.arcs) head[a.head] = 1;
        for (VertexId v = 0; v < n; ++v)
            if (!head[v]) CHECK(t.final_labeling[v] == 0);
    }
}

TEST_CASE("greedy_play wins on acyclic orderings")
{
    InstanceSampler sampler(37);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = sampler.uniform(1, 7);
        const Digraph d = sampler.dag(n, 0.5);
        const auto order = acyclic_ordering(d);
        REQUIRE(order);
        for (long long kv = 2; kv <= 12; ++kv) {
            const Modulus k(kv);
            CHECK(is_k_aw(d, k));
            CHECK(greedy_play(d, *order, sampler.labeling(n, k)).final_labeling.is_zero());
        }
    }
}

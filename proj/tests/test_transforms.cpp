#include <catch2/catch.hpp>

#include <cmath>

#include "sombor/extremal.hpp"
#include "sombor/structure.hpp"
#include "sombor/transforms.hpp"
#include "test_util.hpp"

using Catch::Matchers::Contains;
using sombor::Graph;
using test_util::graph_of;

namespace {

constexpr double kTol = 1e-9;

double so(const Graph& g) { return sombor::sombor_index(g).value; }

int cycle_rank(const Graph& g) { return g.size() - g.order() + 1; }

const std::vector<sombor::OperationKind> kAllOps{
    sombor::OperationKind::tau, sombor::OperationKind::alpha, sombor::OperationKind::beta,
    sombor::OperationKind::gamma, sombor::OperationKind::delta};

}  // namespace

TEST_CASE("tau switch reproduces the worked tree instance", "[transforms]") {
    // path u_1..u_4 with leaves x_1, y_1 hanging from u_2
    const Graph host = graph_of(6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {1, 5}});
    const sombor::TauWitness witness{{0, 1, 2, 3}, 2, 4, 5};

    CHECK(so(host) ==
          Approx(3 * std::sqrt(17.0) + std::sqrt(20.0) + std::sqrt(5.0)).margin(kTol).epsilon(0.0));
    CHECK(so(host) == Approx(19.077521).margin(1e-6).epsilon(0.0));

    const Graph switched = sombor::tau_switch(host, witness);
    CHECK(switched == graph_of(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}}));
    CHECK(so(switched) ==
          Approx(2 * std::sqrt(10.0) + std::sqrt(13.0) + std::sqrt(8.0) + std::sqrt(5.0))
              .margin(kTol).epsilon(0.0));
    CHECK(so(switched) == Approx(14.994602).margin(1e-6).epsilon(0.0));
    CHECK(test_util::brute_sombor(switched) == Approx(so(switched)).margin(kTol).epsilon(0.0));
}

TEST_CASE("tau witness validation names the violated condition", "[transforms]") {
    // y_1 not adjacent to u_r: the branch vertex has only three neighbors
    const Graph three_neighbors = graph_of(6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {4, 5}});
    CHECK_THROWS_WITH(sombor::tau_switch(three_neighbors, {{0, 1, 2, 3}, 2, 4, 5}),
                      Contains("y_1"));

    // u_1 carries an extra pendant vertex, so it is not a leaf
    const Graph heavy_u1 = graph_of(7, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {1, 5}, {0, 6}});
    CHECK_THROWS_WITH(sombor::tau_switch(heavy_u1, {{0, 1, 2, 3}, 2, 4, 5}), Contains("u_1"));

    // host with a cycle is not a tree
    const Graph cyclic = graph_of(6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {1, 5}, {0, 5}});
    CHECK_THROWS_WITH(sombor::tau_switch(cyclic, {{0, 1, 2, 3}, 2, 4, 5}), Contains("tree"));

    const Graph host = graph_of(6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {1, 5}});
    CHECK_THROWS_AS(sombor::tau_switch(host, {{0, 1, 2, 3}, 1, 4, 5}), std::invalid_argument);
    CHECK_THROWS_AS(sombor::tau_switch(host, {{0, 1, 2, 3}, 2, 4, 4}), std::invalid_argument);
}

TEST_CASE("alpha switch merges two triangles into the pendant-cycle family", "[transforms]") {
    const Graph host =
        graph_of(7, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 6}, {3, 6}});
    const sombor::AlphaWitness witness{{0, 1, 2}, {3, 4, 5}, {6}};

    CHECK(so(host) == Approx(6 * std::sqrt(13.0) + 2 * std::sqrt(8.0)).margin(kTol).epsilon(0.0));
    CHECK(so(host) == Approx(27.290162).margin(1e-6).epsilon(0.0));

    const Graph switched = sombor::alpha_switch(host, witness);
    CHECK(switched.order() == 7);
    CHECK(switched.size() == 7);
    CHECK(sombor::are_isomorphic(switched, sombor::build_pnk(7, 2)));
    CHECK(so(switched) ==
          Approx(6 * std::sqrt(2.0) + std::sqrt(5.0) + 3 * std::sqrt(13.0)).margin(kTol).epsilon(0.0));
    CHECK(so(switched) == Approx(21.538003).margin(1e-6).epsilon(0.0));
}

TEST_CASE("alpha witness validation rejects broken patterns", "[transforms]") {
    const Graph host =
        graph_of(7, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 6}, {3, 6}});
    // overlapping cycles
    CHECK_THROWS_WITH(sombor::alpha_switch(host, {{0, 1, 2}, {2, 4, 5}, {6}}),
                      Contains("distinct"));
    // empty bridge path
    CHECK_THROWS_WITH(sombor::alpha_switch(host, {{0, 1, 2}, {3, 4, 5}, {}}),
                      Contains("nonempty"));
    // lists that do not induce cycles
    CHECK_THROWS_AS(sombor::alpha_switch(host, {{0, 1, 3}, {2, 4, 5}, {6}}),
                    std::invalid_argument);
}

TEST_CASE("beta switch concatenates the pendant paths", "[transforms]") {
    const Graph host = graph_of(5, {{0, 1}, {1, 2}, {2, 0}, {1, 3}, {0, 4}});
    const sombor::BetaWitness witness{{0, 1, 2}, {3}, {4}};

    CHECK(so(host) ==
          Approx(std::sqrt(18.0) + 2 * std::sqrt(13.0) + 2 * std::sqrt(10.0)).margin(kTol).epsilon(0.0));
    CHECK(so(host) == Approx(17.778299).margin(1e-6).epsilon(0.0));

    const Graph switched = sombor::beta_switch(host, witness);
    CHECK(sombor::are_isomorphic(switched, sombor::build_pnk(5, 2)));
    CHECK(so(switched) ==
          Approx(3 * std::sqrt(13.0) + std::sqrt(8.0) + std::sqrt(5.0)).margin(kTol).epsilon(0.0));
    CHECK(so(switched) == Approx(15.881149).margin(1e-6).epsilon(0.0));
}

TEST_CASE("beta witness validation rejects broken patterns", "[transforms]") {
    // v_1 hangs from u_3 instead of u_2
    const Graph wrong_anchor = graph_of(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {0, 4}});
    CHECK_THROWS_WITH(sombor::beta_switch(wrong_anchor, {{0, 1, 2}, {3}, {4}}),
                      Contains("u_2"));

    // path_w continues past the declared end, so w_xi is not pendant
    const Graph long_w = graph_of(6, {{0, 1}, {1, 2}, {2, 0}, {1, 3}, {0, 4}, {4, 5}});
    CHECK_THROWS_WITH(sombor::beta_switch(long_w, {{0, 1, 2}, {3}, {4}}), Contains("w_xi"));
}

TEST_CASE("gamma switch opens the theta graph into a cycle, hitting the proof bound",
          "[transforms]") {
    const Graph host = graph_of(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}, {4, 0}});
    const sombor::GammaWitness witness{{0, 1, 2, 3}, {4}, 3};

    CHECK(so(host) == Approx(6 * std::sqrt(13.0)).margin(kTol).epsilon(0.0));
    CHECK(so(host) == Approx(21.633308).margin(1e-6).epsilon(0.0));

    const Graph switched = sombor::gamma_switch(host, witness);
    CHECK(sombor::are_isomorphic(switched, sombor::build_cycle(5)));
    CHECK(so(switched) == Approx(5 * std::sqrt(8.0)).margin(kTol).epsilon(0.0));
    CHECK(so(switched) == Approx(14.142136).margin(1e-6).epsilon(0.0));
    // the decrease equals the proof's bound exactly on this instance
    CHECK(so(host) - so(switched) ==
          Approx(6 * std::sqrt(13.0) - 5 * std::sqrt(8.0)).margin(kTol).epsilon(0.0));
}

TEST_CASE("gamma witness validation rejects broken patterns", "[transforms]") {
    // u_{r-1} u_l already present
    const Graph chorded =
        graph_of(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}, {4, 0}, {1, 3}});
    CHECK_THROWS_WITH(sombor::gamma_switch(chorded, {{0, 1, 2, 3}, {4}, 3}),
                      Contains("absent"));

    // u_1 has degree 4
    const Graph heavy_u1 =
        graph_of(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}, {4, 0}, {0, 5}});
    CHECK_THROWS_WITH(sombor::gamma_switch(heavy_u1, {{0, 1, 2, 3}, {4}, 3}), Contains("u_1"));

    const Graph host = graph_of(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}, {4, 0}});
    CHECK_THROWS_AS(sombor::gamma_switch(host, {{0, 1, 2, 3}, {4}, 2}), std::invalid_argument);
}

TEST_CASE("delta switch concatenates the fork branches", "[transforms]") {
    const Graph host = graph_of(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {0, 4}});
    const sombor::DeltaWitness witness{{0, 1, 2}, {}, {3}, {4}};

    CHECK(so(host) ==
          Approx(2 * std::sqrt(20.0) + std::sqrt(8.0) + 2 * std::sqrt(17.0)).margin(kTol).epsilon(0.0));
    CHECK(so(host) == Approx(20.018910).margin(1e-6).epsilon(0.0));

    const Graph switched = sombor::delta_switch(host, witness);
    CHECK(sombor::are_isomorphic(switched, sombor::build_pnk(5, 2)));
    CHECK(so(switched) == Approx(15.881149).margin(1e-6).epsilon(0.0));

    // nonempty stem: the fork sits at the stem tip
    const Graph stemmed = graph_of(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {3, 5}});
    const Graph merged = sombor::delta_switch(stemmed, {{0, 1, 2}, {3}, {4}, {5}});
    CHECK(sombor::are_isomorphic(merged, sombor::build_pnk(6, 3)));
}

TEST_CASE("delta witness validation rejects broken patterns", "[transforms]") {
    const Graph host = graph_of(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {0, 4}});
    CHECK_THROWS_WITH(sombor::delta_switch(host, {{0, 1, 2}, {}, {}, {4}}),
                      Contains("nonempty"));
    CHECK_THROWS_WITH(sombor::delta_switch(host, {{0, 1, 2}, {}, {3}, {}}),
                      Contains("nonempty"));
    // declared attachment lacks the branch edges
    CHECK_THROWS_AS(sombor::delta_switch(host, {{0, 1, 2}, {3}, {4}, {}}),
                    std::invalid_argument);
}

TEST_CASE("generated instances are deterministic per seed", "[transforms]") {
    for (const auto kind : kAllOps) {
        test_util::Rng rng(99);
        const auto params = sombor::random_params(kind, rng);
        const auto a = sombor::generate_instance(params, 1234);
        const auto b = sombor::generate_instance(params, 1234);
        CHECK(a.graph == b.graph);
        CHECK(sombor::apply_switch(a.graph, a.witness) == sombor::apply_switch(b.graph, b.witness));
    }
}

TEST_CASE("generated instances reproduce the worked examples", "[transforms]") {
    const auto tau = sombor::generate_instance(sombor::TauParams{4, 1, 1}, 1);
    CHECK(sombor::are_isomorphic(tau.graph,
                                 graph_of(6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {1, 5}})));

    const auto alpha = sombor::generate_instance(sombor::AlphaParams{3, 3, 1}, 7);
    CHECK(alpha.graph ==
          graph_of(7, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 6}, {3, 6}}));

    const auto gamma = sombor::generate_instance(sombor::GammaParams{4, 4, 3}, 0);
    CHECK(gamma.graph == graph_of(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}, {4, 0}}));
}

TEST_CASE("generator rejects infeasible size parameters", "[transforms]") {
    CHECK_THROWS_AS(sombor::generate_instance(sombor::TauParams{4, 0, 1}, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(sombor::generate_instance(sombor::TauParams{18, 5, 5}, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(sombor::generate_instance(sombor::GammaParams{4, 2, 3}, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(sombor::generate_instance(sombor::AlphaParams{2, 3, 1}, 0),
                    std::invalid_argument);
}

TEST_CASE("every switch strictly decreases the index on generated instances",
          "[transforms][property]") {
    for (const auto kind : kAllOps) {
        const auto trials = sombor::run_lemma_trials(kind, 120, 42);
        REQUIRE(trials.size() == 120);
        for (const auto& trial : trials) {
            REQUIRE(trial.margin > 1e-6);
            REQUIRE(trial.host_so - trial.result_so == trial.margin);
        }
    }
}

TEST_CASE("switches preserve order and shift edges as specified", "[transforms][property]") {
    test_util::Rng rng(4242);
    for (const auto kind : kAllOps) {
        for (int round = 0; round < 40; ++round) {
            const auto params = sombor::random_params(kind, rng);
            const auto instance = sombor::generate_instance(params, rng.next());
            const Graph& host = instance.graph;
            const Graph switched = sombor::apply_switch(host, instance.witness);
            REQUIRE(switched.order() == host.order());
            switch (kind) {
                case sombor::OperationKind::tau:
                    REQUIRE(switched.size() == host.size());
                    REQUIRE(sombor::is_connected(switched));
                    REQUIRE(switched.size() == switched.order() - 1);  // still a tree
                    break;
                case sombor::OperationKind::alpha:
                    REQUIRE(switched.size() == host.size() - 1);
                    REQUIRE(sombor::count_bridges(switched) == sombor::count_bridges(host));
                    break;
                case sombor::OperationKind::beta:
                    REQUIRE(switched.size() == host.size());
                    break;
                case sombor::OperationKind::gamma:
                    REQUIRE(switched.size() == host.size() - 1);
                    REQUIRE(cycle_rank(host) == 2);
                    REQUIRE(cycle_rank(switched) == 1);
                    break;
                case sombor::OperationKind::delta: {
                    REQUIRE(switched.size() == host.size());
                    REQUIRE(sombor::count_bridges(switched) == sombor::count_bridges(host));
                    const auto cycle = sombor::unique_cycle(switched);
                    REQUIRE(cycle.has_value());
                    REQUIRE(static_cast<int>(cycle->size()) ==
                            std::get<sombor::DeltaParams>(params).cycle_len);
                    break;
                }
            }
        }
    }
}

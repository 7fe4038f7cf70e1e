#include <catch2/catch.hpp>

#include <sstream>

#include "sombor/graph_io.hpp"
#include "test_util.hpp"

using sombor::Graph;
namespace io = sombor::io;

TEST_CASE("graph6 matches the format's published encodings", "[io]") {
    CHECK(io::to_graph6(sombor::build_complete(3)) == "Bw");
    CHECK(io::to_graph6(sombor::build_cycle(5)) == "Dhc");
    CHECK(io::from_graph6("Bw") == sombor::build_complete(3));
    CHECK(io::from_graph6("Dhc") == sombor::build_cycle(5));
    CHECK(io::to_graph6(sombor::make_empty(1)) == "@");
}

TEST_CASE("graph6 round-trips exactly, including long-form orders", "[io][property]") {
    test_util::Rng rng(11);
    for (int n : {1, 2, 5, 8, 13, 32, 62, 63, 64}) {
        for (int round = 0; round < 8; ++round) {
            Graph g(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng.below(3) == 0) g = sombor::add_edge(g, u, v);
            const std::string encoded = io::to_graph6(g);
            CHECK(io::from_graph6(encoded) == g);
        }
    }
}

TEST_CASE("graph6 parser reports malformed input with positions", "[io]") {
    using Catch::Matchers::Contains;
    CHECK_THROWS_AS(io::from_graph6("B"), io::parse_error);
    CHECK_THROWS_AS(io::from_graph6("Bw "), io::parse_error);
    CHECK_THROWS_AS(io::from_graph6("B\x01"), io::parse_error);
    CHECK_THROWS_WITH(io::from_graph6("Bw!", 4), Contains("line 4"));
    try {
        io::from_graph6("B");
    } catch (const io::parse_error& e) {
        CHECK(e.line() == 1);
        CHECK(e.byte() == 1);
    }
}

TEST_CASE("graph6 stream reader skips headers and blank lines", "[io]") {
    std::istringstream in(">>graph6<<Bw\n\nDhc\n");
    const auto graphs = io::read_graph6(in);
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[0] == sombor::build_complete(3));
    CHECK(graphs[1] == sombor::build_cycle(5));
}

TEST_CASE("edge-list format round-trips and validates", "[io]") {
    const Graph g = test_util::graph_of(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    const std::string text = io::to_edge_list(g);
    CHECK(text == "4 4\n0 1\n0 3\n1 2\n2 3\n");
    std::istringstream in(text);
    const auto parsed = io::read_edge_list(in);
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0] == g);

    std::istringstream two_blocks("2 1\n0 1\n3 2\n0 1\n1 2\n");
    const auto blocks = io::read_edge_list(two_blocks);
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0] == sombor::build_complete(2));
    CHECK(blocks[1] == sombor::build_path(3));

    std::istringstream bad_label("2 1\n0 7\n");
    CHECK_THROWS_AS(io::read_edge_list(bad_label), io::parse_error);
    std::istringstream truncated("3 2\n0 1\n");
    CHECK_THROWS_AS(io::read_edge_list(truncated), io::parse_error);
    std::istringstream not_a_number("2 x\n");
    CHECK_THROWS_AS(io::read_edge_list(not_a_number), io::parse_error);
}

TEST_CASE("edge-list round-trip on random graphs", "[io][property]") {
    test_util::Rng rng(13);
    for (int round = 0; round < 30; ++round) {
        const Graph g = test_util::random_connected(7, rng);
        std::istringstream in(io::to_edge_list(g));
        const auto parsed = io::read_edge_list(in);
        REQUIRE(parsed.size() == 1);
        CHECK(parsed[0] == g);
    }
}

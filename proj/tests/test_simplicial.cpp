#include "acyc/homology.hpp"
#include "acyc/simplicial.hpp"

#include "complexes.hpp"
#include "support.hpp"

#include "doctest.h"

#include <set>

using namespace acyc;
using namespace acyc::testing;

namespace {

// Exhaustive: every vertex subset whose members are pairwise adjacent is a
// simplex.
bool flag_by_scan(const SimplicialComplex& c) {
    const std::size_t n = c.vertex_count();
    REQUIRE(n <= 20);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        Simplex s;
        for (VertexId v = 0; v < n; ++v)
            if (mask & (1u << v)) s.push_back(v);
        bool clique = true;
        for (std::size_t i = 0; i < s.size() && clique; ++i)
            for (std::size_t j = i + 1; j < s.size() && clique; ++j) clique = c.contains({s[i], s[j]});
        if (clique && !c.contains(s)) return false;
    }
    return true;
}

bool is_cycle_graph(const SimplicialComplex& c, std::size_t n) {
    if (c.dimension() != 1 || c.count(0) != n || c.count(1) != n) return false;
    std::vector<int> degree(n);
    for (const auto& e : c.simplices(1)) ++degree[e[0]], ++degree[e[1]];
    return std::all_of(degree.begin(), degree.end(), [](int d) { return d == 2; }) &&
           connected_components(c).size() == 1;
}

}  // namespace

TEST_CASE("flag complexes of small graphs") {
    SUBCASE("no edges") {
        Graph g{{"a", "b"}, {}};
        auto c = flag_complex(g);
        CHECK(c.size() == 2);
        CHECK(c.dimension() == 0);
    }
    SUBCASE("triangle graph fills in") {
        Graph g{{"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}};
        CHECK(flag_complex(g) == full_triangle());
    }
    SUBCASE("five-cycle stays one-dimensional") {
        Graph g{{"0", "1", "2", "3", "4"}, {{"0", "1"}, {"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "0"}}};
        auto c = flag_complex(g);
        CHECK(f_vector(c) == std::vector<std::size_t>{5, 5});
        CHECK(is_flag(c));
    }
    SUBCASE("bad graphs") {
        CHECK_THROWS_AS(flag_complex(Graph{{"a"}, {{"a", "a"}}}), ComplexError);
        CHECK_THROWS_AS(flag_complex(Graph{{"a", "b"}, {{"a", "b"}, {"b", "a"}}}), ComplexError);
        CHECK_THROWS_AS(flag_complex(Graph{{"a"}, {{"a", "z"}}}), ComplexError);
    }
}

TEST_CASE("flagness") {
    CHECK(is_flag(full_triangle()));
    CHECK_FALSE(is_flag(hollow_triangle()));
    const auto sd = barycentric_subdivision(hollow_triangle());
    CHECK(is_flag(sd));
    CHECK(flag_by_scan(sd));
    CHECK_FALSE(flag_by_scan(hollow_triangle()));
}

TEST_CASE("barycentric subdivision") {
    CHECK(f_vector(barycentric_subdivision(make({{"a", "b"}}))) == std::vector<std::size_t>{3, 2});
    CHECK(is_cycle_graph(barycentric_subdivision(polygon(5)), 10));
    CHECK(f_vector(barycentric_subdivision(full_triangle())) == std::vector<std::size_t>{7, 12, 6});
    const auto sd = barycentric_subdivision(make({{"a", "b"}}));
    CHECK(sd.find_vertex("b{a,b}").has_value());
    CHECK(sd.find_vertex("b{a}").has_value());
}

TEST_CASE("links and stars") {
    const auto oct = load_complex("octahedron");
    for (const auto& v : oct.vertices()) CHECK(is_cycle_graph(link(oct, v), 4));
    const auto pent = polygon(5);
    for (const auto& v : pent.vertices()) {
        auto l = link(pent, v);
        CHECK(l.dimension() == 0);
        CHECK(l.count(0) == 2);
    }
    const auto ten = barycentric_subdivision(pent);
    const auto st = star(ten, "b{0}");
    CHECK(f_vector(st) == std::vector<std::size_t>{3, 2});
    CHECK(connected_components(st).size() == 1);
    CHECK_THROWS_AS(link(pent, "nope"), ComplexError);
    CHECK_THROWS_AS(star(pent, "nope"), ComplexError);
}

TEST_CASE("joins") {
    CHECK(f_vector(join(make({{"p"}}), make({{"q"}}))) == std::vector<std::size_t>{2, 1});
    const auto sq = polygon(4);
    const auto s0 = make({{"n"}, {"s"}});
    const auto susp = join(sq, s0);
    CHECK(f_vector(susp) == std::vector<std::size_t>{6, 12, 8});
    CHECK(is_pseudomanifold(susp, 2));
    CHECK(homology(susp).betti_numbers() == std::vector<std::size_t>{1, 0, 1});

    const auto hex = load_complex("hexagon");
    CHECK(join_needs_relabel(hex, hex));
    const auto s3 = join(hex, hex);
    CHECK(s3.find_vertex("a:0").has_value());
    const auto h = homology(s3);
    CHECK(h.betti_numbers() == std::vector<std::size_t>{1, 0, 0, 1});
    for (int k = 0; k <= 3; ++k) CHECK(h.torsion(k).empty());
}

TEST_CASE("connected components") {
    CHECK(connected_components(polygon(5)).size() == 1);
    CHECK(connected_components(load_complex("two_points")).size() == 2);
    const auto c = make({{"p"}, {"x", "y"}, {"y", "z"}, {"x", "z"}});
    const auto parts = connected_components(c);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].vertices() == std::vector<std::string>{"p"});
    CHECK(euler_characteristic(parts[0]) == 1);
    CHECK(euler_characteristic(parts[1]) == 0);
    CHECK(connected_components(SimplicialComplex()).empty());
}

TEST_CASE("Euler characteristics") {
    CHECK(euler_characteristic(polygon(5)) == 0);
    CHECK(euler_characteristic(load_complex("octahedron")) == 2);
    const auto rp2 = load_complex("rp2_6");
    CHECK(f_vector(rp2) == std::vector<std::size_t>{6, 15, 10});
    CHECK(euler_characteristic(rp2) == 1);
    CHECK(euler_characteristic(SimplicialComplex()) == 0);
}

TEST_CASE("pseudomanifolds") {
    CHECK(is_pseudomanifold(load_complex("octahedron"), 2));
    CHECK(is_pseudomanifold(hollow_triangle(), 1));
    CHECK_FALSE(is_pseudomanifold(make({{"a", "b", "c"}, {"a", "b", "d"}, {"a", "b", "e"}}), 2));
    // Two disjoint triangles: every edge in two facets, but not strongly connected.
    CHECK_FALSE(is_pseudomanifold(make({{"a", "b"}, {"b", "c"}, {"a", "c"}, {"x", "y"}, {"y", "z"}, {"x", "z"}}), 1));
    CHECK_FALSE(is_pseudomanifold(full_triangle(), 2));
}

TEST_CASE("corpus invariants") {
    for (const auto& name : names_in("complexes")) {
        CAPTURE(name);
        const auto c = load_complex(name);
        const auto& exp = expected()["complexes"][name];
        CHECK(f_vector(c) == exp["f_vector"].get<std::vector<std::size_t>>());
        CHECK(euler_characteristic(c) == exp["euler"].get<long long>());
        CHECK(is_flag(c) == exp["flag"].get<bool>());

        long long alternating = 0;
        const auto betti = homology(c).betti_numbers();
        for (std::size_t k = 0; k < betti.size(); ++k) alternating += (k % 2 ? -1 : 1) * static_cast<long long>(betti[k]);
        CHECK(alternating == euler_characteristic(c));

        if (is_flag(c)) CHECK(flag_complex(one_skeleton(c)) == c);

        if (c.size() < 3000) {
            const auto sd = barycentric_subdivision(c);
            CHECK(sd.vertex_count() == c.size());
            CHECK(euler_characteristic(sd) == euler_characteristic(c));
            CHECK(is_flag(sd));
        }

        std::set<std::string> seen;
        std::size_t total = 0;
        for (const auto& part : connected_components(c)) {
            CHECK(is_subcomplex(part, c));
            for (int d = 0; d <= part.dimension(); ++d)
                for (const auto& s : part.simplices(d)) {
                    ++total;
                    CHECK(seen.insert(part.simplex_label(s)).second);
                }
        }
        CHECK(total == c.size());
    }
}

TEST_CASE("join Euler characteristic identity") {
    const std::vector<std::string> small{"hexagon", "pentagon", "square", "triangle_boundary", "full_triangle",
                                         "single_edge", "two_points", "rp2_6", "octahedron"};
    for (const auto& a : small)
        for (const auto& b : small) {
            CAPTURE(a);
            CAPTURE(b);
            const auto x = load_complex(a), y = load_complex(b);
            const long long ca = euler_characteristic(x), cb = euler_characteristic(y);
            CHECK(euler_characteristic(join(x, y)) == ca + cb - ca * cb);
        }
}

TEST_CASE("rejects malformed complexes") {
    CHECK_THROWS_AS(SimplicialComplex::from_facets({"a", "a"}, {}), ComplexError);
    CHECK_THROWS_AS(SimplicialComplex::from_facets({"a"}, {{"a", "b"}}), ComplexError);
    CHECK_THROWS_AS(SimplicialComplex::from_facets({"a"}, {{}}), ComplexError);
    CHECK_THROWS_AS(SimplicialComplex({"a", "b"}, {{0, 0}}), ComplexError);
}

#include "acyc/catalog.hpp"
#include "acyc/orbit.hpp"

#include "complexes.hpp"
#include "oracles.hpp"
#include "support.hpp"

#include "doctest.h"

#include <algorithm>
#include <random>

using namespace acyc;
using namespace acyc::testing;

namespace {

std::size_t object_of_order(const OrbitCategory& oc, std::size_t order) {
    for (std::size_t i = 0; i < oc.object_count(); ++i)
        if (oc.object(i).order() == order) return i;
    FAIL("no object of order " << order);
    return 0;
}

std::vector<std::size_t> sorted_orbits(const GSet& s) {
    auto o = s.orbit_sizes();
    std::sort(o.begin(), o.end());
    return o;
}

/// The same action with vertex labels renamed through a random bijection, so
/// internal vertex ids are permuted too.
GroupAction relabel(const GroupAction& a, std::mt19937_64& rng) {
    const auto& c = a.complex();
    std::vector<std::size_t> perm(c.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::string> names;
    for (auto p : perm) names.push_back("v" + std::to_string(1000 + p));
    std::vector<std::vector<std::string>> facets;
    for (const auto& f : c.facets()) {
        std::vector<std::string> g;
        for (auto v : f) g.push_back(names[v]);
        facets.push_back(g);
    }
    auto renamed = SimplicialComplex::from_facets(names, facets);
    std::vector<VertexId> to_new(c.vertex_count());
    for (VertexId v = 0; v < to_new.size(); ++v) to_new[v] = *renamed.find_vertex(names[v]);
    std::vector<Permutation> maps;
    for (std::size_t g = 0; g < a.group().order(); ++g) {
        Permutation p(c.vertex_count());
        for (VertexId v = 0; v < p.size(); ++v) p[to_new[v]] = to_new[a.vertex_map(g)[v]];
        maps.push_back(p);
    }
    return GroupAction(a.group(), std::move(renamed), std::move(maps));
}

}  // namespace

TEST_CASE("orbit category of Z/2") {
    const OrbitCategory oc(catalog_group("Z2"));
    REQUIRE(oc.object_count() == 2);
    CHECK(oc.object(0).trivial());
    CHECK(oc.hom(0, 0).size() == 2);
    CHECK(oc.hom(0, 1).size() == 1);
    CHECK(oc.hom(1, 0).size() == 0);
    CHECK(oc.hom(1, 1).size() == 1);
}

TEST_CASE("hom sets of normal and self-normalizing subgroups") {
    const OrbitCategory z4(catalog_group("Z4"));
    const auto i = object_of_order(z4, 2);
    CHECK(z4.hom(i, i).size() == 2);
    const OrbitCategory s3(catalog_group("S3"));
    const auto t = object_of_order(s3, 2);
    CHECK(s3.hom(t, t).size() == 1);
}

TEST_CASE("hom sets match brute-force enumeration of equivariant maps") {
    for (const char* name : {"Z2", "Z3", "Z4", "V4", "S3"}) {
        CAPTURE(name);
        const OrbitCategory oc(catalog_group(name));
        for (std::size_t i = 0; i < oc.object_count(); ++i)
            for (std::size_t j = 0; j < oc.object_count(); ++j) {
                const auto s = oracle::coset_gset(oc.group(), oc.object(i).elements);
                const auto t = oracle::coset_gset(oc.group(), oc.object(j).elements);
                CHECK(oc.hom(i, j).size() == oracle::count_equivariant_maps(s, t));
            }
    }
}

TEST_CASE("composition laws hold for every small group") {
    for (const auto& [name, g] : small_groups(12)) {
        CAPTURE(name);
        const OrbitCategory oc(g);
        CHECK(oc.verify());
        CHECK(oc.object_count() == oracle::subgroup_class_reps(g).size());
        CHECK_NOTHROW(check_functorial(oc, nabla(oc)));
    }
}

TEST_CASE("balanced products of fixed-point diagrams") {
    const OrbitCategory oc(catalog_group("Z2"));
    const auto y = nabla(oc);
    const auto& g = oc.group();
    SUBCASE("one point") {
        const auto s = GSet::cosets(g, whole_group(g));
        const auto out = balanced_product_sets(oc, fixed_point_diagram(oc, s), y);
        CHECK(out.size == 1);
    }
    SUBCASE("free orbit") {
        const auto s = GSet::cosets(g, trivial_subgroup(g));
        const auto out = balanced_product_sets(oc, fixed_point_diagram(oc, s), y);
        CHECK(out.size == 2);
        CHECK(sorted_orbits(out) == std::vector<std::size_t>{2});
    }
    SUBCASE("free orbit plus a point") {
        const auto s = GSet::disjoint_union(GSet::cosets(g, trivial_subgroup(g)), GSet::cosets(g, whole_group(g)));
        const auto x = fixed_point_diagram(oc, s);
        CHECK(x.sizes == std::vector<std::size_t>{3, 1});
        const auto out = balanced_product_sets(oc, x, y);
        CHECK(out.size == 3);
        CHECK(sorted_orbits(out) == std::vector<std::size_t>{1, 2});
    }
    SUBCASE("broken diagrams are rejected") {
        const auto s = GSet::disjoint_union(GSet::cosets(g, trivial_subgroup(g)), GSet::cosets(g, whole_group(g)));
        auto x = fixed_point_diagram(oc, s);
        x.maps.at(MorphismKey{0, 0, oc.identity(0)}) = {1, 0, 2};
        CHECK_THROWS_AS(balanced_product_sets(oc, x, y), DiagramError);
        auto missing = fixed_point_diagram(oc, s);
        missing.maps.erase(MorphismKey{0, 1, oc.hom(0, 1).front()});
        CHECK_THROWS_AS(balanced_product_sets(oc, missing, y), DiagramError);
        auto bad_y = y;
        bad_y.maps.at(MorphismKey{0, 0, oc.identity(0)}) = {1, 0};
        CHECK_THROWS_AS(balanced_product_sets(oc, fixed_point_diagram(oc, s), bad_y), DiagramError);
    }
}

TEST_CASE("balanced product round trip on random G-sets") {
    std::mt19937_64 rng(11);
    for (const char* name : {"S3", "Z4", "V4", "Q8", "A4"}) {
        CAPTURE(name);
        const OrbitCategory oc(catalog_group(name));
        const auto y = nabla(oc);
        const auto subs = oracle::all_subgroups(oc.group());
        const auto sets = oracle::all_gsets(oc.group(), 8);
        for (std::size_t k = 0; k < sets.size(); k += 7) {
            const auto s = oracle::shuffle(sets[k], rng);
            const auto out = balanced_product_sets(oc, fixed_point_diagram(oc, s), y);
            CHECK(oracle::marks(out, subs) == oracle::marks(s, subs));
            CHECK(isomorphic(oc.group(), out, s));
        }
    }
}

TEST_CASE("G-set validation and marks") {
    const auto g = catalog_group("S3");
    GSet bad;
    bad.size = 2;
    bad.action.assign(g.order(), {1, 0});
    CHECK_THROWS_AS(bad.validate(g), DiagramError);
    const auto a = GSet::cosets(g, cyclic_subgroup(g, 1));
    const auto b = oracle::coset_gset(g, cyclic_subgroup(g, 1).elements);
    CHECK(isomorphic(g, a, b));
    CHECK_FALSE(isomorphic(g, a, GSet::cosets(g, trivial_subgroup(g))));
}

TEST_CASE("wall vectors") {
    SUBCASE("trivial actions on the pentagon") {
        for (const char* n : {"pentagon_trivial_z2", "pentagon_trivial_z3", "pentagon_trivial_z5"}) {
            const auto w = wall_vector(load_action(n));
            CHECK(w.vanishes_off_trivial());
            CHECK(w.is_zero());
        }
    }
    SUBCASE("hexagon reflection") {
        const auto w = wall_vector(load_action("hexagon_reflection"));
        std::vector<long long> off;
        for (std::size_t i = 0; i < w.objects.size(); ++i)
            if (!w.objects[i].subgroup.trivial()) off.push_back(w.coefficients[i]);
        CHECK(off == std::vector<long long>{1, 1});
        CHECK_FALSE(w.vanishes_off_trivial());
    }
    SUBCASE("trivial group") {
        const auto w = wall_vector(GroupAction::trivial(FiniteGroup(), polygon(5)));
        REQUIRE(w.objects.size() == 1);
        CHECK(w.objects[0].subgroup.trivial());
        CHECK(w.coefficients[0] == 0);
    }
    SUBCASE("coefficients survive another regularization") {
        for (const auto& name : names_in("actions")) {
            CAPTURE(name);
            const auto a = load_action(name);
            const auto w = wall_vector(a);
            const auto again = wall_vector(regularize(ensure_regular(a)));
            CHECK(w.coefficients == again.coefficients);
            const auto table = fixed_components_euler(a, true);
            REQUIRE(table.rows.size() == w.objects.size());
            for (std::size_t i = 0; i < w.objects.size(); ++i)
                CHECK(w.coefficients[i] == euler_characteristic(table.rows[i].complex));
        }
    }
}

TEST_CASE("balanced tensor with the classifying-space class") {
    const auto bor_z2 = classifying_space_class(catalog_group("Z2"));
    const auto zero = wall_product(wall_vector(load_action("pentagon_trivial_z2")), bor_z2);
    CHECK(zero.vanishes_off_trivial());
    const auto refl = wall_vector(load_action("hexagon_reflection"));
    const auto product = wall_product(refl, bor_z2);
    CHECK_FALSE(product.vanishes_off_trivial());
    CHECK(product.coefficients == refl.coefficients);
    WallVector z = refl;
    std::fill(z.coefficients.begin(), z.coefficients.end(), 0);
    CHECK(wall_product(z, bor_z2).is_zero());

    auto wrong = bor_z2;
    wrong.rank[1] = 2;
    CHECK_THROWS_AS(wall_product(refl, wrong), DiagramError);
    auto shifted = bor_z2;
    shifted.degree[0] = 1;
    CHECK_THROWS_AS(wall_product(refl, shifted), DiagramError);
    CHECK_THROWS_AS(wall_product(refl, classifying_space_class(FiniteGroup())), DiagramError);
}

TEST_CASE("verdicts") {
    for (const char* n : {"pentagon_trivial_z2", "pentagon_trivial_z3", "pentagon_trivial_z5"})
        CHECK(fh_verdict(load_action(n)).kind == VerdictKind::SufficientHolds);
    const auto ob = fh_verdict(load_action("hexagon_reflection"));
    CHECK(ob.kind == VerdictKind::Obstructed);
    CHECK(ob.chi == 2);
    REQUIRE(ob.element.has_value());
    CHECK(*ob.element != 0);
    const auto ind = fh_verdict(load_action("indeterminate_1"));
    CHECK(ind.kind == VerdictKind::Indeterminate);
    CHECK(ind.chi != 0);
    REQUIRE(ind.subgroup.has_value());
    CHECK_FALSE(ind.subgroup->trivial());
    CHECK(fh_verdict(load_action("torus_z3")).chi == 3);
    CHECK(to_string(VerdictKind::SufficientHolds) == "sufficient");
}

TEST_CASE("corpus verdicts, exclusivity and relabeling invariance") {
    std::mt19937_64 rng(5);
    for (const auto& name : names_in("actions")) {
        CAPTURE(name);
        const auto a = load_action(name);
        const auto v = fh_verdict(a);
        CHECK(to_string(v.kind) == expected()["actions"][name]["verdict"].get<std::string>());
        if (v.kind == VerdictKind::SufficientHolds) {
            const auto reg = ensure_regular(a);
            for (std::size_t x = 1; x < a.group().order(); ++x)
                CHECK(euler_characteristic(fixed_subcomplex(reg, cyclic_subgroup(a.group(), x))) == 0);
        }
        for (int trial = 0; trial < 3; ++trial) CHECK(fh_verdict(relabel(a, rng)).kind == v.kind);
    }
}

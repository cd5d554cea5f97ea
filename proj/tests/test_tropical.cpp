#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "theta/io.hpp"
#include "theta/tropical.hpp"

using namespace theta;

static TropFamily load(const std::string& f) {
    return io::load_tropical(std::string(FIXTURE_DIR) + "/" + f);
}

TEST_CASE("fixtures validate") {
    for (const char* f : {"trop_fig5.json", "trop_fig6.json", "trop_fig7.json",
                          "trop_fig8.json"}) {
        TropFamily fam = load(f);
        auto v = validate_family(fam);
        INFO(f);
        for (const auto& e : v.errors) INFO(e);
        CHECK(v.ok);
    }
}

TEST_CASE("validation rejects a broken displacement identity") {
    TropFamily fam = load("trop_fig5.json");
    fam.edges[0].u[0] += 1;
    auto v = validate_family(fam);
    CHECK_FALSE(v.ok);
    CHECK_FALSE(v.errors.empty());
}

TEST_CASE("validation rejects dangling edge endpoints and non-tree graphs") {
    TropFamily fam = load("trop_fig5.json");
    fam.edges[0].src = "nope";
    CHECK_FALSE(validate_family(fam).ok);
    TropFamily fam2 = load("trop_fig5.json");
    fam2.edges.push_back(fam2.edges[0]);
    fam2.edges.back().name = "Edup";
    CHECK_FALSE(validate_family(fam2).ok);
}

TEST_CASE("spine prunes legless leaves") {
    TropFamily fam = load("trop_fig5.json");
    Spine s = spine(fam);
    // Every vertex of the chain fixture carries a leg: nothing is pruned.
    CHECK(s.vertices.size() == 3);
    CHECK(s.edges.size() == 2);
    // Figure 7 has a legless internal structure either way; its spine keeps
    // all four vertices because each branch ends in a leg.
    TropFamily f7 = load("trop_fig7.json");
    Spine s7 = spine(f7);
    CHECK(s7.vertices.size() == 4);
}

TEST_CASE("boundary classes of the fixtures") {
    CHECK(boundary_class(load("trop_fig5.json")) == BoundaryClass::D_x2x3_x1out);
    CHECK(boundary_class(load("trop_fig6.json")) == BoundaryClass::D_x2x3_x1out);
    CHECK(boundary_class(load("trop_fig7.json")) == BoundaryClass::D_x1x2_x3out);
    CHECK(boundary_class_name(BoundaryClass::Interior) == "interior");
}

TEST_CASE("spine chain runs from the out-side junction to the pair junction") {
    TropFamily fam = load("trop_fig5.json");
    SpineChain ch = spine_chain(fam);
    CHECK(ch.chain_vertices.front() == "V1"); // carries x1 and out
    // V2 is the junction where x2 and the branch toward x3 diverge, so the
    // chain between the two junctions is the single edge E1.
    CHECK(ch.chain_vertices.back() == "V2");
    CHECK(ch.chain_edges == std::vector<std::string>{"E1"});
    // Oriented contact directions follow the walk.
    REQUIRE(ch.oriented_u.size() == 1);
    CHECK(ch.oriented_u[0] == fam.edge("E1").u);
}

TEST_CASE("splitting edges of the chain fixtures") {
    // Figure 5: the first chain edge has length independent of delta.
    CHECK(find_splitting_edge(load("trop_fig5.json")) == 1);
    // Figure 6: the first edge length equals delta; the second edge splits.
    CHECK(find_splitting_edge(load("trop_fig6.json")) == 2);
    CHECK(splitting_edges(load("trop_fig5.json")) == std::vector<size_t>{1});
    CHECK(splitting_edges(load("trop_fig6.json")) == std::vector<size_t>{2});
}

TEST_CASE("tail classification of the fixtures") {
    CHECK(classify_tails(load("trop_fig5.json")) == TailClass::TailFree);
    CHECK(classify_tails(load("trop_fig6.json")) == TailClass::TailFree);
    CHECK(has_terminal_tail(load("trop_fig7.json")));
    CHECK(classify_tails(load("trop_fig7.json")) == TailClass::Terminal);
    CHECK(classify_tails(load("trop_fig8.json")) == TailClass::Internal);
    CHECK_FALSE(has_terminal_tail(load("trop_fig5.json")));
    CHECK(tail_class_name(TailClass::Internal) == "internal");
}

TEST_CASE("find_splitting_edge refuses terminal tails") {
    CHECK_THROWS(find_splitting_edge(load("trop_fig7.json")));
}

TEST_CASE("universal cones of the fixtures are miniversal") {
    for (const char* f : {"trop_fig5.json", "trop_fig6.json", "trop_fig8.json"}) {
        TropFamily fam = load(f);
        UniversalCone uc = universal_cone(fam);
        INFO(f);
        CHECK(uc.dimension == 2);
        CHECK(uc.miniversal);
    }
}

TEST_CASE("universal cone dimension is invariant under relabeling") {
    TropFamily fam = load("trop_fig5.json");
    UniversalCone before = universal_cone(fam);
    // Rename every vertex and edge.
    auto rename_v = [](std::string n) { return n + "_renamed"; };
    for (auto& v : fam.vertices) {
        fam.nu[rename_v(v.name)] = fam.nu.at(v.name);
        fam.nu.erase(v.name);
        v.name = rename_v(v.name);
    }
    for (auto& e : fam.edges) {
        e.src = rename_v(e.src);
        e.dst = rename_v(e.dst);
    }
    for (auto& l : fam.legs) l.vertex = rename_v(l.vertex);
    REQUIRE(validate_family(fam).ok);
    UniversalCone after = universal_cone(fam);
    CHECK(after.dimension == before.dimension);
    CHECK(after.miniversal == before.miniversal);
}

TEST_CASE("universal cone dimension is invariant under unimodular base change") {
    TropFamily fam = load("trop_fig5.json");
    UniversalCone before = universal_cone(fam);
    // Base change (delta, l1) -> (delta, delta + l1): lengths, delta transform
    // by the inverse transpose action on coefficients; here we substitute
    // directly: a vector c over the base becomes c' with c'[1] = c[1],
    // c'[0] = c[0] - 0 ... use the simple shear base' = (b0, b0 + b1), under
    // which coefficient vectors (a, b) become (a - b, b)... validity requires
    // nonnegativity, so use the inverse shear on a fixture where it stays
    // valid: scale the second base coordinate into the first.
    for (auto& [k, m] : fam.nu)
        for (auto& row : m) row[0] += row[1];
    for (auto& [k, v] : fam.lengths) v[0] += v[1];
    if (fam.delta) (*fam.delta)[0] += (*fam.delta)[1];
    // The sheared family satisfies the same equations with transformed
    // coefficients; it remains a valid family.
    REQUIRE(validate_family(fam).ok);
    UniversalCone after = universal_cone(fam);
    CHECK(after.dimension == before.dimension);
    CHECK(after.miniversal == before.miniversal);
}

TEST_CASE("constant families over every-edge-free bases have expected dimension") {
    // Strip the constraint: delta and r removed, out leg unconstrained. The
    // cone gains the dimension of the dropped constraint equations.
    TropFamily fam = load("trop_fig5.json");
    fam.delta.reset();
    fam.r.reset();
    REQUIRE(validate_family(fam).ok);
    UniversalCone uc = universal_cone(fam);
    CHECK(uc.dimension == 3);
    CHECK_FALSE(uc.miniversal);
}

TEST_CASE("split and glue round-trip") {
    for (const char* f : {"trop_fig5.json", "trop_fig6.json"}) {
        TropFamily fam = load(f);
        size_t i = find_splitting_edge(fam);
        SplitResult sp = split_at_edge(fam, i);
        CHECK(validate_family(sp.first).ok);
        CHECK(validate_family(sp.second).ok);
        // The pair side carries the two pair legs; the out side carries out.
        auto has_leg = [](const TropFamily& t, const std::string& l) {
            for (const auto& leg : t.legs)
                if (leg.label == l) return true;
            return false;
        };
        INFO(f);
        CHECK(has_leg(sp.second, "out"));
        CHECK(has_leg(sp.first, sp.new_leg));
        CHECK(has_leg(sp.second, sp.new_leg));
        TropFamily back = glue(sp, fam.lengths.at(sp.cut_edge));
        CHECK(families_equal(back, fam));
    }
}

TEST_CASE("split_at_edge refuses non-splitting edges") {
    TropFamily fam = load("trop_fig6.json");
    // Edge 1 of the figure-6 chain has length delta: not a splitting edge.
    CHECK_THROWS(split_at_edge(fam, 1));
}

TEST_CASE("families_equal is insensitive to edge orientation") {
    TropFamily fam = load("trop_fig5.json");
    TropFamily flip = fam;
    std::swap(flip.edges[0].src, flip.edges[0].dst);
    flip.edges[0].u = vec_neg(flip.edges[0].u);
    REQUIRE(validate_family(flip).ok);
    CHECK(families_equal(fam, flip));
    TropFamily other = fam;
    other.lengths.at("E1")[0] += 1;
    CHECK_FALSE(families_equal(fam, other));
}

// Random miniversal tail-free families over a rank-2 base (delta, l): a
// two-vertex chain in the three-stratum complex. V1 carries x3 and out and
// sits at position delta * r on its ray; V2 carries x1 and x2 at position
// nu(V1) + l * u along the chain edge. delta-independence of the edge length
// makes the single chain edge the splitting edge, so the family is tail-free,
// and the displacement equations pin every variable to (delta, l): miniversal.
static TropFamily random_family(std::mt19937_64& rng, const ConeComplex& cx) {
    std::uniform_int_distribution<Int> coord(1, 3);
    TropFamily fam;
    fam.complex = cx;
    fam.base_gens = {"delta", "l"};
    // V1 on ray r2 at height a * delta; out contact r = a e_2.
    Int a = coord(rng);
    fam.vertices.push_back({"V1", "r2"});
    // V2 in the cone s23 at nu(V1) + l * u with u = (0, b, c), c >= 1.
    Int b = coord(rng) - 2; // in [-1, 1]
    Int c = coord(rng);
    if (a + b <= 0) b = 0;
    fam.vertices.push_back({"V2", "s23"});
    fam.edges.push_back({"E", "V1", "V2", "s23", Vec{0, b, c}});
    fam.lengths["E"] = Vec{0, 1}; // length l: independent of delta
    fam.nu["V1"] = Mat{{0, 0}, {a, 0}, {0, 0}};
    fam.nu["V2"] = Mat{{0, 0}, {a, b}, {0, c}};
    fam.delta = Vec{1, 0};
    fam.r = Vec{0, a, 0};
    fam.legs.push_back({"out", "V1", "r2", Vec{0, -a, 0}, true});
    fam.legs.push_back({"x3", "V1", "s12", Vec{coord(rng), 0, 0}, false});
    fam.legs.push_back({"x1", "V2", "s23", Vec{0, coord(rng), coord(rng)}, false});
    fam.legs.push_back({"x2", "V2", "s23", Vec{0, 0, coord(rng)}, false});
    return fam;
}

TEST_CASE("random miniversal tail-free families have a unique splitting edge") {
    Geometry g = io::load_geometry(std::string(FIXTURE_DIR) + "/geometry1.json");
    std::mt19937_64 rng(909090);
    int done = 0, attempts = 0;
    while (done < 200 && attempts < 4000) {
        ++attempts;
        TropFamily fam = random_family(rng, g.complex);
        auto v = validate_family(fam);
        if (!v.ok) continue;
        UniversalCone uc = universal_cone(fam);
        if (!uc.miniversal) continue;
        if (classify_tails(fam) != TailClass::TailFree) continue;
        // Uniqueness: find_splitting_edge succeeds (it throws when the tangent
        // index is not unique) and agrees with the delta-independence list.
        size_t i = find_splitting_edge(fam);
        auto indep = splitting_edges(fam);
        CHECK(std::find(indep.begin(), indep.end(), i) != indep.end());
        // Split then glue restores the family.
        SplitResult sp = split_at_edge(fam, i);
        CHECK(validate_family(sp.first).ok);
        CHECK(validate_family(sp.second).ok);
        CHECK(families_equal(glue(sp, fam.lengths.at(sp.cut_edge)), fam));
        ++done;
    }
    CHECK(done == 200);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "theta/cone.hpp"

using namespace theta;

static bool same_cone(const Cone& a, const Cone& b) {
    for (const auto& g : a.gens)
        if (!b.contains(g)) return false;
    for (const auto& g : b.gens)
        if (!a.contains(g)) return false;
    return a.cone_dim() == b.cone_dim();
}

TEST_CASE("quadrant basics") {
    Cone q(2, {{1, 0}, {0, 1}});
    CHECK(q.contains(Vec{3, 5}));
    CHECK(q.contains(Vec{0, 0}));
    CHECK_FALSE(q.contains(Vec{-1, 2}));
    CHECK(q.cone_dim() == 2);
    CHECK(q.pointed());
    auto rays = q.extreme_rays();
    CHECK(rays.size() == 2);
    // Four faces: 0, two rays, the cone.
    CHECK(q.faces().size() == 4);
}

TEST_CASE("non-simplicial and non-pointed cones") {
    Cone c(2, {{1, 0}, {1, 1}, {0, 1}});
    CHECK(c.extreme_rays().size() == 2); // middle generator is redundant
    Cone line(2, {{1, 0}, {-1, 0}});
    CHECK_FALSE(line.pointed());
    CHECK(line.cone_dim() == 1);
    CHECK(line.contains(Vec{-7, 0}));
    CHECK_FALSE(line.contains(Vec{0, 1}));
}

TEST_CASE("minimal_face_containing") {
    Cone q(2, {{1, 0}, {0, 1}});
    auto f0 = q.minimal_face_containing({Vec{0, 0}});
    CHECK(f0.empty());
    auto fx = q.minimal_face_containing({Vec{2, 0}});
    REQUIRE(fx.size() == 1);
    CHECK(q.gens[fx[0]] == Vec{1, 0});
    auto fall = q.minimal_face_containing({Vec{1, 1}});
    CHECK(fall.size() == 2);
}

TEST_CASE("dual cone") {
    // Dual of the quadrant is the quadrant.
    Cone q(2, {{1, 0}, {0, 1}});
    CHECK(same_cone(dual_cone(q), q));
    // Dual of cone((1,0),(1,2)) is cone((0,1),(2,-1)).
    Cone c(2, {{1, 0}, {1, 2}});
    Cone expect(2, {{0, 1}, {2, -1}});
    CHECK(same_cone(dual_cone(c), expect));
    // Double dual returns the original for full-dimensional cones.
    CHECK(same_cone(dual_cone(dual_cone(c)), c));
}

TEST_CASE("cone_from_inequalities") {
    // x >= 0, y >= 0 gives the quadrant.
    Cone q = cone_from_inequalities(2, {{1, 0}, {0, 1}}, {});
    CHECK(same_cone(q, Cone(2, {{1, 0}, {0, 1}})));
    // With an equation x = y: the diagonal ray.
    Cone d = cone_from_inequalities(2, {{1, 0}, {0, 1}}, {{1, -1}});
    CHECK(d.cone_dim() == 1);
    CHECK(d.contains(Vec{2, 2}));
    CHECK_FALSE(d.contains(Vec{1, 0}));
    // x >= 0 and -x >= 0 force x = 0; with y = 0 only the origin remains.
    Cone z = cone_from_inequalities(2, {{1, 0}, {-1, 0}}, {{0, 1}});
    CHECK(z.cone_dim() == 0);
    CHECK(z.pointed());
}

TEST_CASE("cone map and image") {
    ConeMap f;
    f.src = Cone(2, {{1, 0}, {0, 1}});
    f.dst_dim = 2;
    f.matrix = {{1, 1}, {0, 1}};
    CHECK(f.apply(Vec{1, 2}) == Vec{3, 2});
    Cone img = f.image();
    CHECK(img.contains(Vec{1, 0}));
    CHECK(img.contains(Vec{1, 1}));
    CHECK_FALSE(img.contains(Vec{0, 1}));
}

TEST_CASE("fibre product with identity is the other factor") {
    ConeMap id;
    id.src = Cone(2, {{1, 0}, {0, 1}});
    id.dst_dim = 2;
    id.matrix = mat_identity(2);
    ConeMap f;
    f.src = Cone(1, {{1}});
    f.dst_dim = 2;
    f.matrix = {{1}, {2}};
    auto fp = cone_fibre_product(f, id);
    // Total cone = graph of f over its source ray: dimension 1.
    CHECK(fp.total.cone_dim() == 1);
    CHECK(fp.total.contains(Vec{1, 1, 2}));
    CHECK(fp.p1.apply(Vec{1, 1, 2}) == Vec{1});
    CHECK(fp.p2.apply(Vec{1, 1, 2}) == Vec{1, 2});
}

TEST_CASE("face_surjection_check basic") {
    // Projection of the quadrant onto the first axis: every face maps onto a
    // face of N.
    ConeMap pr;
    pr.src = Cone(2, {{1, 0}, {0, 1}});
    pr.dst_dim = 1;
    pr.matrix = {{1, 0}};
    CHECK(face_surjection_check(pr, Cone(1, {{1}})));
    // The diagonal inclusion N -> N^2 is not a face surjection onto N^2.
    ConeMap diag;
    diag.src = Cone(1, {{1}});
    diag.dst_dim = 2;
    diag.matrix = {{1}, {1}};
    CHECK_FALSE(face_surjection_check(diag, Cone(2, {{1, 0}, {0, 1}})));
}

// The threshold example: f1 includes cone((lambda,1),(1,0)) into the plane,
// f2 includes cone((1,0),(2,1)). The transversality hypothesis fails at
// lambda = 1 and holds at lambda = 2.
static ConeMap plane_inclusion(std::vector<Vec> gens) {
    ConeMap f;
    f.src = Cone(2, std::move(gens));
    f.dst_dim = 2;
    f.matrix = mat_identity(2);
    return f;
}

TEST_CASE("transverse hypothesis threshold at lambda = 2") {
    ConeMap f2 = plane_inclusion({{1, 0}, {2, 1}});
    ConeMap f1_lo = plane_inclusion({{1, 1}, {1, 0}});
    ConeMap f1_hi = plane_inclusion({{2, 1}, {1, 0}});
    ConeMap f1_3 = plane_inclusion({{3, 1}, {1, 0}});
    CHECK_FALSE(transverse_hypothesis(f1_lo, f2));
    CHECK(transverse_hypothesis(f1_hi, f2));
    CHECK(transverse_hypothesis(f1_3, f2));
}

TEST_CASE("transverse hypothesis implies face surjection of the projection") {
    // 50 seeded random pairs in dimension <= 3: whenever the hypothesis holds,
    // the first projection of the fibre product maps faces onto faces.
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<Int> entry(0, 3);
    std::uniform_int_distribution<size_t> dims(1, 3);
    int checked = 0;
    int attempts = 0;
    while (checked < 50 && attempts < 5000) {
        ++attempts;
        size_t d = dims(rng);
        auto rand_cone = [&](size_t dim) {
            std::vector<Vec> gens;
            size_t k = 1 + rng() % (dim + 1);
            for (size_t i = 0; i < k; ++i) {
                Vec v(dim);
                for (auto& e : v) e = entry(rng);
                if (!vec_is_zero(v)) gens.push_back(primitive(v));
            }
            if (gens.empty()) gens.push_back(Vec(dim, 0));
            return Cone(dim, gens);
        };
        ConeMap f1, f2;
        f1.src = rand_cone(d);
        f2.src = rand_cone(d);
        f1.dst_dim = f2.dst_dim = d;
        f1.matrix = mat_identity(d);
        f2.matrix = mat_identity(d);
        if (f1.src.gens.empty() && f1.src.cone_dim() == 0) continue;
        if (!transverse_hypothesis(f1, f2)) continue;
        auto fp = cone_fibre_product(f1, f2);
        CHECK(face_surjection_check(fp.p1, f1.src));
        ++checked;
    }
    CHECK(checked == 50);
}

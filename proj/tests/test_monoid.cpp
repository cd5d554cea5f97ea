#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "theta/monoid.hpp"

using namespace theta;

static ToricMonoid mk(size_t r, std::vector<Vec> g) { return ToricMonoid(r, std::move(g)); }

TEST_CASE("saturation respects the group of the monoid") {
    // The group of <(1,0),(1,2)> has even second coordinate, so (1,1) is in
    // the cone but not in the saturation: the monoid is already saturated.
    ToricMonoid m = mk(2, {{1, 0}, {1, 2}});
    ToricMonoid s = saturate(m);
    CHECK(s.generators == m.generators);
    CHECK_FALSE(m.sat_contains(Vec{1, 1}));
    CHECK(m.sat_contains(Vec{2, 2}));
}

TEST_CASE("saturation adds interior generators over the full lattice") {
    // <(1,0),(1,1),(1,3)> generates all of Z^2 but misses (1,2), which lies
    // in the cone: the saturation adds it.
    ToricMonoid m = mk(2, {{1, 0}, {1, 1}, {1, 3}});
    ToricMonoid s = saturate(m);
    CHECK(s.generators == std::vector<Vec>{{1, 0}, {1, 1}, {1, 2}, {1, 3}});
    CHECK_FALSE(m.contains(Vec{1, 2}));
    CHECK(m.sat_contains(Vec{1, 2}));
    CHECK(s.contains(Vec{1, 2}));
}

TEST_CASE("saturation agrees with the Hilbert-basis oracle on seeded monoids") {
    std::mt19937_64 rng(777001);
    std::uniform_int_distribution<Int> entry(-4, 4);
    std::uniform_int_distribution<size_t> rk(1, 3);
    int done = 0, attempts = 0;
    while (done < 100 && attempts < 20000) {
        ++attempts;
        size_t r = rk(rng);
        size_t k = 1 + rng() % (r + 1);
        std::vector<Vec> gens;
        for (size_t i = 0; i < k; ++i) {
            Vec v(r);
            for (auto& e : v) e = entry(rng);
            if (!vec_is_zero(v)) gens.push_back(v);
        }
        if (gens.empty()) continue;
        ToricMonoid m(r, gens);
        if (!m.is_sharp()) continue;
        ToricMonoid s;
        try {
            s = saturate(m);
        } catch (const std::exception&) {
            continue;
        }
        auto oracle = hilbert_basis_oracle(m);
        CHECK(s.generators == oracle);
        ++done;
    }
    CHECK(done == 100);
}

TEST_CASE("fine pushout of the mu = 1 tilted pair") {
    // Q = N<delta, l_q>, P1 = Q, P2 = T_mu with mu = 1, generated by delta and
    // l_q - delta. Pushout inside the plane: generated by delta, l_q, l_q - delta.
    ToricMonoid q = mk(2, {{1, 0}, {0, 1}}); // coords (delta, l_q)
    ToricMonoid p1 = q;
    ToricMonoid p2 = mk(2, {{1, 0}, {-1, 1}});
    MonoidHom h1{q, p1, mat_identity(2)};
    MonoidHom h2{q, p2, mat_identity(2)};
    REQUIRE(h1.well_defined());
    REQUIRE(h2.well_defined());
    auto push = fine_pushout(h1, h2);
    const ToricMonoid& m = push.monoid;
    Vec delta = mat_apply(push.proj1, Vec{1, 0});
    Vec lq = mat_apply(push.proj1, Vec{0, 1});
    Vec lq_minus = mat_apply(push.proj2, Vec{-1, 1});
    CHECK(m.contains(delta));
    CHECK(m.contains(lq));
    CHECK(m.contains(lq_minus));
    // The three images generate: every monoid generator is a nonnegative
    // integer combination of them.
    ToricMonoid span(m.rank, {delta, lq, lq_minus});
    for (const auto& g : m.generators) CHECK(span.contains(g));
    // Not saturated: l_q - delta + delta = l_q but the "half" element
    // (l_q + (l_q - delta)) / 2-style witnesses stay outside; spot-check that
    // the pushout is fine, not saturated, by comparing with its saturation.
    CHECK(m.is_sharp());
}

TEST_CASE("fs pushout of the lambda-tilted pair is unimodular") {
    // Q = R = N l + N delta; P1 generated by delta, l_q - delta (l maps to
    // l_q); P2 = R_lambda generated by (1,-3), (0,1). The fs pushout is free
    // of rank 2.
    ToricMonoid q = mk(2, {{1, 0}, {0, 1}}); // coords (l, delta)
    ToricMonoid p1 = mk(2, {{0, 1}, {1, -1}});
    // l |-> l_q = (1,0), delta |-> delta.
    MonoidHom h1{q, p1, mat_identity(2)};
    ToricMonoid p2 = mk(2, {{1, -3}, {0, 1}});
    MonoidHom h2{q, p2, mat_identity(2)};
    // h1 must land in P1: l = (1,0) = (1,-1) + (0,1). OK.
    REQUIRE(h1.well_defined());
    REQUIRE(h2.well_defined());
    auto push = fs_pushout(h1, h2);
    const ToricMonoid& m = push.monoid;
    CHECK(m.generators.size() == 2);
    CHECK(m.is_sharp());
    // Unimodular: the two generators form a basis of the group they generate,
    // and the monoid is all nonnegative combinations (free of rank 2).
    Mat basis = m.group_basis();
    CHECK(basis.size() == 2);
    auto s = smith_normal_form(Mat{m.generators[0], m.generators[1]});
    CHECK(s.diag == std::vector<Int>{1, 1});
}

TEST_CASE("fs pushout against a brute-force saturation oracle") {
    // Oracle: compute the group pushout coordinates directly, then saturate the
    // image monoid by box enumeration. 100 seeded instances, rank <= 3.
    std::mt19937_64 rng(777002);
    std::uniform_int_distribution<Int> entry(-2, 2);
    int done = 0, attempts = 0;
    while (done < 100 && attempts < 40000) {
        ++attempts;
        size_t r = 1 + rng() % 3;
        auto rand_monoid = [&](size_t rank) {
            std::vector<Vec> gens;
            size_t k = 1 + rng() % (rank + 1);
            for (size_t i = 0; i < k; ++i) {
                Vec v(rank);
                for (auto& e : v) e = entry(rng);
                if (!vec_is_zero(v)) gens.push_back(v);
            }
            return gens;
        };
        auto qg = rand_monoid(r);
        if (qg.empty()) continue;
        ToricMonoid q(r, qg);
        // Targets contain Q plus one extra generator each.
        auto extra1 = rand_monoid(r);
        auto extra2 = rand_monoid(r);
        auto g1 = qg, g2 = qg;
        g1.insert(g1.end(), extra1.begin(), extra1.end());
        g2.insert(g2.end(), extra2.begin(), extra2.end());
        ToricMonoid p1(r, g1), p2(r, g2);
        MonoidHom h1{q, p1, mat_identity(r)};
        MonoidHom h2{q, p2, mat_identity(r)};
        PushoutResult fine, fs;
        try {
            fine = fine_pushout(h1, h2);
            if (!fine.monoid.is_sharp()) continue;
            fs = fs_pushout(h1, h2);
        } catch (const std::exception&) {
            continue;
        }
        auto oracle = hilbert_basis_oracle(fine.monoid);
        CHECK(fs.monoid.generators == oracle);
        ++done;
    }
    CHECK(done == 100);
}

TEST_CASE("quotient lengths of the frozen ideals") {
    // N^2, ideal = maximal ideal: the complement is {0}.
    ToricMonoid n2 = mk(2, {{1, 0}, {0, 1}});
    auto max_ideal = ideal_from_generators(n2, {{1, 0}, {0, 1}});
    CHECK(quotient_length(max_ideal) == 1);
    CHECK(quotient_length_alt(max_ideal) == 1);
    // Saturated cone <(0,1),(2,-1)> over the full lattice (the interior point
    // (1,0) pins the group to Z^2): K generated by the two rays leaves the
    // complement {0, (1,0)}.
    ToricMonoid c = saturate(mk(2, {{0, 1}, {2, -1}, {1, 0}}));
    auto k = ideal_from_generators(c, {{0, 1}, {2, -1}});
    CHECK(quotient_length(k) == 2);
    CHECK(quotient_length_alt(k) == 2);
    // N^2 with K = <(1,0)>: infinite complement, reported as a value.
    auto inf = ideal_from_generators(n2, {{1, 0}});
    CHECK_FALSE(quotient_length_or_infinite(inf).has_value());
    CHECK_THROWS(quotient_length(inf));
    // Finite case through the optional interface.
    auto fin = quotient_length_or_infinite(max_ideal);
    REQUIRE(fin.has_value());
    CHECK(*fin == 1);
}

TEST_CASE("ideal membership in N^2 with K = <(2,0)>") {
    ToricMonoid n2 = mk(2, {{1, 0}, {0, 1}});
    auto k = ideal_from_generators(n2, {{2, 0}});
    CHECK(ideal_membership(k, Vec{3, 0}));
    CHECK(ideal_membership(k, Vec{2, 0}));
    CHECK_FALSE(ideal_membership(k, Vec{1, 5}));
    CHECK_FALSE(ideal_membership(k, Vec{0, 0}));
}

TEST_CASE("quotient_length vs quotient_length_alt on seeded rank-2 monoids") {
    std::mt19937_64 rng(777003);
    std::uniform_int_distribution<Int> entry(0, 4);
    int done = 0, attempts = 0;
    while (done < 100 && attempts < 20000) {
        ++attempts;
        // Random saturated sharp rank-2 monoid from two rays.
        Vec r1 = {1, entry(rng)};
        Vec r2 = {entry(rng), 1};
        ToricMonoid m;
        try {
            m = saturate(mk(2, {r1, r2}));
        } catch (const std::exception&) {
            continue;
        }
        if (!m.is_sharp() || m.cone().cone_dim() != 2) continue;
        // Ideal generators: a multiple of each extreme ray (forces a finite
        // complement) plus up to two random monoid elements.
        std::vector<Vec> kg;
        for (const auto& ray : m.cone().extreme_rays()) {
            Int mult = 1 + (Int)(rng() % 3);
            kg.push_back(vec_scale(mult, ray));
        }
        for (int j = 0; j < 2; ++j) {
            const Vec& a = m.generators[rng() % m.generators.size()];
            const Vec& b = m.generators[rng() % m.generators.size()];
            kg.push_back(vec_add(a, b));
        }
        auto ideal = ideal_from_generators(m, kg);
        size_t l1 = quotient_length(ideal);
        size_t l2 = quotient_length_alt(ideal);
        CHECK(l1 == l2);
        ++done;
    }
    CHECK(done == 100);
}

TEST_CASE("localize_at_face frozen examples") {
    // N^2 at an axis gives N.
    ToricMonoid n2 = mk(2, {{1, 0}, {0, 1}});
    auto loc = localize_at_face(n2, {0}); // face spanned by (1,0)
    CHECK(loc.quotient.generators == std::vector<Vec>{Vec{1}});
    CHECK(loc.quotient.rank == 1);
    // At the zero face, nothing is inverted.
    auto loc0 = localize_at_face(n2, {});
    CHECK(loc0.quotient.generators == n2.generators);
    // Saturated cone <(0,1),(2,-1)> over the full lattice, localized at the
    // ray <(0,1)>, gives N.
    ToricMonoid c = saturate(mk(2, {{0, 1}, {2, -1}, {1, 0}}));
    size_t ray_idx = 0;
    for (size_t i = 0; i < c.generators.size(); ++i)
        if (c.generators[i] == Vec{0, 1}) ray_idx = i;
    auto locc = localize_at_face(c, {ray_idx});
    CHECK(locc.quotient.rank == 1);
    // The generating set need not be minimal; the monoid itself is N.
    CHECK(locc.quotient.contains(Vec{1}));
    for (const auto& gen : locc.quotient.generators) {
        REQUIRE(gen.size() == 1);
        CHECK(gen[0] >= 1);
    }
}

TEST_CASE("is_face recognizes faces of the quadrant monoid") {
    ToricMonoid n2 = mk(2, {{1, 0}, {0, 1}});
    CHECK(is_face(n2, {}));
    CHECK(is_face(n2, {0}));
    CHECK(is_face(n2, {1}));
    CHECK(is_face(n2, {0, 1}));
    ToricMonoid m = mk(2, {{1, 0}, {1, 1}, {1, 2}});
    // The interior generator does not span a face.
    size_t mid = 0;
    for (size_t i = 0; i < m.generators.size(); ++i)
        if (m.generators[i] == Vec{1, 1}) mid = i;
    CHECK_FALSE(is_face(m, {mid}));
}

TEST_CASE("log_fibre_dim frozen examples") {
    ToricMonoid n1 = mk(1, {{1}});
    ToricMonoid n2 = mk(2, {{1, 0}, {0, 1}});
    ToricMonoid n3 = mk(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    MonoidHom diag{n1, n2, Mat{{1}, {1}}};
    CHECK(log_fibre_dim(diag) == 1);
    MonoidHom id{n1, n1, mat_identity(1)};
    CHECK(log_fibre_dim(id) == 0);
    MonoidHom incl3{n1, n3, Mat{{1}, {0}, {0}}};
    CHECK(log_fibre_dim(incl3) == 2);
}

TEST_CASE("is_integral frozen hand cases") {
    ToricMonoid n1 = mk(1, {{1}});
    ToricMonoid n2 = mk(2, {{1, 0}, {0, 1}});
    // N -> N^2, 1 |-> (1,1): integral.
    CHECK(is_integral(MonoidHom{n1, n2, Mat{{1}, {1}}}));
    // N^2 -> N^2, (a,b) |-> (a, a+b): not integral.
    CHECK_FALSE(is_integral(MonoidHom{n2, n2, Mat{{1, 0}, {1, 1}}}));
    // Identity: integral.
    CHECK(is_integral(MonoidHom{n2, n2, mat_identity(2)}));
}

TEST_CASE("is_integral invariant under unimodular target basis change") {
    ToricMonoid n1 = mk(1, {{1}});
    Mat u = {{1, 1}, {0, 1}}; // unimodular
    ToricMonoid n2 = mk(2, {{1, 0}, {0, 1}});
    std::vector<Vec> gens2;
    for (const auto& g : n2.generators) gens2.push_back(mat_apply(u, g));
    ToricMonoid n2u(2, gens2);
    MonoidHom f{n1, n2, Mat{{1}, {1}}};
    MonoidHom fu{n1, n2u, mat_mul(u, Mat{{1}, {1}})};
    CHECK(is_integral(f) == is_integral(fu));
}

TEST_CASE("is_integral agrees with the bounded equational oracle") {
    // Exhaustive over maps N^r -> N^s for r, s <= 2 with matrix entries in
    // [0, 3], target the free monoid.
    for (size_t r = 1; r <= 2; ++r) {
        for (size_t s = 1; s <= 2; ++s) {
            ToricMonoid src = (r == 1) ? mk(1, {{1}}) : mk(2, {{1, 0}, {0, 1}});
            ToricMonoid dst = (s == 1) ? mk(1, {{1}}) : mk(2, {{1, 0}, {0, 1}});
            size_t cells = r * s;
            size_t total = 1;
            for (size_t i = 0; i < cells; ++i) total *= 4;
            for (size_t code = 0; code < total; ++code) {
                Mat m(s, Vec(r));
                size_t c = code;
                for (size_t i = 0; i < s; ++i)
                    for (size_t j = 0; j < r; ++j) {
                        m[i][j] = (Int)(c % 4);
                        c /= 4;
                    }
                MonoidHom h{src, dst, m};
                if (!h.well_defined()) continue;
                CHECK(is_integral(h) == is_integral_oracle(h, 4));
            }
        }
    }
}

TEST_CASE("lambda_stability frozen example mu = 1") {
    // Q generated by delta = (0,1) and l_q - delta = (1,-1)... the frozen data:
    // Q = <delta, l_q - mu delta> with mu = 1, in coordinates where
    // l_q = (1, 0), delta = (0, 1). ell = 1*l_q + 0*delta, lambda = 5.
    ToricMonoid q = mk(2, {{0, 1}, {1, -1}});
    Vec ell_q = {1, 0};
    Vec delta = {0, 1};
    Vec ell = {1, 0}; // a = 1, b = 0
    auto rep = lambda_stability(q, ell_q, delta, ell, 1, 5);
    CHECK(rep.iso_on_reduced);
    CHECK(rep.multiplicities_equal);
    CHECK(rep.a == Rational(1));
    CHECK(rep.b == Rational(0));
    // Below the bound lambda >= a + b + mu a = 2 the call refuses.
    CHECK_THROWS_WITH_AS(lambda_stability(q, ell_q, delta, ell, 1, 1),
                         doctest::Contains("lambda too small"), std::runtime_error);
    // a = 2: multiplicities are not asserted.
    auto rep2 = lambda_stability(q, ell_q, delta, vec_scale(2, ell_q), 1, 7);
    CHECK(rep2.a == Rational(2));
    CHECK(rep2.iso_on_reduced);
}

TEST_CASE("lambda_stability on seeded instances at the threshold bound") {
    std::mt19937_64 rng(777004);
    int done = 0, attempts = 0;
    while (done < 20 && attempts < 2000) {
        ++attempts;
        Int mu = 1 + (Int)(rng() % 3);
        Int b = (Int)(rng() % 3);
        Int a = 1;
        Vec ell_q = {1, 0};
        Vec delta = {0, 1};
        ToricMonoid q = mk(2, {delta, vec_sub(ell_q, vec_scale(mu, delta))});
        Vec ell = vec_add(vec_scale(a, ell_q), vec_scale(b, delta));
        Int lambda = a + b + mu * a + 1;
        LambdaStabilityReport rep;
        try {
            rep = lambda_stability(q, ell_q, delta, ell, mu, lambda);
        } catch (const std::exception&) {
            continue;
        }
        CHECK(rep.iso_on_reduced);
        CHECK(rep.multiplicities_equal);
        ++done;
    }
    CHECK(done == 20);
}

TEST_CASE("fine pushout rejects torsion") {
    // Pushout of Z <- Z -> Z identified by multiplication by 2 against the
    // sign-twisted copy produces torsion in the group pushout.
    ToricMonoid q = mk(1, {{1}});
    ToricMonoid p = mk(1, {{1}});
    MonoidHom h1{q, p, Mat{{2}}};
    MonoidHom h2{q, p, Mat{{2}}};
    // Group pushout of Z <-x2- Z -x2-> Z is Z + Z/2: torsion.
    CHECK_THROWS(fine_pushout(h1, h2));
}

TEST_CASE("positive_functional strictly positive on generators") {
    ToricMonoid c = saturate(mk(2, {{0, 1}, {2, -1}}));
    Vec f = c.positive_functional();
    for (const auto& g : c.generators) CHECK(dot(f, g) > 0);
    ToricMonoid line = mk(1, {{1}});
    CHECK(dot(line.positive_functional(), Vec{1}) > 0);
}

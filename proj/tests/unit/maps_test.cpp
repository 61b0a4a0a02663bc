#include "gqm/maps.hpp"

#include "gqm/random_spaces.hpp"

#include <doctest.h>

#include <algorithm>
#include <memory>
#include <set>
#include <vector>

using namespace gqm;

namespace {

Point sp(const char* s) { return Point::sym(s); }
Point rp(long long num, long long den = 1) { return Point::rat(Rational(num, den)); }

std::shared_ptr<GqmSpace> two_point(long long diag, long long off) {
    return std::make_shared<GqmSpace>(GqmSpace::table(
        {sp("a"), sp("b")},
        {{Rational(diag), Rational(off)}, {Rational(off), Rational(diag)}}));
}

// The continuity decision, written out directly from the threshold sets.
bool brute_uniform(const PointMap& f) {
    auto dom = f.domain().carrier().enumerate();
    std::set<Rational> cod_vals, dom_vals;
    for (const auto& x : dom)
        for (const auto& y : dom) {
            cod_vals.insert(f.codomain().distance(f.apply(x), f.apply(y)));
            dom_vals.insert(f.domain().distance(x, y));
        }
    std::vector<Rational> eps_cands;
    for (const auto& v : cod_vals)
        if (v > f.codomain().index()) eps_cands.push_back(v);
    std::vector<Rational> sorted_dom(dom_vals.begin(), dom_vals.end()), delta_cands;
    for (std::size_t i = 0; i + 1 < sorted_dom.size(); ++i)
        if (sorted_dom[i] > f.domain().index() ||
            (sorted_dom[i] == f.domain().index() && sorted_dom[i + 1] > f.domain().index()))
            delta_cands.push_back((sorted_dom[i] + sorted_dom[i + 1]) / Rational(2));
    delta_cands.push_back(sorted_dom.back() + Rational(1));
    for (const auto& eps : eps_cands) {
        bool some_delta = false;
        for (const auto& delta : delta_cands) {
            if (!(delta > f.domain().index())) continue;
            bool ok = true;
            for (const auto& x : dom)
                for (const auto& y : dom)
                    if (f.domain().distance(x, y) < delta &&
                        !(f.codomain().distance(f.apply(x), f.apply(y)) < eps))
                        ok = false;
            if (ok) { some_delta = true; break; }
        }
        if (!some_delta) return false;
    }
    return true;
}

}  // namespace

TEST_SUITE_BEGIN("maps");

TEST_CASE("product distances") {
    auto d1 = two_point(3, 4);
    auto prod = GqmSpace::product(*d1, *d1);
    CHECK(prod.index() == Rational(3));
    auto aa = Point::pair(sp("a"), sp("a"));
    auto bb = Point::pair(sp("b"), sp("b"));
    CHECK(prod.distance(aa, bb) == Rational(4));
    CHECK(prod.distance(aa, aa) == Rational(3));
    CHECK(prod.distance(aa, Point::pair(sp("a"), sp("b"))) == Rational(4));

    auto pw = GqmSpace::piecewise(Rational(1));
    auto pw2 = GqmSpace::product(pw, pw);
    CHECK(pw2.distance(Point::pair(rp(1), rp(10)), Point::pair(rp(100), rp(1))) == Rational(99));

    CHECK_THROWS_AS(GqmSpace::product(*d1, *two_point(5, 6)), std::invalid_argument);
}

TEST_CASE("product of valid spaces stays valid") {
    for (std::uint64_t seed = 40; seed < 60; ++seed) {
        RandomSpaceOptions opt;
        opt.max_points = 4;
        opt.index = Rational(2);
        auto left = random_table_space(seed, opt);
        auto right = random_table_space(seed + 1000, opt);
        auto rep = verify_axioms(GqmSpace::product(left, right));
        CHECK(rep.holds);
        CHECK(rep.exhaustive);
    }
}

TEST_CASE("finite maps are uniformly continuous") {
    auto d1 = two_point(3, 4);
    auto d2 = two_point(5, 6);

    auto ident = PointMap::identity(d1, d2);
    auto v = check_g_uniform_continuity(ident);
    CHECK(v.uniformly_continuous);
    CHECK(v.eps_candidates >= 1);
    CHECK(v.delta_candidates >= 1);

    auto konst = PointMap::constant(d1, d2, sp("a"));
    CHECK(check_g_uniform_continuity(konst).uniformly_continuous);

    // Any map out of a finite carrier admits a rescuing delta just above the
    // domain index, because small distances force equal points there.
    auto dom = std::make_shared<GqmSpace>(
        GqmSpace::piecewise_on(Rational(2), Carrier::finite({rp(0), rp(7, 3), rp(5, 2)})));
    auto line = std::make_shared<GqmSpace>(
        shift_quasi_metric(QuasiRule::abs_diff(), Rational(0), Carrier::line()));
    auto dist_map = PointMap::distance_to(dom, line, rp(0));
    CHECK(dist_map.apply(rp(7, 3)) == rp(7, 3));
    CHECK(dist_map.apply(rp(0)) == rp(2));
    auto vd = check_g_uniform_continuity(dist_map);
    CHECK(vd.uniformly_continuous);
    for (const auto& c : vd.cases) {
        CHECK(c.ok);
        REQUIRE(c.good_delta.has_value());
        CHECK(*c.good_delta > dom->index());
    }
}

TEST_CASE("decision agrees with the spelled-out threshold scan") {
    for (std::uint64_t seed = 200; seed < 230; ++seed) {
        auto bij = random_bijection(seed);
        CHECK(check_g_uniform_continuity(bij.map).uniformly_continuous == brute_uniform(bij.map));
    }
    auto d1 = two_point(0, 1);
    auto d2 = two_point(0, 5);
    auto f = PointMap::identity(d1, d2);
    CHECK(check_g_uniform_continuity(f).uniformly_continuous == brute_uniform(f));
}

TEST_CASE("distance map witnesses") {
    auto w = noncontinuity_witness_distance_map(Rational(2), Rational(3));
    CHECK(w.verified);
    CHECK(w.n == 3);
    CHECK(w.x == Rational(7, 3));
    CHECK(w.y == Rational(5, 2));
    CHECK(w.eps == Rational(1));
    CHECK(w.d_x0 == Rational(7, 3));
    CHECK(w.d_y0 == Rational(5, 2));
    CHECK(w.d_x0 < Rational(3));
    CHECK(w.d_y0 < Rational(3));
    CHECK(w.pair_distance < Rational(3));
    CHECK(w.d_xy == Rational(4));
    CHECK(w.d_00 == Rational(2));
    CHECK(w.image_gap == Rational(2));
    CHECK(w.image_gap >= w.eps);

    auto w2 = noncontinuity_witness_distance_map(Rational(1), Rational(2));
    CHECK(w2.verified);
    CHECK(w2.n == 3);
    CHECK(w2.x == Rational(4, 3));
    CHECK(w2.y == Rational(3, 2));
    CHECK(w2.d_xy == Rational(2));
    CHECK(w2.image_gap == Rational(1));

    // Near the corner the minimal index from the gap inequality alone would
    // put y at exactly delta; the witness picker moves past it.
    auto w3 = noncontinuity_witness_distance_map(Rational(1), Rational(101, 100));
    CHECK(w3.verified);
    CHECK(w3.n >= 3);
    CHECK(gqm::max(w3.d_x0, w3.d_y0) < Rational(101, 100));
    CHECK(w3.image_gap >= Rational(1, 2));

    CHECK_THROWS_AS(noncontinuity_witness_distance_map(Rational(0), Rational(1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(noncontinuity_witness_distance_map(Rational(1), Rational(1)),
                    std::invalid_argument);
}

TEST_CASE("generalized continuity") {
    auto d1 = two_point(3, 4);
    auto gt = induced_gt(*d1);
    auto ident = PointMap::identity(d1, d1);
    CHECK(check_generalized_continuity(ident, gt, gt).continuous);

    auto coarse = generate_gt_sets({sp("a"), sp("b")}, {{sp("a"), sp("b")}});
    CHECK(check_generalized_continuity(ident, coarse, coarse).continuous);

    // Preimage of {a} under the swap is {b}, which the nested family lacks.
    auto nested = generate_gt_sets({sp("a"), sp("b")}, {{sp("a")}, {sp("a"), sp("b")}});
    auto swap = PointMap::table(d1, d1, {{sp("a"), sp("b")}, {sp("b"), sp("a")}});
    auto cc = check_generalized_continuity(swap, nested, nested);
    CHECK_FALSE(cc.continuous);
    REQUIRE(cc.failing_open.has_value());
    CHECK(*cc.failing_open == nested.mask_of({sp("a")}));
    REQUIRE(cc.failing_preimage.has_value());
    CHECK(*cc.failing_preimage == nested.mask_of({sp("b")}));

    auto konst = PointMap::constant(d1, d1, sp("a"));
    CHECK(check_generalized_continuity(konst, coarse, induced_gt(*d1)).continuous);
}

TEST_CASE("pullback along a bijection") {
    auto d1 = two_point(3, 4);
    auto q = std::make_shared<GqmSpace>(GqmSpace::table(
        {sp("u"), sp("v")}, {{Rational(3), Rational(3)}, {Rational(3), Rational(3)}}));
    auto relabel = PointMap::table(d1, q, {{sp("a"), sp("u")}, {sp("b"), sp("v")}});
    CHECK(relabel.is_bijection());
    auto pulled = pullback_metric(relabel);
    CHECK(pulled.index_preserved);
    CHECK(pulled.pulled.index() == Rational(3));
    CHECK(pulled.pulled.distance(sp("u"), sp("v")) == Rational(4));
    CHECK(pulled.gt_matches);
    CHECK(pulled.gt_image == pulled.gt_pulled);

    auto ident = PointMap::identity(d1, d1);
    auto same = pullback_metric(ident);
    CHECK(same.pulled.distance(sp("a"), sp("b")) == d1->distance(sp("a"), sp("b")));
    CHECK(same.gt_matches);

    // Conjugation by a swap transposes the asymmetric entries.
    auto asym = std::make_shared<GqmSpace>(GqmSpace::table(
        {sp("a"), sp("b"), sp("c")},
        {{Rational(1), Rational(2), Rational(3)},
         {Rational(4), Rational(1), Rational(5)},
         {Rational(6), Rational(7), Rational(1)}}));
    auto swap = PointMap::table(asym, asym,
                                {{sp("a"), sp("b")}, {sp("b"), sp("a")}, {sp("c"), sp("c")}});
    auto conj = pullback_metric(swap);
    for (const auto& x : asym->carrier().points())
        for (const auto& y : asym->carrier().points())
            CHECK(conj.pulled.distance(swap.apply(x), swap.apply(y)) == asym->distance(x, y));
    CHECK(conj.gt_matches);

    auto konst = PointMap::constant(d1, d1, sp("a"));
    CHECK_FALSE(konst.is_bijection());
    CHECK_THROWS_AS(pullback_metric(konst), std::invalid_argument);
    CHECK_THROWS_AS(konst.inverse(), std::invalid_argument);
}

TEST_CASE("pullback preserves separation") {
    for (std::uint64_t seed = 300; seed < 320; ++seed) {
        auto bij = random_bijection(seed);
        auto res = pullback_metric(bij.map);
        CHECK(res.index_preserved);
        CHECK(res.gt_matches);
        auto before = check_separation(induced_gt(*bij.domain));
        auto after = check_separation(res.gt_pulled);
        CHECK(before.t0 == after.t0);
        CHECK(before.t1 == after.t1);
        CHECK(before.singletons_closed == after.singletons_closed);
    }
}

TEST_SUITE_END();

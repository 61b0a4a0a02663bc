#include "gqm/topology.hpp"

#include "gqm/random_spaces.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

using namespace gqm;

namespace {

Point sp(const char* s) { return Point::sym(s); }

std::vector<Point> syms(std::initializer_list<const char*> labels) {
    std::vector<Point> out;
    for (const char* l : labels) out.push_back(Point::sym(l));
    return out;
}

// Union closure by brute force: every subfamily of the base, unioned.
std::set<std::uint32_t> brute_closure(const std::vector<std::uint32_t>& base) {
    std::set<std::uint32_t> out;
    const std::size_t k = base.size();
    for (std::uint32_t pick = 0; pick < (1u << k); ++pick) {
        std::uint32_t u = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (pick & (1u << i)) u |= base[i];
        out.insert(u);
    }
    out.insert(0);
    return out;
}

}  // namespace

TEST_SUITE_BEGIN("topology");

TEST_CASE("generated topology") {
    auto discrete = generate_gt_sets(syms({"a", "b"}), {{}, {sp("a")}, {sp("b")}});
    CHECK(discrete.opens().size() == 4);
    CHECK(discrete.strong());
    CHECK(discrete.has_open(discrete.mask_of({sp("a"), sp("b")})));

    auto minimal = generate_gt_sets(syms({"a", "b"}), {{}});
    CHECK(minimal.opens().size() == 1);
    CHECK_FALSE(minimal.strong());

    auto three = generate_gt_sets(syms({"x", "y", "z"}), {{sp("x"), sp("y")}, {sp("y"), sp("z")}});
    CHECK(three.opens().size() == 4);
    CHECK(three.has_open(three.mask_of(syms({"x", "y", "z"}))));
    CHECK_FALSE(three.has_open(three.mask_of({sp("y")})));

    CHECK_THROWS_AS(generate_gt_sets(syms({"a"}), {{sp("b")}}), std::invalid_argument);
}

TEST_CASE("union closure matches brute force on random bases") {
    std::mt19937_64 rng(20240814);
    std::uniform_int_distribution<int> nfam(0, 5);
    auto ground = syms({"a", "b", "c", "d"});
    std::uniform_int_distribution<std::uint32_t> sub(0, 15);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::uint32_t> base;
        for (int i = nfam(rng); i > 0; --i) base.push_back(sub(rng));
        auto gt = generate_gt(ground, base);
        auto want = brute_closure(base);
        std::set<std::uint32_t> got(gt.opens().begin(), gt.opens().end());
        CHECK(got == want);
        // Union-closed: every pairwise union is present.
        for (auto a : gt.opens())
            for (auto b : gt.opens()) CHECK(gt.has_open(a | b));
    }
}

TEST_CASE("induced topology") {
    auto d1 = GqmSpace::table(syms({"a", "b"}),
                              {{Rational(3), Rational(4)}, {Rational(4), Rational(3)}});
    auto gt = induced_gt(d1);
    CHECK(gt.opens().size() == 4);
    CHECK(gt.strong());
    CHECK(is_topology(gt).topology());

    auto one = GqmSpace::table({sp("x")}, {{Rational(2)}});
    auto gt1 = induced_gt(one);
    CHECK(gt1.opens().size() == 2);
    CHECK(gt1.strong());

    auto three = GqmSpace::table(
        syms({"a", "b", "c"}),
        {{Rational(1), Rational(2), Rational(5)},
         {Rational(2), Rational(1), Rational(5)},
         {Rational(5), Rational(5), Rational(1)}});
    auto gt3 = induced_gt(three);
    CHECK(gt3.has_open(gt3.mask_of({sp("a"), sp("b")})));
    CHECK(gt3.has_open(gt3.mask_of({sp("a")})));
    CHECK(gt3.has_open(gt3.mask_of({sp("b")})));
    CHECK(gt3.has_open(gt3.mask_of({sp("c")})));
    CHECK(gt3.strong());
}

TEST_CASE("topology diagnosis") {
    auto discrete = generate_gt_sets(syms({"a", "b"}), {{sp("a")}, {sp("b")}});
    CHECK(is_topology(discrete).topology());

    auto gapped = generate_gt_sets(syms({"1", "2", "3"}), {{sp("1"), sp("2")}, {sp("2"), sp("3")}});
    auto tc = is_topology(gapped);
    CHECK(tc.generalized());
    CHECK_FALSE(tc.intersection_closed);
    CHECK_FALSE(tc.topology());
    REQUIRE(tc.intersection_witness.has_value());
    auto [ma, mb] = *tc.intersection_witness;
    CHECK_FALSE(gapped.has_open(ma & mb));

    auto nested = generate_gt_sets(syms({"1", "2"}), {{sp("1")}, {sp("1"), sp("2")}});
    CHECK(is_topology(nested).topology());
}

TEST_CASE("separation") {
    auto d1 = GqmSpace::table(syms({"a", "b"}),
                              {{Rational(3), Rational(4)}, {Rational(4), Rational(3)}});
    auto rep = check_separation(induced_gt(d1));
    CHECK(rep.t0);
    CHECK(rep.t1);
    CHECK(rep.singletons_closed);

    auto indiscrete = generate_gt_sets(syms({"1", "2"}), {{sp("1"), sp("2")}});
    auto rep2 = check_separation(indiscrete);
    CHECK_FALSE(rep2.t0);
    CHECK_FALSE(rep2.t1);
    REQUIRE(rep2.t0_witness.has_value());

    auto nested = generate_gt_sets(syms({"1", "2"}), {{sp("1")}, {sp("1"), sp("2")}});
    auto rep3 = check_separation(nested);
    CHECK(rep3.t0);
    CHECK_FALSE(rep3.t1);
    REQUIRE(rep3.t1_witness.has_value());

    auto weak = generate_gt_sets(syms({"1", "2"}), {{sp("1")}});
    CHECK_THROWS_AS(check_separation(weak), std::domain_error);
}

TEST_CASE("separation implications on random strong families") {
    std::mt19937_64 rng(20240815);
    auto ground = syms({"a", "b", "c", "d"});
    std::uniform_int_distribution<std::uint32_t> sub(0, 15);
    std::uniform_int_distribution<int> nfam(0, 4);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::uint32_t> base{15};  // ground itself, so the family is strong
        for (int i = nfam(rng); i > 0; --i) base.push_back(sub(rng));
        auto rep = check_separation(generate_gt(ground, base));
        if (rep.t1) {
            CHECK(rep.t0);
            CHECK(rep.singletons_closed);
        }
    }
}

TEST_CASE("intersection of piecewise balls is no ball") {
    for (long long rv : {1, 5, 10}) {
        Rational r(rv);
        auto w = not_topology_witness_piecewise(r);
        CHECK(w.holds());
        CHECK(w.intersection ==
              IntervalSet::interval(Rational(21) * r / Rational(10),
                                    r + Rational(21) * r / Rational(10)));
        CHECK(w.intersection_matches);
        CHECK(w.intersection_extent == r);
        CHECK(w.extent_matches);
        CHECK(w.certificate_holds);
        CHECK(w.grid_candidates >= 400);
        CHECK(w.grid_contained == 0);
        for (const auto& c : w.cases) {
            if (c.name == "punctured") CHECK(c.extent_lower == Rational(2) * r);
            if (c.name == "interval") CHECK(c.extent_lower == Rational(4) * r);
            CHECK(c.exceeds_target);
        }
    }
    CHECK(not_topology_witness_piecewise(Rational(10)).intersection ==
          IntervalSet::interval(Rational(21), Rational(31)));
    CHECK_THROWS_AS(not_topology_witness_piecewise(Rational(0)), std::invalid_argument);
}

TEST_CASE("entourage composition") {
    auto pw1 = GqmSpace::piecewise(Rational(1));
    auto rep = entourage_base_check(pw1, Rational(3, 2), {Rational(6, 5)});
    CHECK(rep.symbolic);
    CHECK_FALSE(rep.all_contained());
    REQUIRE(rep.checks.size() == 1);
    const auto& chk = rep.checks[0];
    CHECK_FALSE(chk.contained);
    REQUIRE(chk.witness.has_value());
    auto [x, y, z] = *chk.witness;
    CHECK(x == Point::rat(Rational(0)));
    CHECK(y == Point::rat(Rational(11, 10)));
    CHECK(z == Point::rat(Rational(11, 5)));
    CHECK(*chk.d_xy == Rational(11, 10));
    CHECK(*chk.d_yz == Rational(11, 10));
    CHECK(*chk.d_xz == Rational(11, 5));
    CHECK(*chk.d_xy < Rational(6, 5));
    CHECK(*chk.d_yz < Rational(6, 5));
    CHECK(*chk.d_xz >= Rational(3, 2));

    auto pw2 = GqmSpace::piecewise(Rational(2));
    auto rep2 = entourage_base_check(pw2, Rational(3), {Rational(3)});
    REQUIRE(rep2.checks.size() == 1);
    auto [x2, y2, z2] = *rep2.checks[0].witness;
    CHECK(y2 == Point::rat(Rational(5, 2)));
    CHECK(z2 == Point::rat(Rational(5)));
    CHECK(*rep2.checks[0].d_xz == Rational(5));

    // Index 0: half-threshold entourages compose inside, as in a plain
    // quasi-metric space.
    auto q = GqmSpace::table(
        syms({"a", "b", "c"}),
        {{Rational(0), Rational(1), Rational(2)},
         {Rational(1), Rational(0), Rational(1)},
         {Rational(1), Rational(1), Rational(0)}});
    for (long long e : {3, 2, 1}) {
        auto r0 = entourage_base_check(q, Rational(e), {Rational(e, 2)});
        CHECK_FALSE(r0.symbolic);
        CHECK(r0.all_contained());
    }

    // A table violating the triangle inequality composes outside; the
    // witness names the middle point.
    auto bad = GqmSpace::table(
        syms({"a", "b", "c"}),
        {{Rational(3), Rational(4), Rational(9)},
         {Rational(4), Rational(3), Rational(4)},
         {Rational(9), Rational(4), Rational(3)}});
    auto r3 = entourage_base_check(bad, Rational(6), {Rational(5)});
    CHECK_FALSE(r3.all_contained());
    REQUIRE(r3.checks[0].witness.has_value());
    auto [bx, by, bz] = *r3.checks[0].witness;
    CHECK(bad.distance(bx, by) < Rational(5));
    CHECK(bad.distance(by, bz) < Rational(5));
    CHECK(bad.distance(bx, bz) >= Rational(6));

    CHECK_THROWS_AS(entourage_base_check(pw1, Rational(3, 2), {Rational(1)}),
                    std::invalid_argument);
}

TEST_CASE("induced topologies of random spaces are strong and separated") {
    for (std::uint64_t seed = 100; seed < 120; ++seed) {
        RandomSpaceOptions opt;
        opt.max_points = 5;
        auto s = random_table_space(seed, opt);
        auto gt = induced_gt(s);
        CHECK(gt.strong());
        auto rep = check_separation(gt);
        CHECK(rep.t0);
        CHECK(rep.t1);
        CHECK(rep.singletons_closed);
    }
}

TEST_SUITE_END();

"""End-to-end checks of the python module against known exact values."""

import pytest

import gqm
from gqm import rat


def test_rational_arithmetic_is_exact():
    assert rat("1/3") + rat("1/6") == rat("1/2")
    assert gqm.Rational(6, 4) == rat("3/2")
    assert str(rat("-4/-2")) == "2/1"
    third = rat("1/3")
    assert sum([third, third, third], rat("0")) == rat("1")
    with pytest.raises(ValueError):
        rat("1.5")


def test_piecewise_distances():
    space = gqm.GqmSpace.piecewise(rat("1"))
    assert space.index == rat("1")
    assert space.rule_kind == "piecewise"
    assert space.distance(0, 0) == rat("1")
    assert space.distance(0, "1/2") == rat("2")
    assert space.distance(0, 5) == rat("5")


def test_axioms_on_default_grid():
    rep = gqm.verify_axioms(gqm.GqmSpace.piecewise(rat("1")))
    assert rep.holds
    assert not rep.exhaustive
    assert rep.pairs_checked == 101 * 101
    assert rep.triangle_cases == {
        "trivial": 203111,
        "zero-leg": 16380,
        "both-long": 511920,
        "both-short": 9570,
        "long-short": 144660,
        "short-long": 144660,
    }


def test_axioms_catch_a_bad_table():
    bad = gqm.GqmSpace.table(
        ["a", "b"], [[rat("1"), rat("1")], [rat("2"), rat("1")]]
    )
    rep = gqm.verify_axioms(bad)
    assert not rep.holds
    assert rep.failed_axiom == "index"


def test_ball_intersection_is_not_open():
    w = gqm.not_topology_witness_piecewise(rat("10"))
    assert w.holds()
    assert str(w.intersection) == "(21/1,31/1)"
    assert w.intersection_extent == rat("10")
    assert w.grid_candidates >= 400
    assert w.grid_contained == 0
    assert all(c.exceeds_target for c in w.cases)


def test_induced_topology_and_separation():
    space = gqm.GqmSpace.table(
        ["a", "b"], [[rat("3"), rat("4")], [rat("4"), rat("3")]]
    )
    gt = gqm.induced_gt(space)
    assert len(gt.opens) == 4
    assert gt.strong()
    sep = gqm.check_separation(gt)
    assert sep.t0 and sep.t1 and sep.singletons_closed


def test_drift_sequence_is_g_cauchy():
    cert = gqm.certify(
        gqm.SeqSpec.drift_gap(rat("1")),
        gqm.GqmSpace.piecewise(rat("1")),
        gqm.SeqProperty.g_cauchy,
        rat("11/10"),
        k=10,
        horizon=1000,
    )
    assert cert.verified and cert.exact
    assert cert.extremal_distance == rat("111/110")
    assert cert.extremal_pair == (10, 11)


def test_weak_g_demo_bounds_every_center():
    demo = gqm.weak_g_incompleteness_demo(rat("1"), [rat("0"), rat("5")], horizon=2000)
    assert demo.all_verified()
    assert [c.indices for c in demo.centers] == [[1], [4]]
    assert all(c.bounded for c in demo.centers)


def test_pseudo_cauchy_does_not_pair_up():
    res = gqm.product_lemma_check(
        gqm.SeqSpec.alt_pow(rat("10"), rat("1")),
        gqm.SeqSpec.alt_pow_mirror(rat("10"), rat("1")),
        gqm.GqmSpace.piecewise(rat("1")),
        gqm.GqmSpace.piecewise(rat("1")),
        gqm.SeqProperty.pseudo_cauchy,
        rat("2"),
        k=1,
        horizon=50,
    )
    assert res.x.verified and res.y.verified
    assert not res.paired.verified
    assert res.consistent
    assert res.paired.extremal_distance == rat("99")


def test_finite_completeness_threshold():
    space = gqm.GqmSpace.table(
        ["a", "b"], [[rat("3"), rat("4")], [rat("4"), rat("3")]]
    )
    rep = gqm.finite_space_completeness(space)
    assert rep.threshold_eps == rat("7/2")
    assert rep.complete and rep.g_complete and rep.weak_g_complete
    assert rep.lebesgue and rep.strongly_lebesgue


def test_pullback_preserves_structure():
    bij = gqm.random_bijection(21)
    res = gqm.pullback_metric(bij.map)
    assert res.index_preserved
    assert res.gt_matches
    assert res.pulled.index == bij.domain.index


def test_uniform_continuity_of_a_finite_map():
    d1 = gqm.GqmSpace.table(["a", "b"], [[rat("3"), rat("4")], [rat("4"), rat("3")]])
    d2 = gqm.GqmSpace.table(["a", "b"], [[rat("5"), rat("6")], [rat("6"), rat("5")]])
    f = gqm.PointMap.identity(d1, d2)
    verdict = gqm.check_g_uniform_continuity(f)
    assert verdict.uniformly_continuous


def test_space_json_round_trip():
    space = gqm.GqmSpace.piecewise_on(rat("2"), gqm.Carrier.box(rat("-1"), rat("3")))
    text = gqm.space_to_json(space)
    back = gqm.space_from_json(text)
    assert gqm.space_to_json(back) == text
    assert back.index == rat("2")


def test_errors_reach_python():
    space = gqm.GqmSpace.piecewise(rat("1"))
    with pytest.raises(ValueError):
        space.distance("a", 0)
    with pytest.raises(ValueError):
        gqm.GqmSpace.product(space, gqm.GqmSpace.piecewise(rat("2")))
    with pytest.raises(ValueError):
        gqm.certify(
            gqm.SeqSpec.drift_gap(rat("1")),
            space,
            gqm.SeqProperty.cauchy,
            rat("1"),
        )

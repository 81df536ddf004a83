from __future__ import annotations

from fractions import Fraction

import pytest

from curvebounds.penner import (
    BaseCurve,
    PennerSystem,
    certify,
    k_star,
    penner_upper_bound,
    rotate,
    step,
    trace,
    twist_support,
)
from curvebounds.surfaces import translation_length_upper_bound


def curve(text: str) -> BaseCurve:
    return BaseCurve.parse(text)


def curves(*texts: str) -> frozenset:
    return frozenset(curve(t) for t in texts)


def test_base_curve_parse():
    assert curve("a1") == BaseCurve("a", 1)
    assert curve("c12") == BaseCurve("c", 12)
    assert str(BaseCurve("b", 3)) == "b3"
    for bad in ("d1", "a0", "a", "b-1", "1a"):
        with pytest.raises(ValueError):
            BaseCurve.parse(bad)


def test_system_needs_genus_two():
    with pytest.raises(ValueError):
        PennerSystem(1)
    assert len(PennerSystem(4).curves()) == 12


def test_intersections_genus2():
    sys_ = PennerSystem(2)
    one = [
        ("a1", "b1"), ("a2", "b2"),
        ("c1", "b1"), ("c2", "b2"),
        ("c1", "b2"), ("c2", "b1"),  # c_j also meets b_{j-1}, cyclically
    ]
    pairs = {frozenset(p) for p in one}
    for x in sys_.curves():
        for y in sys_.curves():
            expected = int(frozenset({str(x), str(y)}) in pairs)
            assert sys_.intersect(x, y) == expected, (x, y)


def test_intersect_symmetric_and_matches_neighbors():
    for g in range(2, 7):
        sys_ = PennerSystem(g)
        for x in sys_.curves():
            nbrs = sys_.neighbors(x)
            for y in sys_.curves():
                assert sys_.intersect(x, y) == sys_.intersect(y, x)
                assert (sys_.intersect(x, y) == 1) == (y in nbrs)


def test_neighbor_counts():
    sys_ = PennerSystem(5)
    for c in sys_.curves():
        expected = {"a": 1, "b": 3, "c": 2}[c.family]
        assert len(sys_.neighbors(c)) == expected


def test_curve_outside_system_rejected():
    sys_ = PennerSystem(2)
    with pytest.raises(ValueError):
        sys_.intersect(curve("a1"), curve("a3"))
    with pytest.raises(ValueError):
        sys_.neighbors(curve("c9"))


def test_twist_support():
    sys_ = PennerSystem(3)
    s = curves("a1")
    assert twist_support(sys_, s, curve("b1")) == curves("a1", "b1")
    assert twist_support(sys_, s, curve("c2")) == s  # disjoint, nothing joins
    # the twisting curve itself never self-joins
    assert twist_support(sys_, curves("a1"), curve("a1")) == curves("a1")


def test_rotate():
    sys_ = PennerSystem(3)
    assert rotate(sys_, curves("a2", "b1", "c3")) == curves("a1", "b3", "c2")
    s = curves("a1", "a2", "a3")
    assert rotate(sys_, s) == s


def test_step_by_hand_genus2():
    sys_ = PennerSystem(2)
    s = curves("a2")
    s = step(sys_, s)
    assert s == curves("a1")
    s = step(sys_, s)
    assert s == curves("a2", "b2", "c2")
    s = step(sys_, s)
    assert s == curves("a1", "b1", "b2", "c1", "c2")


def test_certify_genus2():
    sys_ = PennerSystem(2)
    start = curve("a2")
    assert certify(sys_, curves("a1"), start) == curve("a2")
    assert certify(sys_, curves("a2", "b2", "c2"), start) == curve("a1")
    assert certify(sys_, curves("a1", "b1", "b2", "c1", "c2"), start) is None


def test_k_star_values():
    assert [k_star(g) for g in range(2, 8)] == [1, 6, 8, 16, 19, 30]
    with pytest.raises(ValueError):
        k_star(1)


def test_k_star_even_closed_form():
    for g in range(2, 40, 2):
        assert k_star(g) == (g * g + g - 4) // 2


def test_trace_frozen_small_genus():
    assert [trace(g).best_k for g in range(2, 8)] == [2, 6, 9, 16, 20, 30]


def test_trace_genus2_details():
    t = trace(2)
    assert t.best_k == 2 and t.bound == Fraction(1)
    assert t.certificates == (
        (1, BaseCurve("a", 2)),
        (2, BaseCurve("a", 1)),
    )
    assert t.supports[0] == curves("a2")
    assert t.supports[1] == curves("a1")
    assert t.supports[2] == curves("a2", "b2", "c2")
    # the orbit saturates and the trace stops one step later
    full = frozenset(PennerSystem(2).curves())
    assert t.supports[-1] == t.supports[-2] == full


def test_trace_matches_set_implementation():
    for g in range(2, 6):
        t = trace(g)
        sys_ = PennerSystem(g)
        s = curves(f"a{g}")
        interp_certs = []
        for k, support in enumerate(t.supports):
            assert support == s, (g, k)
            if k:
                w = certify(sys_, s, curve(f"a{g}"))
                if w is not None:
                    interp_certs.append((k, w))
            s = step(sys_, s)
        assert tuple(interp_certs) == t.certificates


def test_trace_supports_grow_until_saturation():
    for g in (2, 3, 5):
        sup = trace(g).supports
        for early, late in zip(sup[:-1], sup[1:]):
            assert len(early) <= len(late)


def test_trace_cap():
    t = trace(5, cap=3)
    assert len(t.masks) == 4
    assert t.best_k == 3
    with pytest.raises(ValueError):
        trace(2, cap=0)


def test_checkpoint_sets_small_genus():
    for g in (3, 4, 5, 6):
        sup = trace(g).supports
        assert sup[g - 1] == curves("a1")
        assert sup[g] == curves(f"a{g}", f"b{g}", f"c{g}")
        for m in range(1, (g - 1) // 2 + 1):
            window = {curve(f"c{g}")}
            for i in range(g - 2 * m + 1, g):
                window |= curves(f"a{i}", f"b{i}", f"c{i}")
            assert sup[m * (g + 1)] <= window, (g, m)


def test_penner_upper_bound():
    k, bound = penner_upper_bound(2)
    assert (k, bound) == (2, Fraction(1))
    k, bound = penner_upper_bound(3)
    assert (k, bound) == (6, Fraction(1, 3))


def test_certified_bound_beats_closed_form():
    for g in range(2, 30):
        k, bound = penner_upper_bound(g)
        assert k >= (g * g + g - 4) // 2
        assert bound <= translation_length_upper_bound(g)

from johansson import search, surface


def test_q1_census(q1_classes):
    # regression baseline: seven isomorphism classes at one triple point
    assert len(q1_classes) == 7
    for d in q1_classes:
        assert d.validate().ok
        q, _, ncomp = d.validate().stats
        assert (q, ncomp) == (1, 1)
    assert sorted(d.validate().stats[1] for d in q1_classes) == [1, 1, 1, 1, 1, 2, 2]
    genera = sorted(surface.euler_genus(d)[1] for d in q1_classes)
    assert genera == [1, 1, 1, 1, 1, 2, 2]
    # pairwise non-isomorphic by construction of the dedup
    codes = {d.canonical_code() for d in q1_classes}
    assert len(codes) == 7


def test_genus_filter():
    res = search.enumerate_diagrams(search.EnumSpec(q=1, genus=2))
    assert res.complete and len(res.diagrams) == 2


def test_max_count():
    res = search.enumerate_diagrams(search.EnumSpec(q=1, max_count=3))
    assert len(res.diagrams) == 3
    assert not res.complete


def test_predicate():
    res = search.enumerate_diagrams(
        search.EnumSpec(q=1, predicate=lambda d: len(d.curves()[0]) == 6)
    )
    for d in res.diagrams:
        assert len(d.curves()[0]) == 6

import pytest

from johansson import diagram
from johansson.diagram import JohanssonDiagram, parse_diagram, serialize_diagram


def test_roundtrip(sphere, torus):
    for d in (sphere, torus):
        d2 = parse_diagram(serialize_diagram(d))
        assert d2.theta == d.theta and d2.tau == d.tau


def test_parse_errors():
    with pytest.raises(ValueError, match="header"):
        parse_diagram("nonsense")
    with pytest.raises(ValueError):
        parse_diagram("jd v1\ncrossings 1\ntheta\n1 0 3 x\ntau\n0 1 2 3\n")
    with pytest.raises(ValueError):
        parse_diagram("jd v1\ncrossings 1\ntheta\n1 0\ntau\n0 1 2 3\n")
    with pytest.raises(ValueError, match="empty"):
        JohanssonDiagram([], [])


def test_validate_corpus(sphere, torus):
    r = sphere.validate()
    assert r.ok and r.stats == (2, 2, 1)
    r = torus.validate()
    assert r.ok and r.stats == (1, 1, 1)


def test_validate_rejects_identity_tau():
    n = 3
    theta = list(range(4 * n))
    with pytest.raises(Exception):
        # theta with fixed points is invalid
        JohanssonDiagram(theta, theta).curves()
    d = JohanssonDiagram(theta, theta)
    rep = d.validate()
    assert not rep.ok
    codes = {v[0] for v in rep.violations}
    assert "V1" in codes and "V2" in codes


def test_curves(sphere):
    curves = sphere.curves()
    assert len(curves) == 4  # 2k oriented curves
    by_id = {c.id: c for c in curves}
    for c in curves:
        assert by_id[c.sister_id].sister_id == c.id
        # sister darts are the tau image, index-aligned
        sister = by_id[c.sister_id]
        assert tuple(sphere.tau[x] for x in c.darts) == sister.darts
    assert sorted(len(c) for c in curves) == [2, 2, 4, 4]
    # every dart lies on exactly one directed curve of either orientation
    covered = set()
    for c in curves:
        covered.update(c.darts)
        covered.update(sphere.theta[x] for x in c.darts)
    assert covered == set(sphere.darts)


def test_labeled_triplets(sphere, torus):
    for d in (sphere, torus):
        trips = d.labeled_triplets()
        assert len(trips) == d.n // 3
        seen = set()
        for t in trips:
            assert len(set(t["crossings"])) == 3
            seen.update(t["crossings"])
        assert seen == set(range(d.n))


def test_isomorphism(sphere, torus):
    ok, mapping = sphere.isomorphic(sphere)
    assert ok and mapping is not None
    ok, _ = sphere.isomorphic(torus)
    assert not ok
    # relabeling crossings preserves the isomorphism class
    n = sphere.n
    perm = [(v + 1) % n for v in range(n)]

    def move(d):
        return 4 * perm[d >> 2] + (d & 3)

    theta = [0] * 4 * n
    tau = [0] * 4 * n
    for x in sphere.darts:
        theta[move(x)] = move(sphere.theta[x])
        tau[move(x)] = move(sphere.tau[x])
    d2 = JohanssonDiagram(theta, tau)
    assert d2.validate().ok
    ok, mapping = sphere.isomorphic(d2)
    assert ok
    for x in sphere.darts:
        assert mapping[sphere.theta[x]] == d2.theta[mapping[x]]
        assert mapping[sphere.tau[x]] == d2.tau[mapping[x]]


def test_positive_darts(sphere):
    for v in range(sphere.n):
        for j in (0, 1):
            x = sphere.positive_dart(v, j)
            assert x >> 2 == v and diagram.strand(x) == j

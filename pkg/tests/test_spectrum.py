import pytest

from johansson import spectrum


def test_lower_bounds():
    assert spectrum.lower_bound(1, {"filling"}).bound == 1
    assert spectrum.lower_bound(0, {"filling", "sphere-domain-parity"}).bound == 2
    assert spectrum.lower_bound(2, {"filling", "z2hs"}).bound == 6
    assert spectrum.lower_bound(1, {"filling", "checkered"}).bound == 2
    # parity tag only bites at genus zero
    assert spectrum.lower_bound(2, {"filling", "parity"}).bound == 3
    cert = spectrum.lower_bound(3, {"filling", "z2hs"})
    assert cert.bound == 8 and cert.trace
    with pytest.raises(ValueError, match="unknown assumption"):
        spectrum.lower_bound(1, {"bogus"})
    with pytest.raises(ValueError):
        spectrum.lower_bound(-1, {"filling"})


def test_certify(sphere, torus):
    rep = spectrum.certify(sphere)
    assert rep["q"] == 2 and rep["genus"] == 0 and rep["checkered"]
    assert rep["h1_z"] == "Z"
    assert "cannot fill any Z/2-homology sphere" in rep["verdicts"]
    assert not rep["parity_flags"]
    rep = spectrum.certify(torus)
    assert rep["q"] == 1 and rep["genus"] == 1 and not rep["checkered"]
    assert rep["r_required"] == 1


def test_exceptional_height():
    assert [spectrum.is_exceptional((2, 1, 3, 5), g) for g in (1, 2, 3)] == [True, False, False]
    assert spectrum.height((2, 1, 3, 5)) == 1
    assert spectrum.height((2, 4, 6, 8)) == 0
    assert spectrum.growth_violations((2, 5)) == [0]
    assert spectrum.growth_violations((2, 4, 6)) == []
    with pytest.raises(IndexError):
        spectrum.is_exceptional((2, 4), 2)


def test_assemble_no_seeds():
    t = spectrum.assemble_spectrum([], {"filling"}, 2)
    assert t.values == (None, None, None)
    assert not t.complete
    assert all(e.lower.bound >= 1 for e in t.entries)


def test_assemble_abstract_seed():
    t = spectrum.assemble_spectrum([((0, 2), "t0")], {"filling", "z2hs"}, 3)
    assert t.complete and t.values == (2, 4, 6, 8)
    assert spectrum.height(t) == 0
    assert spectrum.growth_violations(t) == []


def test_assemble_diagram_seeds(sphere, torus):
    t = spectrum.assemble_spectrum(
        [(sphere, "sphere"), (torus, "torus")], {"filling", "parity"}, 4
    )
    assert t.complete and t.values == (2, 1, 3, 5, 7)
    assert spectrum.height(t) == 1
    assert spectrum.growth_violations(t) == []

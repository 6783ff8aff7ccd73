import importlib.resources as ir

import pytest

from johansson import diagram, search


def load_corpus(name):
    text = (ir.files("johansson") / "corpus" / name).read_text()
    return diagram.parse_diagram(text)


@pytest.fixture(scope="session")
def sphere():
    return load_corpus("s2xs1_sphere.jd")


@pytest.fixture(scope="session")
def torus():
    return load_corpus("s2xs1_torus.jd")


@pytest.fixture(scope="session")
def q1_classes():
    res = search.enumerate_diagrams(search.EnumSpec(q=1))
    assert res.complete
    return res.diagrams


@pytest.fixture(scope="session")
def suite(sphere, torus, q1_classes):
    return [sphere, torus] + list(q1_classes)

"""The quotient pseudo-surface Sigma as a 2-complex: q triple points,
3q double-curve edges, F faces, plus the filling necessary conditions
and the region-count formula r = q + 2 - 2g."""

from __future__ import annotations

from dataclasses import dataclass

from . import surface
from .diagram import vertex


@dataclass(frozen=True)
class QuotientComplex:
    nverts: int  # q triple points
    vertex_of_crossing: tuple  # crossing -> triple point index
    edge_reps: tuple  # Sigma-edge -> representative dart (orientation rep)
    edge_of_dart: dict  # dart -> (edge index, +1/-1)
    edge_ends: tuple  # edge -> (tail triple point, head triple point)
    faces: tuple  # face -> tuple of (edge index, sign)
    diagram: object

    @property
    def nedges(self):
        return len(self.edge_reps)

    @property
    def nfaces(self):
        return len(self.faces)

    @property
    def euler(self):
        return self.nverts - self.nedges + self.nfaces


@dataclass(frozen=True)
class FillingReport:
    q: int
    g: int
    r_required: int
    conditions: tuple  # of (name, passed, witness)

    @property
    def ok(self):
        return all(p for _, p, _ in self.conditions)


def build_quotient(d):
    if "quotient" in d._cache:
        return d._cache["quotient"]
    report = d.validate()
    if not report.ok:
        raise ValueError(f"invalid diagram: {report.violations[0]}")
    theta, tau = d.theta, d.tau
    triples = d.triplets()
    vertex_of_crossing = [0] * d.n
    for i, tri in enumerate(triples):
        for v in tri:
            vertex_of_crossing[v] = i
    # a Sigma-edge is the tau-orbit {d, theta d, tau d, theta tau d} of a map
    # edge; oriented by its minimal dart
    edge_reps = []
    edge_of_dart = {}
    for x in d.darts:
        if x in edge_of_dart:
            continue
        cls = [x, theta[x], tau[x], theta[tau[x]]]
        r = min(cls)
        idx = len(edge_reps)
        edge_reps.append(r)
        for y in (r, tau[r]):
            edge_of_dart[y] = (idx, 1)
            edge_of_dart[theta[y]] = (idx, -1)
    edge_ends = tuple(
        (vertex_of_crossing[vertex(r)], vertex_of_crossing[vertex(theta[r])])
        for r in edge_reps
    )
    faces = tuple(
        tuple(edge_of_dart[x] for x in cyc) for cyc in surface.trace_faces(d).faces
    )
    qc = QuotientComplex(
        nverts=len(triples),
        vertex_of_crossing=tuple(vertex_of_crossing),
        edge_reps=tuple(edge_reps),
        edge_of_dart=edge_of_dart,
        edge_ends=edge_ends,
        faces=faces,
        diagram=d,
    )
    assert qc.nedges == 3 * len(triples) and qc.nverts == len(triples)
    d._cache["quotient"] = qc
    return qc


def filling_report(d):
    report = d.validate()
    if not report.ok:
        raise ValueError(f"invalid diagram: {report.violations[0]}")
    chi, g = surface.euler_genus(d)
    q = d.n // 3
    r = q + 2 - 2 * g
    _, _, ncomp = report.stats
    conditions = (
        ("every curve meets a crossing", True, None),  # automatic in this encoding
        ("r_required >= 1", r >= 1, r),
        ("connected", ncomp == 1, ncomp),
    )
    return FillingReport(q=q, g=g, r_required=r, conditions=conditions)

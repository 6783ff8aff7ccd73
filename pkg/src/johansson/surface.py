"""Topology of the domain surface S of a diagram: faces, Euler
characteristic and genus, first homology with expressible classes, and
checkerboard colorability of the face complement."""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .diagram import sigma, strand_partner


@dataclass(frozen=True)
class FaceSet:
    faces: tuple  # of dart cycles (phi-orbits)
    face_of: tuple  # dart -> face index


@dataclass(frozen=True)
class Checkerboard:
    coloring: tuple  # face index -> 0/1


class SurfaceHomology:
    """Basis of H1(S) of rank 2g with exact expression of edge 1-cycles.

    Edges are indexed by their representative dart min(d, theta d), oriented
    from vertex(rep) to vertex(theta(rep)).
    """

    def __init__(self, d, ring):
        if ring not in ("z", "z2"):
            raise ValueError(f"unsupported ring {ring!r}")
        self.ring = ring
        self.diagram = d
        theta = d.theta
        reps = sorted(x for x in d.darts if x < theta[x])
        self.edge_reps = reps
        self.edge_index = {e: i for i, e in enumerate(reps)}
        nv, ne = d.n, len(reps)
        # boundary d1: vertices x edges
        d1 = [[0] * ne for _ in range(nv)]
        for i, e in enumerate(reps):
            d1[e >> 2][i] -= 1
            d1[theta[e] >> 2][i] += 1
        K = linalg.kernel_z(d1)  # list of edge-vectors spanning the cycle space
        self.m = len(K)
        self.K_mat = [[K[j][i] for j in range(self.m)] for i in range(ne)]  # ne x m
        # faces in kernel coordinates, as columns of an m x F matrix
        faces = trace_faces(d).faces
        cols = []
        for f in faces:
            vec = [0] * ne
            for x in f:
                e = min(x, theta[x])
                vec[self.edge_index[e]] += 1 if x == e else -1
            y = linalg.solve_z(self.K_mat, vec)
            assert y is not None, "face boundary must be a cycle"
            cols.append(y)
        M = [[cols[j][i] for j in range(len(cols))] for i in range(self.m)]
        D, U, V = linalg.smith_normal_form(M)
        r = sum(1 for i in range(min(self.m, len(cols))) if D[i][i])
        # H1 is free (orientable surface); torsion would be a bug
        assert all(abs(D[i][i]) == 1 for i in range(r))
        self.rank = self.m - r
        self.U = U
        self._r = r

    def express_edge_vector(self, vec):
        """Coordinates (length 2g) of an edge 1-cycle in the H1 basis."""
        y = linalg.solve_z(self.K_mat, vec)
        if y is None:
            raise ValueError("not a 1-cycle")
        coords = [sum(self.U[i][k] * y[k] for k in range(self.m)) for i in range(self._r, self.m)]
        if self.ring == "z2":
            coords = [c % 2 for c in coords]
        return coords

    def express_darts(self, darts):
        """Class of a closed dart path."""
        theta = self.diagram.theta
        vec = [0] * len(self.edge_reps)
        for x in darts:
            e = min(x, theta[x])
            vec[self.edge_index[e]] += 1 if x == e else -1
        return self.express_edge_vector(vec)


def trace_faces(d):
    if "faces" in d._cache:
        return d._cache["faces"]
    orbits = d._perm_orbits(d.face_next)
    face_of = [0] * (4 * d.n)
    for i, cyc in enumerate(orbits):
        for x in cyc:
            face_of[x] = i
    fs = FaceSet(tuple(orbits), tuple(face_of))
    d._cache["faces"] = fs
    return fs


def euler_genus(d):
    """(chi, genus) of the domain surface; requires a connected valid map."""
    report = d.validate(mode="components")
    if report.ok and report.stats[2] != 1:
        raise ValueError("disconnected diagram")
    F = len(trace_faces(d).faces)
    chi = d.n - 2 * d.n + F
    assert chi % 2 == 0 and chi <= 2, f"impossible Euler characteristic {chi}"
    return chi, (2 - chi) // 2


def surface_homology(d, ring="z"):
    key = ("surface_homology", ring)
    if key not in d._cache:
        d._cache[key] = SurfaceHomology(d, ring)
    return d._cache[key]


def curve_class(d, curve, ring="z"):
    """Class of a curve's edge 1-cycle in the H1(S) basis (length 2g)."""
    return surface_homology(d, ring).express_darts(curve.darts)


def diagram_class(d, ring="z2"):
    """Class of the whole diagram [D] = sum of one orientation per curve."""
    h = surface_homology(d, ring)
    total = [0] * h.rank
    for c in d.curves():
        cls = h.express_darts(c.darts)
        total = [a + b for a, b in zip(total, cls)]
    if ring == "z2":
        total = [a % 2 for a in total]
    return total


def checkerboard_with_witness(d):
    """(Checkerboard, None) or (None, odd closed face walk witness)."""
    fs = trace_faces(d)
    theta = d.theta
    nf = len(fs.faces)
    adj = [[] for _ in range(nf)]
    for e in d.darts:
        if e < theta[e]:
            a, b = fs.face_of[e], fs.face_of[theta[e]]
            if a == b:
                return None, ("self-adjacent face", a, e)
            adj[a].append(b)
            adj[b].append(a)
    color = [-1] * nf
    parent = {0: None}
    color[0] = 0
    queue = [0]
    while queue:
        f = queue.pop()
        for g in adj[f]:
            if color[g] < 0:
                color[g] = 1 - color[f]
                parent[g] = f
                queue.append(g)
            elif color[g] == color[f]:
                # odd closed walk: paths to the BFS root plus edge f-g
                def path(x):
                    p = []
                    while x is not None:
                        p.append(x)
                        x = parent[x]
                    return p
                return None, ("odd walk", tuple(reversed(path(f))) + tuple(path(g)))
    assert all(c >= 0 for c in color), "face graph disconnected on connected surface"
    return Checkerboard(tuple(color)), None


def checkerboard(d):
    """A 2-coloring of the faces with opposite colors across every edge,
    or None when no such coloring exists."""
    cb, _ = checkerboard_with_witness(d)
    return cb

"""Exhaustive enumeration of valid Johansson diagrams with small q.

Strategy: enumerate edge involutions theta by matching the smallest
unmatched dart first (with vertex-relabeling symmetry breaking), then for
each theta enumerate sisterings tau equivariantly: tau is determined on a
whole undirected curve by the image of one dart, propagated along the
generators s and theta.  Every candidate runs full validation; survivors
are deduplicated by canonical code.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .diagram import JohanssonDiagram, strand_partner, vertex


@dataclass
class EnumSpec:
    q: int
    genus: int | None = None
    checkered: bool | None = None
    predicate: object = None  # optional callable diagram -> bool
    max_count: int | None = None
    time_limit: float | None = None  # seconds
    symmetry_break: bool = True


@dataclass
class EnumResult:
    diagrams: list
    complete: bool
    raw_count: int = 0  # validated diagrams before isomorphism dedup


class _Deadline:
    def __init__(self, limit):
        self.t0 = time.monotonic()
        self.limit = limit
        self.hit = False

    def expired(self):
        if self.limit is not None and time.monotonic() - self.t0 > self.limit:
            self.hit = True
        return self.hit


def _theta_matchings(n, deadline, symmetry_break=True):
    """Yield fixed-point-free involutions on 4n darts as lists."""
    nd = 4 * n
    theta = [-1] * nd
    deg = [0] * n  # matched darts per vertex

    def rec(lo):
        if deadline.expired():
            return
        while lo < nd and theta[lo] >= 0:
            lo += 1
        if lo == nd:
            yield list(theta)
            return
        v = vertex(lo)
        first_fresh = None
        for e in range(lo + 1, nd):
            if theta[e] >= 0:
                continue
            w = vertex(e)
            if symmetry_break and w != v and deg[w] == 0:
                # fresh vertex: only the smallest one, aligned to slot 0
                if first_fresh is None:
                    first_fresh = w
                if w != first_fresh or e != 4 * w:
                    continue
            theta[lo] = e
            theta[e] = lo
            deg[v] += 1
            deg[w] += 1
            yield from rec(lo + 1)
            theta[lo] = -1
            theta[e] = -1
            deg[v] -= 1
            deg[w] -= 1
        return

    yield from rec(0)


def _has_reversing_curve(theta):
    """True if some directed curve contains its own reversal (tau-independent,
    so a whole theta branch can be discarded before sistering)."""
    nd = len(theta)
    seen = [False] * nd
    for start in range(nd):
        if seen[start]:
            continue
        orbit = []
        d = start
        while not seen[d]:
            seen[d] = True
            orbit.append(d)
            d = strand_partner(theta[d])
        orbit_set = set(orbit)
        if any(theta[x] in orbit_set for x in orbit):
            return True
    return False


def _undirected_curves(theta):
    """Orbits of {s, theta} as sorted dart lists."""
    nd = len(theta)
    seen = [False] * nd
    out = []
    for start in range(nd):
        if seen[start]:
            continue
        comp = []
        stack = [start]
        seen[start] = True
        while stack:
            d = stack.pop()
            comp.append(d)
            for e in (strand_partner(d), theta[d]):
                if not seen[e]:
                    seen[e] = True
                    stack.append(e)
        out.append(sorted(comp))
    return out


def _propagate(theta, a0, b0, curve_a):
    """tau image of curve A from seed tau(a0)=b0, or None on conflict."""
    img = {a0: b0}
    stack = [a0]
    while stack:
        x = stack.pop()
        y = img[x]
        for fx, fy in ((strand_partner(x), strand_partner(y)), (theta[x], theta[y])):
            if fx in img:
                if img[fx] != fy:
                    return None
            else:
                img[fx] = fy
                stack.append(fx)
    if len(set(img.values())) != len(curve_a):
        return None
    return img


def _tau_assignments(theta, deadline):
    """Yield candidate sisterings for the given theta."""
    curves = _undirected_curves(theta)
    if len(curves) % 2 != 0:
        return
    curve_of = {}
    for i, c in enumerate(curves):
        for d in c:
            curve_of[d] = i
    nd = len(theta)

    def rec(remaining, tau_parts):
        if deadline.expired():
            return
        if not remaining:
            tau = [-1] * nd
            for img in tau_parts:
                for x, y in img.items():
                    tau[x] = y
                    tau[y] = x
            yield tau
            return
        ia = min(remaining, key=lambda i: curves[i][0])
        a0 = curves[ia][0]
        for ib in remaining:
            if ib == ia or len(curves[ib]) != len(curves[ia]):
                continue
            for b0 in curves[ib]:
                img = _propagate(theta, a0, b0, curves[ia])
                if img is None:
                    continue
                yield from rec(remaining - {ia, ib}, tau_parts + [img])

    yield from rec(frozenset(range(len(curves))), [])


def enumerate_diagrams(spec: EnumSpec) -> EnumResult:
    """Enumerate valid diagrams with q triple points up to isomorphism.

    Complete for q <= 2 when no limits are hit (the returned flag says so)."""
    if spec.q < 1:
        raise ValueError("q must be >= 1")
    n = 3 * spec.q
    deadline = _Deadline(spec.time_limit)
    seen_codes = set()
    out = []
    raw = 0
    complete = True
    for theta in _theta_matchings(n, deadline, spec.symmetry_break):
        if deadline.expired():
            complete = False
            break
        if n % 3 == 0 and _has_reversing_curve(theta):
            continue
        for tau in _tau_assignments(theta, deadline):
            if deadline.expired():
                complete = False
                break
            d = JohanssonDiagram(theta, tau)
            # cheap triplet screen before the full orbit-based validation
            if not d._triplet_orbits()[0]:
                continue
            if not d.validate().ok:
                continue
            raw += 1
            if spec.genus is not None or spec.checkered is not None:
                from . import surface

                if spec.genus is not None and surface.euler_genus(d)[1] != spec.genus:
                    continue
                if spec.checkered is not None:
                    if (surface.checkerboard(d) is not None) != spec.checkered:
                        continue
            if spec.predicate is not None and not spec.predicate(d):
                continue
            code = d.canonical_code()
            if code in seen_codes:
                continue
            seen_codes.add(code)
            out.append(d)
            if spec.max_count is not None and len(out) >= spec.max_count:
                return EnumResult(out, False, raw)
    if deadline.hit:
        complete = False
    return EnumResult(out, complete, raw)

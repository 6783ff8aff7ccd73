"""Triple point bounds, certification, and spectrum assembly.

t_g denotes the minimal number of triple points among filling diagrams of
genus g for a fixed target manifold.  Lower bounds come from declared
assumptions (rule tags); upper bounds come from seed diagrams transported
up in genus by handle piping (each pipe adds one genus and two triple
points).  An entry is pinned only when the two certificates meet.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import quotient, surface

FILLING = "filling"
SPHERE_PARITY = "sphere-domain-parity"
CHECKERED = "checkered"
Z2HS = "z2-homology-sphere-target"

_ALIASES = {
    "filling": FILLING,
    "sphere-domain-parity": SPHERE_PARITY,
    "parity": SPHERE_PARITY,
    "g0parity": SPHERE_PARITY,
    "checkered": CHECKERED,
    "z2-homology-sphere-target": Z2HS,
    "z2hs": Z2HS,
}


def _canon_assumptions(assumptions):
    out = set()
    for a in assumptions:
        if a not in _ALIASES:
            raise ValueError(f"unknown assumption tag {a!r}")
        out.add(_ALIASES[a])
    return out


@dataclass(frozen=True)
class BoundCertificate:
    genus: int
    assumptions: frozenset
    bound: int
    trace: tuple  # (rule description, bound after rule) pairs


@dataclass(frozen=True)
class SpectrumEntry:
    genus: int
    lower: BoundCertificate
    upper: int | None
    upper_source: str | None
    pinned: bool
    value: int | None


@dataclass(frozen=True)
class SpectrumTable:
    entries: tuple

    @property
    def values(self):
        return tuple(e.value for e in self.entries)

    @property
    def complete(self):
        return all(e.pinned for e in self.entries)


def lower_bound(g, assumptions):
    """Best lower bound on t_g implied by the given assumption tags."""
    if g < 0:
        raise ValueError("genus must be nonnegative")
    tags = _canon_assumptions(assumptions)
    bound = 0
    trace = []
    if FILLING in tags:
        bound = max(1, 2 * g - 1)
        trace.append((f"filling genus-{g} diagram needs at least max(1, 2g-1) triple points", bound))
    if SPHERE_PARITY in tags and g == 0:
        b = max(bound, 2 * g)
        if b % 2:
            b += 1
        if b > bound:
            bound = b
            trace.append(("sphere domains have an even triple point count", bound))
    if CHECKERED in tags:
        b = max(bound, 2 * g)
        if b % 2:
            b += 1
        if b > bound:
            bound = b
            trace.append(("checkered diagrams have an even count of at least 2g", bound))
    if Z2HS in tags:
        b = 2 * g + 2
        if b > bound:
            bound = b
            trace.append(("filling a Z/2-homology sphere needs at least 2g+2", bound))
    return BoundCertificate(g, frozenset(tags), bound, tuple(trace))


def certify(d):
    """Structured report of the filling-relevant invariants of a diagram."""
    report = d.validate()
    if not report.ok:
        raise ValueError(f"invalid diagram: {report.violations[0]}")
    from . import groups

    q, k, ncomp = report.stats
    if ncomp != 1:
        raise ValueError("certification requires a connected diagram")
    chi, g = surface.euler_genus(d)
    fr = quotient.filling_report(d)
    cb = surface.checkerboard(d)
    _, inv_z = groups.h1_paper(d, ring="z")
    _, inv_z2 = groups.h1_paper(d, ring="z2")
    h1_trivial_z2 = inv_z2.rank == 0 and not inv_z2.torsion
    verdicts = []
    if fr.r_required < 1:
        verdicts.append("cannot fill any manifold")
    if not h1_trivial_z2:
        verdicts.append("cannot fill any Z/2-homology sphere")
    flags = []
    if g == 0 and q % 2:
        flags.append("odd triple point count on a sphere domain")
    if cb is not None and q % 2:
        flags.append("odd triple point count on a checkered diagram")
    return {
        "q": q,
        "k": k,
        "genus": g,
        "faces": len(surface.trace_faces(d).faces),
        "r_required": fr.r_required,
        "checkered": cb is not None,
        "h1_z": str(inv_z),
        "h1_z2": str(inv_z2),
        "verdicts": verdicts,
        "parity_flags": flags,
    }


def _values(t):
    return t.values if isinstance(t, SpectrumTable) else tuple(t)


def is_exceptional(t, g):
    values = _values(t)
    if not 1 <= g < len(values):
        raise IndexError(f"genus {g} not covered by table of length {len(values)}")
    if values[g] is None or values[g - 1] is None:
        raise ValueError(f"table entries at genus {g - 1}, {g} are not pinned")
    return values[g] < values[g - 1] + 2


def height(t):
    values = _values(t)
    h = 0
    for g in range(1, len(values)):
        if values[g] is not None and values[g - 1] is not None and is_exceptional(values, g):
            h = g
    return h


def growth_violations(t):
    """Genera g where t_{g+1} > t_g + 2, contradicting the piping inequality."""
    values = _values(t)
    out = []
    for g in range(len(values) - 1):
        if values[g] is not None and values[g + 1] is not None and values[g + 1] > values[g] + 2:
            out.append(g)
    return out


def assemble_spectrum(seeds, lower_rules, max_genus):
    """Build a spectrum table from seed upper bounds and lower-bound rules.

    Each seed is (source, tag) where source is either a validated diagram or
    an abstract (genus, q) pair; tag is an opaque label carried into the
    provenance.  Piping a seed up to genus g costs two triple points per
    added genus, so a seed contributes the upper bound q + 2*(g - g_seed)
    for every g >= g_seed."""
    rules = _canon_assumptions(lower_rules)
    seed_data = []
    for source, tag in seeds:
        if isinstance(source, tuple):
            sg, sq = source
        else:
            report = source.validate()
            if not report.ok:
                raise ValueError(f"invalid seed diagram: {report.violations[0]}")
            sq = report.stats[0]
            sg = surface.euler_genus(source)[1]
        seed_data.append((sg, sq, tag))
    entries = []
    for g in range(max_genus + 1):
        lo = lower_bound(g, rules)
        upper = None
        src = None
        for sg, sq, tag in seed_data:
            if sg > g:
                continue
            u = sq + 2 * (g - sg)
            if upper is None or u < upper:
                upper, src = u, f"seed {tag} (genus {sg}, q={sq}) piped {g - sg} times"
        pinned = upper is not None and upper == lo.bound
        entries.append(SpectrumEntry(g, lo, upper, src, pinned, upper if pinned else None))
    return SpectrumTable(tuple(entries))

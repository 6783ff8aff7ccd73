"""Core combinatorial encoding of abstract Johansson diagrams.

A diagram with n crossings has 4n darts.  Dart d lives at crossing
vertex(d) = d // 4; the rotation sigma(d) = 4v + ((d % 4) + 1) % 4 lists the
darts at v in counterclockwise order, so the map is on an orientable
surface.  The two strands at v are the dart pairs {4v, 4v+2} and
{4v+1, 4v+3}; s(d) = 4v + ((d % 4) + 2) % 4 is the opposite dart of the
same strand.  theta is the edge involution (dart reversal), tau the
sistering involution.  Derived permutations: face successor
phi(d) = sigma(theta(d)), curve advance adv(d) = s(theta(d)).
"""

from __future__ import annotations

from dataclasses import dataclass, field


def vertex(d):
    return d >> 2


def sigma(d):
    return (d & ~3) | ((d + 1) & 3)


def strand_partner(d):
    return d ^ 2


def strand(d):
    # strand index in {0, 1} of dart d at its crossing
    return d & 1


@dataclass(frozen=True)
class Curve:
    """One directed curve: an adv-orbit, coherently oriented with its sister."""

    id: int
    darts: tuple
    sister_id: int

    @property
    def basepoint(self):
        return self.darts[0]

    def __len__(self):
        return len(self.darts)


@dataclass(frozen=True)
class ValidationReport:
    status: str  # "valid" | "invalid"
    violations: tuple  # of (condition id, witness)
    stats: tuple | None  # (q, k, component count) when valid

    @property
    def ok(self):
        return self.status == "valid"


class JohanssonDiagram:
    """Immutable; all operations are pure."""

    def __init__(self, theta, tau):
        theta = tuple(theta)
        tau = tuple(tau)
        if len(theta) == 0:
            raise ValueError("empty diagram unsupported")
        if len(theta) % 4 != 0:
            raise ValueError("dart count must be a multiple of 4")
        if len(tau) != len(theta):
            raise ValueError("theta and tau must have equal length")
        nd = len(theta)
        for name, arr in (("theta", theta), ("tau", tau)):
            for i, v in enumerate(arr):
                if not isinstance(v, int) or not (0 <= v < nd):
                    raise ValueError(f"{name}[{i}]={v} out of range [0,{nd})")
        self.theta = theta
        self.tau = tau
        self.n = nd // 4
        self._cache = {}

    def __eq__(self, other):
        return isinstance(other, JohanssonDiagram) and self.theta == other.theta and self.tau == other.tau

    def __hash__(self):
        return hash((self.theta, self.tau))

    def __repr__(self):
        return f"JohanssonDiagram(n={self.n})"

    @property
    def darts(self):
        return range(4 * self.n)

    def adv(self, d):
        return strand_partner(self.theta[d])

    def face_next(self, d):
        return sigma(self.theta[d])

    # -- orbit helpers -------------------------------------------------

    def _orbits(self, gens):
        """Orbit id per dart under the given generator maps (callables)."""
        nd = 4 * self.n
        ids = [-1] * nd
        count = 0
        for start in range(nd):
            if ids[start] >= 0:
                continue
            stack = [start]
            ids[start] = count
            while stack:
                d = stack.pop()
                for g in gens:
                    e = g(d)
                    if ids[e] < 0:
                        ids[e] = count
                        stack.append(e)
            count += 1
        return ids, count

    def _perm_orbits(self, perm):
        """Cyclically ordered orbits of a permutation given as a callable."""
        nd = 4 * self.n
        seen = [False] * nd
        orbits = []
        for start in range(nd):
            if seen[start]:
                continue
            cyc = []
            d = start
            while not seen[d]:
                seen[d] = True
                cyc.append(d)
                d = perm(d)
            orbits.append(tuple(cyc))
        return orbits

    def components(self):
        """Orbit ids of the underlying map's {sigma, theta} action."""
        key = "components"
        if key not in self._cache:
            self._cache[key] = self._orbits([sigma, lambda d: self.theta[d]])
        return self._cache[key]

    def full_components(self):
        """Components under {sigma, theta, tau} (used for canonical codes)."""
        key = "full_components"
        if key not in self._cache:
            self._cache[key] = self._orbits([sigma, lambda d: self.theta[d], lambda d: self.tau[d]])
        return self._cache[key]

    # -- validation ----------------------------------------------------

    def validate(self, mode="strict"):
        if mode not in ("strict", "components"):
            raise ValueError(f"unknown mode {mode!r}")
        key = ("validate", mode)
        if key in self._cache:
            return self._cache[key]

        theta, tau = self.theta, self.tau
        nd = 4 * self.n
        violations = []

        def check_involution(code, arr):
            for d in range(nd):
                if arr[d] == d:
                    violations.append((code, d))
                    return False
                if arr[arr[d]] != d:
                    violations.append((code, d))
                    return False
            return True

        v1 = check_involution("V1", theta)
        v2 = check_involution("V2", tau)

        v3 = True
        for d in range(nd):
            if tau[theta[d]] != theta[tau[d]]:
                violations.append(("V3", d))
                v3 = False
                break
        v4 = True
        for d in range(nd):
            if tau[strand_partner(d)] != strand_partner(tau[d]):
                violations.append(("V4", d))
                v4 = False
                break

        # V5: each directed curve, its reverse, and its tau image must lie in
        # three pairwise relations: tau of a curve never lands in the same
        # undirected curve (which contains both directions).
        k = None
        if v1 and v2 and v3 and v4:
            directed, _ = self._orbits([self.adv])
            undirected, ucount = self._orbits(
                [lambda d: strand_partner(d), lambda d: theta[d]]
            )
            v5 = True
            for d in range(nd):
                if directed[theta[d]] == directed[d]:
                    # a directed curve containing its own reversal
                    violations.append(("V5", d))
                    v5 = False
                    break
            if v5:
                for d in range(nd):
                    if undirected[tau[d]] == undirected[d]:
                        violations.append(("V5", d))
                        v5 = False
                        break
            if v5:
                k = ucount // 2
        else:
            v5 = False

        # V6: triplet condition via mu on (crossing, strand) pairs
        if self.n % 3 != 0:
            violations.append(("V6", ("crossing count", self.n)))
        elif v2 and v4:
            ok, witness = self._triplet_orbits()
            if not ok:
                violations.append(("V6", witness))

        if mode == "strict":
            _, ncomp = self.components()
            if ncomp != 1:
                violations.append(("V7", ncomp))

        _, ncomp = self.components()
        if violations:
            report = ValidationReport("invalid", tuple(violations), None)
        else:
            report = ValidationReport("valid", (), (self.n // 3, k, ncomp))
        self._cache[key] = report
        return report

    def _mu(self, pair):
        # mu = psi o chi on (crossing, strand) pairs
        v, j = pair
        d = self.tau[4 * v + (1 - j)]
        return (vertex(d), strand(d))

    def _triplet_orbits(self):
        """(True, orbit list) partitioning crossings into triples, or (False, witness)."""
        seen = set()
        orbits = []
        for v in range(self.n):
            for j in (0, 1):
                p = (v, j)
                if p in seen:
                    continue
                orbit = [p]
                seen.add(p)
                q = self._mu(p)
                while q != p:
                    if len(orbit) > 3:
                        break
                    orbit.append(q)
                    seen.add(q)
                    q = self._mu(q)
                if len(orbit) != 3:
                    return False, ("mu orbit", tuple(orbit))
                verts = [x[0] for x in orbit]
                if len(set(verts)) != 3:
                    return False, ("repeated crossing", tuple(orbit))
                orbits.append(orbit)
        # both orbits through a crossing must give the same triple
        triple_at = {}
        for orbit in orbits:
            tri = frozenset(x[0] for x in orbit)
            for v, _ in orbit:
                if v in triple_at and triple_at[v] != tri:
                    return False, ("mismatched triples", v)
                triple_at[v] = tri
        return True, orbits

    # -- curves and triplets --------------------------------------------

    def _require(self, conditions):
        report = self.validate(mode="components")
        bad = [viol for viol in report.violations if viol[0] in conditions]
        if bad:
            raise ValueError(f"diagram fails {bad[0][0]} (witness {bad[0][1]})")

    def curves(self):
        """2k directed curves, one per undirected curve, sisters coherently
        oriented: tau maps a curve's dart sequence index-wise onto its sister's."""
        if "curves" in self._cache:
            return self._cache["curves"]
        self._require({"V1", "V2", "V3", "V4", "V5"})
        tau = self.tau
        undirected, _ = self._orbits([lambda d: strand_partner(d), lambda d: self.theta[d]])
        orbits = self._perm_orbits(self.adv)
        orbit_of = {}
        for i, cyc in enumerate(orbits):
            for d in cyc:
                orbit_of[d] = i
        used = set()
        curves = []
        # process sister pairs by the global minimum dart of the pair
        for d in range(4 * self.n):
            u = undirected[d]
            if u in used:
                continue
            used.add(u)
            used.add(undirected[tau[d]])
            m = d  # minimal dart over both undirected curves of the pair
            rep_cyc = list(orbits[orbit_of[m]])
            i0 = rep_cyc.index(m)
            rep_darts = tuple(rep_cyc[i0:] + rep_cyc[:i0])
            sis_darts = tuple(tau[x] for x in rep_darts)
            rid = len(curves)
            curves.append(Curve(rid, rep_darts, rid + 1))
            curves.append(Curve(rid + 1, sis_darts, rid))
        curves = tuple(curves)
        self._cache["curves"] = curves
        return curves

    def curve_of_dart(self):
        """Map dart -> curve id for darts on the chosen (positive) orientations."""
        if "curve_of_dart" not in self._cache:
            m = {}
            for c in self.curves():
                for d in c.darts:
                    m[d] = c.id
            self._cache["curve_of_dart"] = m
        return self._cache["curve_of_dart"]

    def positive_dart(self, v, j):
        """The dart of strand j at crossing v on a positively oriented curve."""
        pos = self.curve_of_dart()
        d = 4 * v + j
        return d if d in pos else strand_partner(d)

    def triplets(self):
        """Partition of crossings into q sorted triples, sorted by minimum."""
        if "triplets" in self._cache:
            return self._cache["triplets"]
        self._require({"V1", "V2", "V3", "V4", "V5", "V6"})
        ok, orbits = self._triplet_orbits()
        assert ok
        triples = sorted({tuple(sorted(x[0] for x in orbit)) for orbit in orbits})
        self._cache["triplets"] = triples
        return triples

    def labeled_triplets(self):
        """Per triplet: crossings (P1,P2,P3), outgoing darts (d1,d2,d3) and
        curve ids (alpha,beta,gamma) with P1 on alpha and tau(gamma),
        P2 on beta and tau(alpha), P3 on gamma and tau(beta)."""
        if "labeled_triplets" in self._cache:
            return self._cache["labeled_triplets"]
        tau = self.tau
        pos = self.curve_of_dart()
        out = []
        for tri in self.triplets():
            p1 = tri[0]
            d1 = min(self.positive_dart(p1, 0), self.positive_dart(p1, 1))
            t1 = tau[d1]
            p2 = vertex(t1)
            d2 = self.positive_dart(p2, 1 - strand(t1))
            t2 = tau[d2]
            p3 = vertex(t2)
            d3 = self.positive_dart(p3, 1 - strand(t2))
            t3 = tau[d3]
            assert vertex(t3) == p1 and strand(t3) == 1 - strand(d1)
            out.append(
                {
                    "crossings": (p1, p2, p3),
                    "darts": (d1, d2, d3),
                    "curves": (pos[d1], pos[d2], pos[d3]),
                }
            )
        out = tuple(out)
        self._cache["labeled_triplets"] = out
        return out

    # -- isomorphism ----------------------------------------------------

    def _component_code(self, comp_darts, want_map=False):
        """Minimal canonical code of one {sigma,theta,tau} component over all
        start darts and both rotation directions."""
        theta, tau = self.theta, self.tau
        best = None
        best_map = None
        for start in comp_darts:
            for flip in (False, True):
                # vmap: old vertex -> (new vertex id, slot offset); the dart
                # that discovered a vertex is aligned to slot 0
                vmap = {}
                new2old = {}

                def add_vertex(d, vmap=vmap, new2old=new2old, flip=flip):
                    w = len(vmap)
                    off = d & 3
                    vmap[vertex(d)] = (w, off)
                    for j in range(4):
                        od = (d & ~3) | j
                        slot = (off - j) % 4 if flip else (j - off) % 4
                        new2old[4 * w + slot] = od

                def relabel(d, vmap=vmap, flip=flip):
                    w, off = vmap[vertex(d)]
                    slot = (off - (d & 3)) % 4 if flip else ((d & 3) - off) % 4
                    return 4 * w + slot

                add_vertex(start)
                code = []
                worse = False
                for p in range(2 * len(comp_darts)):
                    d = new2old[p >> 1]
                    e = theta[d] if p & 1 == 0 else tau[d]
                    if vertex(e) not in vmap:
                        add_vertex(e)
                    code.append(relabel(e))
                    if best is not None:
                        if code[-1] > best[len(code) - 1]:
                            worse = True
                            break
                        if code[-1] < best[len(code) - 1]:
                            best = None  # strictly better prefix
                if worse:
                    continue
                code = tuple(code)
                if best is None or code < best:
                    best = code
                    if want_map:
                        best_map = {od: nd_ for nd_, od in new2old.items()}
        return (best, best_map) if want_map else best

    def canonical_code(self):
        if "canonical_code" in self._cache:
            return self._cache["canonical_code"]
        ids, ncomp = self.full_components()
        comps = [[] for _ in range(ncomp)]
        for d in self.darts:
            comps[ids[d]].append(d)
        codes = tuple(sorted(self._component_code(c) for c in comps))
        self._cache["canonical_code"] = codes
        return codes

    def isomorphic(self, other):
        """(verdict, dart bijection self->other or None).

        The bijection is returned for connected diagrams only."""
        if self.canonical_code() != other.canonical_code():
            return False, None
        _, nc1 = self.full_components()
        _, nc2 = other.full_components()
        if nc1 == nc2 == 1:
            _, m1 = self._component_code(list(self.darts), want_map=True)
            _, m2 = other._component_code(list(other.darts), want_map=True)
            inv2 = {v: k for k, v in m2.items()}
            return True, {d: inv2[m1[d]] for d in self.darts}
        return True, None


# -- serialization -------------------------------------------------------


def parse_diagram(text):
    """Parse the `jd v1` format.  `#` starts a comment; whitespace tolerant."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines or lines[0].split() != ["jd", "v1"]:
        raise ValueError("malformed header: expected 'jd v1'")
    tokens = " ".join(lines[1:]).split()
    if len(tokens) < 2 or tokens[0] != "crossings":
        raise ValueError("malformed header: expected 'crossings <n>'")
    try:
        n = int(tokens[1])
    except ValueError:
        raise ValueError(f"non-integer crossing count {tokens[1]!r}") from None
    if n == 0:
        raise ValueError("empty diagram unsupported")
    if n < 0:
        raise ValueError("negative crossing count")
    rest = tokens[2:]

    def take(name, pos):
        if pos >= len(rest) or rest[pos] != name:
            raise ValueError(f"expected '{name}' section")
        vals = []
        pos += 1
        while pos < len(rest) and len(vals) < 4 * n:
            tok = rest[pos]
            if tok in ("theta", "tau"):
                break
            try:
                vals.append(int(tok))
            except ValueError:
                raise ValueError(f"non-integer token {tok!r} in {name}") from None
            pos += 1
        if len(vals) != 4 * n:
            raise ValueError(f"{name} has {len(vals)} entries, expected {4 * n}")
        return vals, pos

    theta, pos = take("theta", 0)
    tau, pos = take("tau", pos)
    if pos != len(rest):
        raise ValueError(f"trailing tokens after tau: {rest[pos:pos + 3]}")
    for name, arr in (("theta", theta), ("tau", tau)):
        for i, v in enumerate(arr):
            if not (0 <= v < 4 * n):
                raise ValueError(f"{name}[{i}]={v} out of range [0,{4 * n})")
    return JohanssonDiagram(theta, tau)


def serialize_diagram(d):
    return (
        "jd v1\n"
        f"crossings {d.n}\n"
        "theta " + " ".join(map(str, d.theta)) + "\n"
        "tau " + " ".join(map(str, d.tau)) + "\n"
    )

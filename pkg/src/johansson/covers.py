"""Finite covers: lift a diagram along a permutation representation of the
dual/surfacewise presentation.

Conventions: permutations act on sheets {0..m-1} on the right, i.e. a word
is evaluated left to right ((p*q)(i) = q(p(i))).  The surface cover uses
tree-trivialized voltages: spanning-tree darts carry the identity, the
co-tree dart of generator s_e carries its image (inverse in the reversed
direction).  The lifted sistering is seeded at the lifted curve basepoints
by the dual generator's image and propagated along curves; any conflict,
non-involutivity, or lifted-validation failure is reported as a named
claim failure (a bug or an invalid representation that slipped through).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import groups, quotient, surface
from .diagram import JohanssonDiagram, strand_partner, vertex


class ClaimError(Exception):
    def __init__(self, claim, detail):
        super().__init__(f"{claim}: {detail}")
        self.claim = claim


@dataclass(frozen=True)
class PermRep:
    m: int
    images: dict  # generator name -> tuple permutation of {0..m-1}

    def perm(self, name, sign=1):
        p = self.images[name]
        if sign >= 0:
            return p
        inv = [0] * self.m
        for i, j in enumerate(p):
            inv[j] = i
        return tuple(inv)


@dataclass(frozen=True)
class CoveringDiagram:
    diagram: JohanssonDiagram
    m: int
    base: JohanssonDiagram

    def project(self, dart):
        return dart % (4 * self.base.n)

    def sheet(self, dart):
        return dart // (4 * self.base.n)

    def components_census(self):
        """Per {sigma,theta}-component: (crossings, euler characteristic, genus)."""
        ids, ncomp = self.diagram.components()
        comp_darts = [[] for _ in range(ncomp)]
        for x in self.diagram.darts:
            comp_darts[ids[x]].append(x)
        fs = surface.trace_faces(self.diagram)
        out = []
        for darts in comp_darts:
            nv = len({x >> 2 for x in darts})
            ne = len(darts) // 2
            nf = len({fs.face_of[x] for x in darts})
            chi = nv - ne + nf
            out.append((nv, chi, (2 - chi) // 2))
        return out


def parse_rep(text):
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines or lines[0].split() != ["rep", "v1"]:
        raise ValueError("malformed header: expected 'rep v1'")
    if len(lines) < 2 or lines[1].split()[0] != "sheets":
        raise ValueError("expected 'sheets <m>'")
    m = int(lines[1].split()[1])
    images = {}
    for line in lines[2:]:
        toks = line.split()
        name, vals = toks[0], [int(t) for t in toks[1:]]
        if len(vals) != m:
            raise ValueError(f"generator {name}: expected {m} entries")
        perm = tuple(v - 1 for v in vals)  # file is one-based
        if sorted(perm) != list(range(m)):
            raise ValueError(f"generator {name}: not a permutation")
        images[name] = perm
    return PermRep(m, images)


def serialize_rep(rep):
    lines = ["rep v1", f"sheets {rep.m}"]
    for name in sorted(rep.images):
        lines.append(name + " " + " ".join(str(v + 1) for v in rep.images[name]))
    return "\n".join(lines) + "\n"


def rep_from_hom(p, G, images):
    """PermRep from a homomorphism into a finite group via its right-regular
    permutation action."""
    perms = {}
    for name, g in zip(p.generators, images):
        perms[name] = tuple(G.mult[i][g] for i in range(G.order))
    return PermRep(G.order, perms)


def _eval_word(rep, p, word):
    cur = tuple(range(rep.m))
    for g in word:
        q = rep.perm(p.generators[abs(g) - 1], 1 if g > 0 else -1)
        cur = tuple(q[cur[i]] for i in range(rep.m))
    return cur


def validate_rep(d, rep):
    """(True, None) iff every relator of the dual presentation maps to the
    identity; otherwise (False, first failing relator)."""
    p = groups.pi1_paper(d)
    missing = [n for n in p.generators if n not in rep.images]
    if missing:
        raise ValueError(f"representation missing generators {missing}")
    for name, perm in rep.images.items():
        if sorted(perm) != list(range(rep.m)):
            raise ValueError(f"generator {name}: not a permutation of size {rep.m}")
    ident = tuple(range(rep.m))
    for i, w in enumerate(p.relators):
        if _eval_word(rep, p, w) != ident:
            label = p.basing["relator_labels"][i] if p.basing else i
            return False, (label, w)
    return True, None


def lift_diagram(d, rep):
    ok, witness = validate_rep(d, rep)
    if not ok:
        raise ValueError(f"representation fails relator {witness[0]}")
    p = groups.pi1_paper(d)
    basing = p.basing["smap"]
    theta, tau = d.theta, d.tau
    nd = 4 * d.n
    m = rep.m
    # voltage permutation per dart
    ident = tuple(range(m))
    volt = {}
    for x in d.darts:
        if x in basing.tree_darts:
            volt[x] = ident
        else:
            e = min(x, theta[x])
            volt[x] = rep.perm(f"s{e}", 1 if x == e else -1)
    hat_theta = [-1] * (m * nd)
    for i in range(m):
        for x in range(nd):
            hat_theta[i * nd + x] = volt[x][i] * nd + theta[x]

    def hat_s(X):
        return (X // nd) * nd + strand_partner(X % nd)

    def hat_t(X):
        return hat_theta[X]

    # seed and propagate the lifted sistering
    img = {}
    curves = d.curves()
    for c in curves:
        if c.id % 2 != 0:
            continue
        b = c.basepoint
        rho = rep.images[f"a{c.id}"]
        for i in range(m):
            X0, Y0 = i * nd + b, rho[i] * nd + tau[b]
            stack = [(X0, Y0)]
            while stack:
                X, Y = stack.pop()
                if X in img:
                    if img[X] != Y:
                        raise ClaimError(
                            "sistering well defined",
                            f"conflicting lift at dart {X}: {img[X]} vs {Y}",
                        )
                    continue
                img[X] = Y
                stack.append((hat_s(X), hat_s(Y)))
                stack.append((hat_t(X), hat_t(Y)))
    hat_tau = [-1] * (m * nd)
    for X, Y in img.items():
        for a, b in ((X, Y), (Y, X)):
            if hat_tau[a] not in (-1, b):
                raise ClaimError(
                    "sistering is an involution",
                    f"dart {a} sistered to both {hat_tau[a]} and {b}",
                )
            hat_tau[a] = b
    if any(v < 0 for v in hat_tau):
        raise ClaimError("sistering well defined", "unreached lifted dart")
    lifted = JohanssonDiagram(hat_theta, hat_tau)
    report = lifted.validate(mode="components")
    if not report.ok:
        raise ClaimError("lift is a Johansson diagram", report.violations[0])
    return CoveringDiagram(lifted, m, d)


def rep_from_cw(d, cw_images, G):
    """Adapter: a homomorphism given on the CW generators of pi1(Sigma)
    (images in the finite group G) is transported to the dual presentation
    through explicit loop rewriting, then validated.

    Returns the PermRep of the right-regular action, or raises if the
    transported representation fails a relator."""
    qc = quotient.build_quotient(d)
    cw = groups.pi1_cw(qc)
    cw_gen_of_edge = {}
    for i, name in enumerate(cw.generators):
        cw_gen_of_edge[int(name[1:])] = i
    p = groups.pi1_paper(d)
    basing = p.basing["smap"]
    lambdas = p.basing["lambdas"]
    curves = {c.id: c for c in d.curves()}

    def sigma_word(darts):
        w = []
        for x in darts:
            e, sgn = qc.edge_of_dart[x]
            if e in cw_gen_of_edge:
                w.append((cw_gen_of_edge[e], sgn))
        return w

    def evaluate(w):
        acc = G.identity
        for gi, sgn in w:
            x = cw_images[gi]
            if sgn < 0:
                x = G.inv[x]
            acc = G.mult[acc][x]
        return acc

    images = []
    for name in p.generators:
        if name.startswith("s"):
            e = int(name[1:])
            darts = (
                basing.tree_path(vertex(e))
                + [e]
                + basing.inv_darts(basing.tree_path(vertex(d.theta[e])))
            )
        else:
            cid = int(name[1:])
            sid = curves[cid].sister_id
            darts = lambdas[cid] + basing.inv_darts(lambdas[sid])
        images.append(evaluate(sigma_word(darts)))
    rep = rep_from_hom(p, G, images)
    ok, witness = validate_rep(d, rep)
    if not ok:
        raise ValueError(f"transported representation fails relator {witness[0]}")
    return rep

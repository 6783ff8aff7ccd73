"""Fundamental group presentations of the quotient pseudo-surface and the
abelianized tableau.

Two independent routes to pi1(Sigma):
  * pi1_cw: spanning tree of the quotient 1-skeleton, face relators.
  * pi1_paper: surfacewise generators (co-tree edges of the map of S) plus
    one dual generator per directed curve, with relator families R1-R4
    assembled from explicit edge paths (tree paths, along-curve paths).

h1_paper abelianizes the dual/surface presentation directly into a tableau
over the H1(S) basis and the folded dual generators.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import linalg, surface
from .diagram import vertex


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple  # names
    relators: tuple  # words: tuples of signed 1-based generator indices
    basing: object = None  # audit data, not part of equality

    def __post_init__(self):
        for w in self.relators:
            for g in w:
                if g == 0 or abs(g) > len(self.generators):
                    raise ValueError(f"relator references unknown generator {g}")

    def export(self):
        lines = [" ".join(self.generators)]
        for w in self.relators:
            lines.append(" ".join(str(g) for g in w))
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class AbelianInvariants:
    ring: str  # "z" | "z2"
    torsion: tuple  # invariant factors > 1 (empty over z2)
    rank: int  # free rank over z; dimension over z2

    def __str__(self):
        if self.ring == "z2":
            return f"(Z/2)^{self.rank}"
        parts = [f"Z/{t}" for t in self.torsion] + ["Z"] * self.rank
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class ARTableau:
    rows: tuple  # each of length 2g + k
    row_labels: tuple  # "AR3:<pair>" or "AR2:<triplet>"
    nsurface: int  # 2g
    ndual: int  # k

    def ar3_column_sums(self):
        sums = [0] * self.nsurface
        for row, label in zip(self.rows, self.row_labels):
            if label.startswith("AR3"):
                for i in range(self.nsurface):
                    sums[i] += row[i]
        return sums


def free_reduce(word):
    out = []
    for g in word:
        if out and out[-1] == -g:
            out.pop()
        else:
            out.append(g)
    return tuple(out)


# -- pi1 via the CW structure of the quotient -----------------------------


def _graph_spanning_tree(nverts, edge_ends):
    """BFS tree from vertex 0 over edges in ascending index order.

    Returns (tree edge set, parent: vertex -> (parent vertex, edge, sign))
    where sign +1 means the tree edge is traversed rep-forward going down
    from the root."""
    incident = [[] for _ in range(nverts)]
    for i, (a, b) in enumerate(edge_ends):
        incident[a].append((i, b, 1))
        incident[b].append((i, a, -1))
    for lst in incident:
        lst.sort()
    tree = set()
    parent = {0: None}
    queue = [0]
    while queue:
        v = queue.pop(0)
        for i, w, sgn in incident[v]:
            if w not in parent:
                parent[w] = (v, i, sgn)
                tree.add(i)
                queue.append(w)
    if len(parent) != nverts:
        raise ValueError("quotient 1-skeleton disconnected")
    return tree, parent


def pi1_cw(qc):
    """Presentation of pi1(Sigma) from the quotient complex: generators are
    co-tree Sigma-edges, relators are face boundaries."""
    tree, _ = _graph_spanning_tree(qc.nverts, qc.edge_ends)
    gen_of_edge = {}
    names = []
    for i in range(qc.nedges):
        if i not in tree:
            gen_of_edge[i] = len(names) + 1
            names.append(f"x{i}")
    relators = []
    for fword in qc.faces:
        w = free_reduce(sgn * gen_of_edge[e] for e, sgn in fword if e in gen_of_edge)
        if w:
            relators.append(w)
    return GroupPresentation(tuple(names), tuple(relators), basing={"tree": tree})


# -- the dual/surfacewise presentation ------------------------------------


class _SMapBasing:
    """Spanning tree and paths in the map of S (vertices = crossings)."""

    def __init__(self, d):
        self.d = d
        theta = d.theta
        parent = {0: None}  # vertex -> dart pointing from parent to vertex
        tree_darts = set()
        queue = [0]
        while queue:
            v = queue.pop(0)
            for j in range(4):
                x = 4 * v + j
                w = vertex(theta[x])
                if w not in parent:
                    parent[w] = x
                    tree_darts.add(x)
                    tree_darts.add(theta[x])
                    queue.append(w)
        if len(parent) != d.n:
            raise ValueError("diagram map disconnected")
        self.parent = parent
        self.tree_darts = tree_darts
        # surface generators: one per co-tree edge, named by representative dart
        self.gen_of_edge = {}
        self.gen_names = []
        for x in d.darts:
            if x < theta[x] and x not in tree_darts:
                self.gen_of_edge[x] = len(self.gen_names) + 1
                self.gen_names.append(f"s{x}")

    def tree_path(self, v):
        """Darts of the tree path from vertex 0 to v."""
        path = []
        while self.parent[v] is not None:
            x = self.parent[v]
            path.append(x)
            v = vertex(x)
        return list(reversed(path))

    def word_of(self, darts, offset=0):
        """Word of a dart path in the surface generators (tree darts vanish)."""
        theta = self.d.theta
        w = []
        for x in darts:
            if x in self.tree_darts:
                continue
            e = min(x, theta[x])
            g = self.gen_of_edge[e] + offset
            w.append(g if x == e else -g)
        return w

    def inv_darts(self, darts):
        return [self.d.theta[x] for x in reversed(darts)]


def _curve_paths(d, basing):
    """Per-curve basepoint tree paths lambda_X (as dart lists)."""
    return {c.id: basing.tree_path(vertex(c.basepoint)) for c in d.curves()}


def _along_curve(d, start, stop):
    """Darts from dart `start` along adv up to (excluding) dart `stop`."""
    out = []
    f = start
    while f != stop:
        out.append(f)
        f = d.adv(f)
        assert len(out) <= 4 * d.n
    return out


def _t_paths(d, basing, lambdas):
    """For each labeled triplet and each labeled curve, the loops t_X and
    t_{tau X} as closed dart paths at the base crossing 0.

    Returns a list (per triplet) of three pairs (t_X darts, t_tauX darts)
    together with the labeled curve ids."""
    tau = d.tau
    pos = d.curve_of_dart()
    curves = {c.id: c for c in d.curves()}
    out = []
    for lab in d.labeled_triplets():
        entries = []
        for dx in lab["darts"]:
            cid = pos[dx]
            sid = curves[cid].sister_id
            b = curves[cid].basepoint
            dpath = _along_curve(d, dx, b)
            omega = basing.tree_path(vertex(dx))
            t_x = omega + dpath + basing.inv_darts(lambdas[cid])
            tdx = tau[dx]
            dpath_s = [tau[x] for x in dpath]
            omega_s = basing.tree_path(vertex(tdx))
            t_sx = omega_s + dpath_s + basing.inv_darts(lambdas[sid])
            entries.append((cid, sid, t_x, t_sx))
        out.append((lab, entries))
    return out


def pi1_paper(d):
    """The dual/surfacewise presentation of pi1(Sigma): generators are the
    co-tree edges of the map of S plus one dual generator per directed
    curve; relators R1 (dual sister inversion), R2 (one per triple point),
    R3 (double-curve relators), R4 (face boundaries)."""
    if "pi1_paper" in d._cache:
        return d._cache["pi1_paper"]
    basing = _SMapBasing(d)
    curves = d.curves()
    ns = len(basing.gen_names)
    dual_of = {c.id: ns + 1 + c.id for c in curves}  # 1-based gen index
    names = list(basing.gen_names) + [f"a{c.id}" for c in curves]
    lambdas = _curve_paths(d, basing)
    relators = []
    labels = []
    # R1: a_{tau alpha} a_alpha
    for c in curves:
        if c.id % 2 == 0:
            relators.append(free_reduce((dual_of[c.sister_id], dual_of[c.id])))
            labels.append(f"R1:{c.id}")
    # R2: one per triple point
    tpaths = _t_paths(d, basing, lambdas)
    for lab, entries in tpaths:
        w = []
        for cid, sid, t_x, t_sx in entries:
            w += basing.word_of(t_x)
            w.append(dual_of[cid])
            w += [-g for g in reversed(basing.word_of(t_sx))]
        relators.append(free_reduce(w))
        labels.append(f"R2:{lab['crossings']}")
    # R3: W_alpha = a W_{tau alpha} a^-1
    for c in curves:
        if c.id % 2 != 0:
            continue
        s = curves[c.sister_id]

        def wloop(cv):
            darts = lambdas[cv.id] + list(cv.darts) + basing.inv_darts(lambdas[cv.id])
            return basing.word_of(darts)

        a = dual_of[c.id]
        w = [-g for g in reversed(wloop(c))] + [a] + wloop(s) + [-a]
        relators.append(free_reduce(w))
        labels.append(f"R3:{c.id}")
    # R4: faces of the map of S
    for cyc in surface.trace_faces(d).faces:
        w = free_reduce(basing.word_of(list(cyc)))
        if w:
            relators.append(w)
            labels.append("R4")
    p = GroupPresentation(
        tuple(names),
        tuple(relators),
        basing={
            "smap": basing,
            "lambdas": lambdas,
            "relator_labels": tuple(labels),
            "dual_of": dual_of,
        },
    )
    d._cache["pi1_paper"] = p
    return p


# -- abelianization --------------------------------------------------------


def abelianized(p, ring="z"):
    n = len(p.generators)
    rows = []
    for w in p.relators:
        row = [0] * n
        for g in w:
            row[abs(g) - 1] += 1 if g > 0 else -1
        rows.append(row)
    if ring == "z":
        torsion, rank = linalg.invariant_factors(rows, n)
        return AbelianInvariants("z", tuple(torsion), rank)
    if ring == "z2":
        return AbelianInvariants("z2", (), linalg.gf2_dim_quotient(rows, n))
    raise ValueError(f"unsupported ring {ring!r}")


def h1_paper(d, ring="z"):
    """Abelianized dual/surfacewise presentation: generators are a basis of
    H1(S) (2g) plus one dual per sister pair (k, after folding the sister
    dual to minus the representative's); rows are AR3 (curve = sister curve)
    and AR2 (one per triple point).  Returns (ARTableau, AbelianInvariants)."""
    if ring not in ("z", "z2"):
        raise ValueError(f"unsupported ring {ring!r}")
    h = surface.surface_homology(d, "z")
    curves = d.curves()
    k = len(curves) // 2
    twog = h.rank
    rows = []
    labels = []
    for c in curves:
        if c.id % 2 != 0:
            continue
        ca = h.express_darts(c.darts)
        cs = h.express_darts(curves[c.sister_id].darts)
        rows.append([a - b for a, b in zip(ca, cs)] + [0] * k)
        labels.append(f"AR3:{c.id}")
    basing = _SMapBasing(d)
    lambdas = _curve_paths(d, basing)
    for lab, entries in _t_paths(d, basing, lambdas):
        row = [0] * (twog + k)
        for cid, sid, t_x, t_sx in entries:
            tx = h.express_darts(t_x)
            tsx = h.express_darts(t_sx)
            for i in range(twog):
                row[i] += tx[i] - tsx[i]
            pair = cid // 2
            row[twog + pair] += 1 if cid % 2 == 0 else -1
        rows.append(row)
        labels.append(f"AR2:{lab['crossings']}")
    tableau = ARTableau(tuple(tuple(r) for r in rows), tuple(labels), twog, k)
    n = twog + k
    if ring == "z":
        torsion, rank = linalg.invariant_factors([list(r) for r in rows], n)
        inv = AbelianInvariants("z", tuple(torsion), rank)
    else:
        inv = AbelianInvariants("z2", (), linalg.gf2_dim_quotient([list(r) for r in rows], n))
    return tableau, inv


# -- finite groups and homomorphism counting -------------------------------


class FiniteGroup:
    def __init__(self, name, mult):
        self.name = name
        self.mult = tuple(tuple(r) for r in mult)
        n = len(mult)
        self.order = n
        elems = set(range(n))
        for r in self.mult:
            if set(r) != elems:
                raise ValueError("multiplication table rows must be permutations")
        # identity
        e = None
        for i in range(n):
            if all(self.mult[i][j] == j and self.mult[j][i] == j for j in range(n)):
                e = i
        if e is None:
            raise ValueError("no identity element")
        self.identity = e
        inv = [None] * n
        for i in range(n):
            for j in range(n):
                if self.mult[i][j] == e and self.mult[j][i] == e:
                    inv[i] = j
            if inv[i] is None:
                raise ValueError("missing inverse")
        self.inv = tuple(inv)
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if self.mult[self.mult[a][b]][c] != self.mult[a][self.mult[b][c]]:
                        raise ValueError("multiplication not associative")

    def __repr__(self):
        return f"FiniteGroup({self.name})"


def cyclic_group(n):
    return FiniteGroup(f"Z/{n}", [[(i + j) % n for j in range(n)] for i in range(n)])


def direct_product(g1, g2):
    n1, n2 = g1.order, g2.order
    mult = [
        [g1.mult[a1][b1] * n2 + g2.mult[a2][b2] for b1 in range(n1) for b2 in range(n2)]
        for a1 in range(n1)
        for a2 in range(n2)
    ]
    return FiniteGroup(f"{g1.name}x{g2.name}", mult)


def _perm_group(name, perms):
    perms = [tuple(p) for p in perms]
    index = {p: i for i, p in enumerate(perms)}
    mult = [
        [index[tuple(q[p[x]] for x in range(len(p)))] for q in perms] for p in perms
    ]
    # convention: (p*q)(x) = q(p(x))
    return FiniteGroup(name, mult)


def symmetric_group_3():
    from itertools import permutations

    return _perm_group("S3", sorted(permutations(range(3))))


def dihedral_group_4():
    # symmetries of the square as permutations of its 4 vertices
    rot = (1, 2, 3, 0)
    ref = (1, 0, 3, 2)

    def compose(p, q):
        return tuple(q[p[x]] for x in range(4))

    elems = set()
    frontier = [(0, 1, 2, 3)]
    while frontier:
        p = frontier.pop()
        if p in elems:
            continue
        elems.add(p)
        frontier.append(compose(p, rot))
        frontier.append(compose(p, ref))
    assert len(elems) == 8
    return _perm_group("D4", sorted(elems))


def default_battery():
    z2 = cyclic_group(2)
    return (
        z2,
        cyclic_group(3),
        cyclic_group(4),
        direct_product(z2, z2),
        symmetric_group_3(),
        dihedral_group_4(),
    )


def fold_short_relators(p):
    """Eliminate generators via length-2 relators g h (so g = h^-1).

    A Tietze move: the group (hence any hom count) is unchanged."""
    gens = list(p.generators)
    relators = [list(w) for w in p.relators]
    while True:
        target = None
        for w in relators:
            if len(w) == 2 and abs(w[0]) != abs(w[1]):
                target = w
                break
        if target is None:
            break
        g, hh = target
        # eliminate generator |g|: g = h^-1 with h literal hh
        gi = abs(g)
        rep = [-hh] if g > 0 else [hh]  # word substituted for generator gi
        new_rel = []
        for w in relators:
            nw = []
            for x in w:
                if abs(x) == gi:
                    nw += rep if x > 0 else [-y for y in reversed(rep)]
                else:
                    nw.append(x)
            nw = free_reduce(nw)
            if nw:
                new_rel.append(list(nw))
        # reindex: drop generator gi
        remap = {}
        new_names = []
        for i, name in enumerate(gens, start=1):
            if i != gi:
                remap[i] = len(new_names) + 1
                new_names.append(name)
        relators = [[(1 if x > 0 else -1) * remap[abs(x)] for x in w] for w in new_rel]
        gens = new_names
    return GroupPresentation(tuple(gens), tuple(tuple(w) for w in relators))


def _hom_search(p, G, collect):
    q = fold_short_relators(p)
    ngen = len(q.generators)
    relators = [list(w) for w in q.relators]
    rel_gens = [frozenset(abs(g) - 1 for g in w) for w in relators]
    # greedy generator order: maximize newly completable relators
    order = []
    placed = set()
    while len(order) < ngen:
        best, best_score = None, (-1, 0)
        for i in range(ngen):
            if i in placed:
                continue
            comp = sum(1 for rg in rel_gens if i in rg and rg <= placed | {i})
            occ = sum(1 for rg in rel_gens if i in rg)
            if (comp, occ) > best_score:
                best, best_score = i, (comp, occ)
        order.append(best)
        placed.add(best)
    pos = {g: idx for idx, g in enumerate(order)}
    # relators checkable once all their generators are placed
    check_at = [[] for _ in range(ngen + 1)]
    for w, rg in zip(relators, rel_gens):
        when = max((pos[g] for g in rg), default=-1) + 1
        check_at[when].append(w)
    mult, inv, e = G.mult, G.inv, G.identity
    assign = [0] * ngen
    results = []
    count = 0

    def evaluate(w):
        acc = e
        for g in w:
            x = assign[abs(g) - 1]
            if g < 0:
                x = inv[x]
            acc = mult[acc][x]
        return acc

    def dfs(depth):
        nonlocal count
        if depth == ngen:
            count += 1
            if collect:
                results.append(tuple(assign))
            return
        gi = order[depth]
        for val in range(G.order):
            assign[gi] = val
            if all(evaluate(w) == e for w in check_at[depth + 1]):
                dfs(depth + 1)
        assign[gi] = 0

    # relators with no generators must already be trivial words (they are
    # freely reduced, so none exist); empty-generator case:
    if ngen == 0:
        return (1, [()]) if collect else (1, [])
    dfs(0)
    return count, results


def count_homs(p, G):
    """Exact number of homomorphisms from the presented group to G."""
    return _hom_search(p, G, collect=False)[0]


def find_homs(p, G):
    """All homomorphisms, as tuples of images of the original generators."""
    q = fold_short_relators(p)
    count, results = _hom_search(p, G, collect=True)
    # expand folded assignments back to the original generator list
    name_pos = {n: i for i, n in enumerate(q.generators)}
    out = []
    for a in results:
        full = []
        for name in p.generators:
            if name in name_pos:
                full.append(a[name_pos[name]])
            else:
                full.append(None)  # eliminated generator, fill below
        out.append(full)
    # eliminated generators: recover images by evaluating their defining
    # relators; we only ever eliminate via g = h^-1 chains, so iterate
    for full in out:
        changed = True
        while changed:
            changed = False
            for w in p.relators:
                if len(w) != 2:
                    continue
                i, j = abs(w[0]) - 1, abs(w[1]) - 1
                for (u, v, su, sv) in ((i, j, w[0], w[1]), (j, i, w[1], w[0])):
                    if full[u] is None and full[v] is not None:
                        # relator gu^su gv^sv = 1  =>  gu^su = (gv^sv)^-1
                        lv = full[v] if sv > 0 else G.inv[full[v]]
                        lu = G.inv[lv]
                        full[u] = lu if su > 0 else G.inv[lu]
                        changed = True
        assert all(v is not None for v in full)
    return [tuple(f) for f in out]


def presentations_agree(p1, p2, battery=None):
    """Compare computable fingerprints of two presentations.

    Returns ("consistent", details) or ("distinguished", witness)."""
    if battery is None:
        battery = default_battery()
    a1, a2 = abelianized(p1, "z"), abelianized(p2, "z")
    if (a1.torsion, a1.rank) != (a2.torsion, a2.rank):
        return "distinguished", f"abelianization over Z: {a1} vs {a2}"
    b1, b2 = abelianized(p1, "z2"), abelianized(p2, "z2")
    if b1.rank != b2.rank:
        return "distinguished", f"abelianization over Z/2: {b1} vs {b2}"
    details = {"h1_z": str(a1), "h1_z2": str(b1), "hom_counts": {}}
    for G in battery:
        c1, c2 = count_homs(p1, G), count_homs(p2, G)
        if c1 != c2:
            return "distinguished", f"hom count into {G.name}: {c1} vs {c2}"
        details["hom_counts"][G.name] = c1
    return "consistent", details

"""Handle piping: the local surgery near a triple point that raises the
genus by one and the triple point count by two while keeping the number of
required regions (and, for filling diagrams, the quotient homology)
unchanged.

Combinatorially the surgery replaces one diagram edge e (with a chosen
positive dart) and its sister edge tau(e) by two parallel channels of seven
edges running through six new crossings X1..X6.  The first channel (the
rerouted curve through e) makes an excursion over X5 and X6 on the new
handle, runs through X1 and X2, and slaloms back through X2 and X1; the
sister channel bumps through X3 and X4, runs through X3 and X4 again, and
makes the matching excursion over X6 and X5.  The sistering pairs the two
channels edge-for-edge, so the new crossings fall into the two triplets
{X1, X3, X5} and {X2, X4, X6} and no new curves appear.

At each new crossing the first passage runs through the strand {0, 2}; the
slot at which the second passage enters (1 or 3) is a handedness bit.
Which of the 64 bit assignments (and which of the three curve branches at
the triple point) realize the surgery depends on the face structure around
the piped edge, so handle_pipe selects the first configuration, in a fixed
deterministic order, that satisfies the surgery's contract: the result is
valid with q+2 triple points and genus g+1, and the quotient homology over
Z is preserved when any configuration achieves that.  Only contract-passing
configurations are exposed; they all satisfy the same postconditions.
"""

from __future__ import annotations

from itertools import product

from .diagram import JohanssonDiagram

# channel visit orders, as new-crossing offsets 0..5 for X1..X6
_CHANNEL_VISITS = [4, 5, 0, 1, 1, 0]  # rerouted edge: excursion, line, slalom
_SISTER_VISITS = [2, 3, 2, 3, 5, 4]  # sister edge: bump, line, excursion


def pipe_edge(d, e0, hand):
    """Pipe along the edge of dart e0 (and its sister edge tau(e0)) with the
    given handedness bits for X1..X6; no contract checking."""
    n = d.n
    theta = list(d.theta) + [-1] * 24
    tau = list(d.tau) + [-1] * 24
    A = e0
    B = d.theta[A]
    C = d.tau[A]
    D = d.theta[C]
    if len({A, B, C, D}) != 4:
        raise ValueError("edge and sister edge are not disjoint")

    # in/out darts per visit, channel visits first
    seen = set()
    passages = []
    for off in _CHANNEL_VISITS + _SISTER_VISITS:
        v = n + off
        if v not in seen:
            seen.add(v)
            i, o = 0, 2
        else:
            h = hand[off]
            i, o = h, h ^ 2
        passages.append((4 * v + i, 4 * v + o))

    def chain(start, end, visits):
        """Wire theta along a channel; return the 7 edges as dart pairs."""
        edges = []
        prev_out = start
        for i, o in visits:
            theta[prev_out] = i
            theta[i] = prev_out
            edges.append((prev_out, i))
            prev_out = o
        theta[prev_out] = end
        theta[end] = prev_out
        edges.append((prev_out, end))
        return edges

    ch = chain(A, B, passages[:6])
    sis = chain(C, D, passages[6:])
    # sistering: channel edges correspond index-wise, dart-for-dart
    for (f1, b1), (f2, b2) in zip(ch, sis):
        tau[f1] = f2
        tau[f2] = f1
        tau[b1] = b2
        tau[b2] = b1
    return JohanssonDiagram(theta, tau)


def _h1_quotient(d):
    from . import groups, quotient

    a = groups.abelianized(groups.pi1_cw(quotient.build_quotient(d)), "z")
    return (a.torsion, a.rank)


def _passes_base_contract(d, dp):
    from . import surface

    if not dp.validate().ok:
        return False
    return surface.euler_genus(dp)[1] == surface.euler_genus(d)[1] + 1


def pipe_configurations(d, triple_point_id):
    """Deterministic iterator over contract-passing piped diagrams.

    Yields (diagram, h1_preserved flag, (branch, handedness)); configurations
    preserving the quotient homology over Z come first."""
    labs = d.labeled_triplets()
    if not 0 <= triple_point_id < len(labs):
        raise ValueError(
            f"triple point id {triple_point_id} out of range [0,{len(labs)})"
        )
    base_h1 = _h1_quotient(d)
    darts = labs[triple_point_id]["darts"]
    fallback = []
    for branch in (0, 1, 2):
        for hand in product((1, 3), repeat=6):
            dp = pipe_edge(d, darts[branch], hand)
            if not _passes_base_contract(d, dp):
                continue
            if _h1_quotient(dp) == base_h1:
                yield dp, True, (branch, hand)
            else:
                fallback.append((dp, False, (branch, hand)))
    yield from fallback


def pipe_chain(d, steps):
    """Pipe `steps` times, choosing at each step the first triple point whose
    first configuration preserves the quotient homology over Z.

    Returns the list of successive diagrams (length steps)."""
    out = []
    for _ in range(steps):
        chosen = None
        for tid in range(d.n // 3):
            first = next(pipe_configurations(d, tid), None)
            if first is not None and first[1]:
                chosen = first[0]
                break
        if chosen is None:
            raise ValueError("no homology-preserving piping at any triple point")
        d = chosen
        out.append(d)
    return out


def handle_pipe(d, triple_point_id, choice=0):
    """Pipe near the given triple point.  choice indexes the deterministic
    sequence of contract-passing configurations; all of them yield a valid
    diagram with q+2 triple points and genus g+1, and homology-preserving
    configurations are preferred."""
    for i, (dp, _, _) in enumerate(pipe_configurations(d, triple_point_id)):
        if i == choice:
            return dp
    raise ValueError("no piping configuration satisfies the contract")

"""Bipartite monomial incidence graphs on two copies of F_q^3 and their girth.

A point (p1, p2, p3) and a line [l1, l2, l3] are adjacent iff

    p2 + l2 = f(p1, l1)   and   p3 + l3 = g(p1, l1),

where f = X^a Y^b and g = X^c Y^d are monomials.  Every vertex has exactly
q neighbors (the free first coordinate of the other side determines the
rest), so adjacency is computed on demand; nothing is materialized beyond
q x q monomial value tables, keeping BFS state at O(q^3).

Girth search exploits the translation automorphisms that shift
(p2, p3, l2, l3): they act transitively on each {p1 = c} slice and every
cycle alternates sides, so BFS sources can be restricted to the q point
representatives (p1, 0, 0) without missing a shortest cycle.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from . import permpoly
from .errors import CapExceededError

DEFAULT_GIRTH_CAP = 17

_NO_CYCLE = 1 << 30


class MonomialGraph:
    """G_q(X^a Y^b, X^c Y^d) with implicit q-regular adjacency."""

    def __init__(self, field, f_exps, g_exps):
        self.field = field
        self.f_exps = (int(f_exps[0]), int(f_exps[1]))
        self.g_exps = (int(g_exps[0]), int(g_exps[1]))
        self._tables = None

    def __repr__(self) -> str:
        return "MonomialGraph(q=%d, f=X^%dY^%d, g=X^%dY^%d)" % (
            self.field.q, *self.f_exps, *self.g_exps)

    def monomial_tables(self):
        """(f_values, g_values) as q x q tables indexed [x][y]; cached."""
        if self._tables is None:
            field = self.field
            q = field.q
            fa, fb = self.f_exps
            ga, gb = self.g_exps
            pw = field.pow
            mul = field.mul
            xa = [pw(x, fa) for x in range(q)]
            yb = [pw(y, fb) for y in range(q)]
            xc = [pw(x, ga) for x in range(q)]
            yd = [pw(y, gb) for y in range(q)]
            ftab = [[mul(xa[x], yb[y]) for y in range(q)] for x in range(q)]
            gtab = [[mul(xc[x], yd[y]) for y in range(q)] for x in range(q)]
            self._tables = (ftab, gtab)
        return self._tables


def neighbors(graph: MonomialGraph, side: str, vertex) -> list[tuple[int, int, int]]:
    """The q vertices adjacent to `vertex` on the opposite side.

    side is "P" for points and "L" for lines; the free coordinate of the
    result runs through the field's canonical element order.
    """
    field = graph.field
    sub = field.sub
    mul = field.mul
    pw = field.pow
    fa, fb = graph.f_exps
    ga, gb = graph.g_exps
    v1, v2, v3 = vertex
    out = []
    if side == "P":
        x1f = pw(v1, fa)
        x1g = pw(v1, ga)
        for t in range(field.q):
            out.append((t, sub(mul(x1f, pw(t, fb)), v2), sub(mul(x1g, pw(t, gb)), v3)))
    elif side == "L":
        y1f = pw(v1, fb)
        y1g = pw(v1, gb)
        for t in range(field.q):
            out.append((t, sub(mul(pw(t, fa), y1f), v2), sub(mul(pw(t, ga), y1g), v3)))
    else:
        raise ValueError("side must be 'P' or 'L', got %r" % (side,))
    return out


def _min_cycle_from(q, ftab, gtab, stab, src, best):
    """Shortest cycle detectable by BFS from src, clamped above by `best`.

    Point ids are p1*q^2 + p2*q + p3; line ids add an offset of q^3.  In a
    bipartite graph non-tree edges join adjacent BFS levels, so a candidate
    found while scanning depth d has length at least 2d and the search can
    stop once 2d >= best.
    """
    q2 = q * q
    q3 = q2 * q
    n = 2 * q3
    dist = [-1] * n
    parent = [-1] * n
    dist[src] = 0
    queue = deque((src,))
    pop = queue.popleft
    push = queue.append
    while queue:
        u = pop()
        d = dist[u]
        if 2 * d >= best:
            break
        nd = d + 1
        pu = parent[u]
        if u < q3:
            p1, r = divmod(u, q2)
            p2, p3 = divmod(r, q)
            frow = ftab[p1]
            grow = gtab[p1]
            for l1 in range(q):
                w = q3 + l1 * q2 + stab[frow[l1]][p2] * q + stab[grow[l1]][p3]
                dw = dist[w]
                if dw < 0:
                    dist[w] = nd
                    parent[w] = u
                    push(w)
                elif w != pu:
                    c = d + dw + 1
                    if c < best:
                        best = c
        else:
            r = u - q3
            l1, r = divmod(r, q2)
            l2, l3 = divmod(r, q)
            for p1 in range(q):
                w = p1 * q2 + stab[ftab[p1][l1]][l2] * q + stab[gtab[p1][l1]][l3]
                dw = dist[w]
                if dw < 0:
                    dist[w] = nd
                    parent[w] = u
                    push(w)
                elif w != pu:
                    c = d + dw + 1
                    if c < best:
                        best = c
    return best


def _prepare(graph: MonomialGraph, cap):
    field = graph.field
    cap = DEFAULT_GIRTH_CAP if cap is None else cap
    if field.q > cap:
        raise CapExceededError("q = %d exceeds the girth cap %d" % (field.q, cap))
    ftab, gtab = graph.monomial_tables()
    return field.q, ftab, gtab, field.sub_table()


def girth(graph: MonomialGraph, *, cap: int | None = None, all_sources: bool = False):
    """Length of a shortest cycle (even, >= 4), or math.inf if acyclic.

    By default BFS sources run over the q translation representatives
    (p1, 0, 0); all_sources=True searches from every vertex instead and
    exists to cross-validate the representative shortcut.
    """
    q, ftab, gtab, stab = _prepare(graph, cap)
    sources = range(2 * q**3) if all_sources else [p1 * q * q for p1 in range(q)]
    best = _NO_CYCLE
    for src in sources:
        best = _min_cycle_from(q, ftab, gtab, stab, src, best)
        if best <= 4:
            break
    return math.inf if best == _NO_CYCLE else best


def girth_at_least(graph: MonomialGraph, bound: int, *, cap: int | None = None) -> bool:
    """Early-exit test for girth >= bound: BFS stops at depth bound/2 and
    returns as soon as any shorter cycle is seen."""
    q, ftab, gtab, stab = _prepare(graph, cap)
    best = bound
    for p1 in range(q):
        best = _min_cycle_from(q, ftab, gtab, stab, p1 * q * q, best)
        if best < bound:
            return False
    return True


@dataclass(frozen=True)
class GirthScan:
    """Outcome of scanning all exponents k for girth >= 8."""

    q: int
    passing: list[int]
    expected: list[int]
    implication_ok: bool
    passed: bool


def girth_scan(field, *, cap: int | None = None, records=None) -> GirthScan:
    """For every 1 <= k <= q-1, test girth(G_q(XY, X^k Y^2k)) >= 8.

    Asserts the passing set equals the p-powers, and that every passing k
    has both polynomial families PP (implication cross-check).
    """
    if records is None:
        records = permpoly.sweep(field)
    by_k = {r.k: r for r in records}
    passing = []
    for k in range(1, field.q):
        graph = MonomialGraph(field, (1, 1), (k, 2 * k))
        if girth_at_least(graph, 8, cap=cap):
            passing.append(k)
    expected = permpoly.p_powers(field)
    implication_ok = all(by_k[k].a_pp and by_k[k].b_pp for k in passing)
    return GirthScan(field.q, passing, expected, implication_ok,
                     passing == expected and implication_ok)

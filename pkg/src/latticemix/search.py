"""Exhaustive search for four polygons with prescribed pairwise mixed areas.

The search space is every lattice polygon with at most four vertices whose
bounding box fits in ``[0, Bx] x [0, By]``, taken up to translation (mixed
areas are translation invariant, so nothing is lost).  Polygons are stored
with their lexicographically smallest vertex at the origin, which makes the
enumeration a matter of choosing counterclockwise offset sequences.

Pruning uses two facts.  For any edge the Minkowski inequality
``Vol(P_k) Vol(P_l) <= v_kl^2`` forces one endpoint to have normalized area
at most ``v_kl``, so a level may split into "small at k" plus "small at l"
when that is cheaper than enumerating a node outright.  Each fixed polygon
then filters the candidate lists of the other nodes by exact equality.
"""

from __future__ import annotations

import functools
from typing import Optional, Sequence

import numpy as np

from .exactgeom import LatticePolygon

_PAIRS = ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))
MAX_VERTICES = 4


def _offsets(bx: int, by: int) -> np.ndarray:
    return np.array([(dx, dy) for dx in range(bx + 1) for dy in range(-by, by + 1)
                     if dx > 0 or dy > 0], dtype=np.int64).reshape(-1, 2)


class PolygonZoo:
    """All polygons with at most ``vertex_cap`` vertices fitting the box, up to translation."""

    def __init__(self, box: tuple[int, int], vertex_cap: int = MAX_VERTICES):
        bx, by = box
        if bx < 0 or by < 0:
            raise ValueError("box dimensions must be non-negative")
        if not 1 <= vertex_cap <= MAX_VERTICES:
            raise ValueError(f"vertex_cap must be between 1 and {MAX_VERTICES}")
        self.box, self.vertex_cap = (bx, by), vertex_cap
        chains = self._enumerate(bx, by, vertex_cap)
        n = sum(len(c) for c in chains)
        verts = np.zeros((n, MAX_VERTICES, 2), dtype=np.int64)
        nverts = np.zeros(n, dtype=np.int64)
        row = 0
        for k, c in enumerate(chains):
            # c has shape (count, k, 2): the offsets after the origin
            cnt = len(c)
            if k:
                verts[row:row + cnt, 1:k + 1] = c
            nverts[row:row + cnt] = k + 1
            row += cnt
        # pad by repeating the origin so support values are unaffected
        self.verts, self.nverts = verts, nverts
        nxt = np.roll(verts, -1, axis=1)
        idx = np.arange(MAX_VERTICES)[None, :]
        last = (nverts - 1)[:, None]
        nxt = np.where((idx == last)[..., None], 0, nxt)
        edges = np.where((idx <= last)[..., None], nxt - verts, 0)
        edges[nverts == 1] = 0
        self.normals = np.stack([edges[..., 1], -edges[..., 0]], axis=-1)
        x, y = verts[..., 0], verts[..., 1]
        self.vol = (x * np.roll(y, -1, axis=1) - np.roll(x, -1, axis=1) * y).sum(1)
        self.vol[nverts < 3] = 0
        self._support_cache: dict[tuple[int, int], np.ndarray] = {}

    @staticmethod
    def _enumerate(bx: int, by: int, cap: int) -> list[np.ndarray]:
        O = _offsets(bx, by)
        out = [np.zeros((1, 0, 2), dtype=np.int64)]
        if cap >= 2:
            out.append(O[:, None, :])
        cr = O[:, 0, None] * O[None, :, 1] - O[:, 1, None] * O[None, :, 0]
        if cap >= 3:
            i, j = np.nonzero(cr > 0)
            ys = np.stack([np.zeros_like(i), O[i, 1], O[j, 1]])
            ok = ys.max(0) - ys.min(0) <= by
            out.append(np.stack([O[i[ok]], O[j[ok]]], axis=1))
        if cap >= 4:
            quads = []
            for a in range(len(O)):
                for b in np.nonzero(cr[a] > 0)[0]:
                    ks = np.nonzero(cr[b] > 0)[0]
                    if not len(ks):
                        continue
                    o1, o2, o3 = O[a], O[b], O[ks]
                    e1, e2 = o2 - o1, o3 - o2
                    ok = e1[0] * e2[:, 1] - e1[1] * e2[:, 0] > 0
                    lo = np.minimum(min(0, o1[1], o2[1]), o3[:, 1])
                    hi = np.maximum(max(0, o1[1], o2[1]), o3[:, 1])
                    ok &= hi - lo <= by
                    m = int(ok.sum())
                    if m:
                        q = np.empty((m, 3, 2), dtype=np.int64)
                        q[:, 0], q[:, 1], q[:, 2] = o1, o2, o3[ok]
                        quads.append(q)
            out.append(np.concatenate(quads) if quads else np.zeros((0, 3, 2), dtype=np.int64))
        return out

    def __len__(self):
        return len(self.nverts)

    def polygon(self, i: int) -> LatticePolygon:
        return LatticePolygon([tuple(map(int, p)) for p in self.verts[i, :self.nverts[i]]])

    def support(self, n: tuple[int, int]) -> np.ndarray:
        """h_Q(n) for every polygon Q of the zoo (cached per direction)."""
        h = self._support_cache.get(n)
        if h is None:
            h = (self.verts[..., 0] * n[0] + self.verts[..., 1] * n[1]).max(1)
            self._support_cache[n] = h
        return h

    def mixed_row(self, x: int) -> np.ndarray:
        """V(Q, zoo[x]) for every Q of the zoo."""
        row = np.zeros(len(self), dtype=np.int64)
        for n in self.normals[x]:
            if n[0] or n[1]:
                row += self.support((int(n[0]), int(n[1])))
        return row

    def mixed_subset(self, x: int, subset: np.ndarray) -> np.ndarray:
        """V(Q, zoo[x]) for Q in ``subset``."""
        dots = np.einsum("skc,nc->skn", self.verts[subset], self.normals[x])
        return dots.max(1).sum(1)


@functools.lru_cache(maxsize=4)
def get_zoo(box: tuple[int, int], vertex_cap: int = MAX_VERTICES) -> PolygonZoo:
    return PolygonZoo(tuple(box), vertex_cap)


def _branches(zoo: PolygonZoo, target: dict, cands: dict) -> list[tuple[int, np.ndarray]]:
    """The cheapest way to split the search at this level.

    Either enumerate one node outright, or pick an edge (k, l) and enumerate
    only polygons of area at most v_kl at k, then at l.
    """
    nodes = sorted(cands)
    best = [(nodes[0], cands[nodes[0]])]
    cost = len(cands[nodes[0]])
    for k in nodes:
        if len(cands[k]) < cost:
            best, cost = [(k, cands[k])], len(cands[k])
    for a, k in enumerate(nodes):
        for l in nodes[a + 1:]:
            m = target[k, l]
            opt = [(n, cands[n][zoo.vol[cands[n]] <= m]) for n in (k, l)]
            c = sum(len(C) for _, C in opt)
            if c < cost:
                best, cost = opt, c
    return best


def _extend(zoo: PolygonZoo, target: dict, assign: dict, cands: dict) -> Optional[dict]:
    if not cands:
        return assign
    for k, Ck in _branches(zoo, target, cands):
        rest = [l for l in sorted(cands) if l != k]
        for y in Ck:
            y = int(y)
            row = None
            nxt = {}
            for l in rest:
                C = cands[l]
                if len(C) == len(zoo):
                    row = zoo.mixed_row(y) if row is None else row
                    vals = row
                else:
                    vals = zoo.mixed_subset(y, C)
                C = C[vals == target[min(k, l), max(k, l)]]
                if not len(C):
                    break
                nxt[l] = C
            else:
                found = _extend(zoo, target, {**assign, k: y}, nxt)
                if found is not None:
                    return found
    return None


def search_realization(v: Sequence[int], box: tuple[int, int] = (3, 3),
                       vertex_cap: int = MAX_VERTICES) -> Optional[tuple[LatticePolygon, ...]]:
    """First polygons (P1, .., P4) in the zoo with V(P_i, P_j) = v_ij, or None.

    The traversal order is fixed, so the same input always returns the same
    witness.  None means no witness exists inside the box.
    """
    vals = [int(x) for x in v]
    if len(vals) != 6:
        raise ValueError("need six target values")
    target = dict(zip(_PAIRS, vals))
    zoo = get_zoo(tuple(box), vertex_cap)
    everything = np.arange(len(zoo))
    found = _extend(zoo, target, {}, {n: everything for n in range(1, 5)})
    if found is None:
        return None
    return tuple(zoo.polygon(found[n]) for n in range(1, 5))

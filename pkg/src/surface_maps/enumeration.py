"""Exhaustive generation of rooted maps up to a size bound.

Two independent engines are provided.

``generate_rooted_maps`` backtracks over dart tables directly in
canonical form: darts are created in the order the canonical traversal
of :meth:`DartMap.canonical_form` would discover them, every vertex's
rotation is allocated on discovery, tree edges carry twist ``+1`` and
the root is ``(0, +1)``.  Each rooted map (up to relabeling and flips)
is therefore produced exactly once, with no isomorph rejection pass.

``generate_unicellular_diagrams`` (used by the blossoming enumerator in
:mod:`surface_maps.blossoming`) walks tour diagrams instead; the two
engines overlap on unicellular maps, which gives a cross-validation
oracle exercised by the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BoundTooLarge
from .maps import BUD, LEAF, CombinatorialMap, DartMap, SurfaceId, vertex_map

import os


def _max_darts_guard(n):
    cap = int(os.environ.get("SURFACE_MAPS_MAX_DARTS", "40"))
    if n > cap:
        raise BoundTooLarge(
            "search space with %d darts exceeds SURFACE_MAPS_MAX_DARTS=%d" % (n, cap)
        )


class _ParityDSU:
    """Union-find with parity and an undo stack (no path compression)."""

    def __init__(self):
        self.parent = {}
        self.rank = {}
        self.parity = {}
        self.trail = []

    def add(self, x):
        self.parent[x] = x
        self.rank[x] = 0
        self.parity[x] = 0
        self.trail.append(("add", x))

    def find(self, x):
        p = 0
        while self.parent[x] != x:
            p ^= self.parity[x]
            x = self.parent[x]
        return x, p

    def union_odd(self, x, y):
        """Join x and y with an odd relation; False on parity clash."""
        rx, px = self.find(x)
        ry, py = self.find(y)
        if rx == ry:
            self.trail.append(("noop",))
            return px != py
        if self.rank[rx] < self.rank[ry]:
            rx, ry = ry, rx
            px, py = py, px
        self.trail.append(("union", ry, self.rank[rx]))
        self.parent[ry] = rx
        self.parity[ry] = (px + py + 1) % 2
        if self.rank[rx] == self.rank[ry]:
            self.rank[rx] += 1
        return True

    def mark(self):
        return len(self.trail)

    def rollback(self, mark):
        while len(self.trail) > mark:
            op = self.trail.pop()
            if op[0] == "add":
                del self.parent[op[1]], self.rank[op[1]], self.parity[op[1]]
            elif op[0] == "union":
                _, ry, rk = op
                rx = self.parent[ry]
                self.parent[ry] = ry
                self.parity[ry] = 0
                self.rank[rx] = rk


def generate_rooted_maps(
    max_edges,
    *,
    min_edges=0,
    degrees=None,
    max_stems=0,
    bipartite=False,
    max_vertices=None,
    cls=None,
):
    """Yield every rooted map with at most ``max_edges`` edges once.

    ``degrees`` restricts vertex degrees (a set, or None for free);
    ``max_stems > 0`` additionally attaches unmatched darts, producing
    blossoming dart structures; ``bipartite`` prunes odd cycles during
    the search.  Maps come out as canonical tables, sorted by nothing
    in particular but in a deterministic order.
    """
    degset = None if degrees is None else sorted(set(degrees))
    dart_cap = 2 * max_edges + max_stems
    _max_darts_guard(dart_cap)
    if cls is None:
        cls = CombinatorialMap if max_stems == 0 else DartMap

    if min_edges == 0 and max_stems == 0 and (degset is None):
        yield vertex_map()

    if max_edges == 0 and max_stems == 0:
        return

    sigma = []
    alpha = []
    twist = []
    kind = []
    vertex_id = []
    dsu = _ParityDSU()

    def new_vertex(entry_dart_of_edge, k):
        """Allocate a vertex of degree k; rotation = the id range."""
        start = len(sigma)
        for i in range(k):
            sigma.append(start + (i + 1) % k)
            alpha.append(None)
            twist.append(1)
            kind.append(None)
            vertex_id.append(start)
        dsu.add(start)
        return start

    def pop_vertex(start, k):
        del sigma[start:], alpha[start:], twist[start:], kind[start:], vertex_id[start:]

    def results():
        n = len(sigma)
        m = cls(
            sigma=tuple(sigma),
            alpha=tuple(a if a is not None else -1 for a in alpha),
            twist=tuple(twist),
            root=(0, 1),
            stem_kind=tuple(kind),
        )
        return m

    def degree_choices(budget):
        if degset is not None:
            return [k for k in degset if k <= budget]
        return list(range(1, budget + 1))

    def rec(d, n_edges, n_stems):
        n = len(sigma)
        if d == n:
            if n_edges >= min_edges:
                yield results()
            return
        if alpha[d] is not None:
            yield from rec(d + 1, n_edges, n_stems)
            return
        # remaining undecided darts must pair up or become stems
        undecided = sum(1 for x in alpha[d:] if x is None)
        if n_edges + undecided // 2 < min_edges - 0:
            pass  # cannot prune: new vertices may still be added
        # (b) fresh vertex across a tree edge
        if n_edges < max_edges:
            budget = dart_cap - n
            for k in degree_choices(budget):
                if max_vertices is not None and len(dsu.parent) >= max_vertices:
                    break
                mark = dsu.mark()
                start = new_vertex(d, k)
                alpha[d] = start
                alpha[start] = d
                ok = True
                if bipartite:
                    ok = dsu.union_odd(vertex_id[d], start)
                if ok:
                    yield from rec(d + 1, n_edges + 1, n_stems)
                dsu.rollback(mark)
                alpha[d] = None
                pop_vertex(start, k)
        # (c) back edge to an existing unmatched dart
        if n_edges < max_edges:
            for e in range(d + 1, n):
                if alpha[e] is not None:
                    continue
                mark = dsu.mark()
                ok = True
                if bipartite:
                    ok = dsu.union_odd(vertex_id[d], vertex_id[e])
                if ok:
                    for tw in (1, -1):
                        alpha[d] = e
                        alpha[e] = d
                        twist[d] = tw
                        twist[e] = tw
                        yield from rec(d + 1, n_edges + 1, n_stems)
                        alpha[d] = None
                        alpha[e] = None
                        twist[d] = 1
                        twist[e] = 1
                dsu.rollback(mark)
        # (a) stem
        if n_stems < max_stems:
            for kd in (BUD, LEAF):
                alpha[d] = -1
                kind[d] = kd
                yield from rec(d + 1, n_edges, n_stems + 1)
                alpha[d] = None
                kind[d] = None

    for k0 in degree_choices(dart_cap):
        start = new_vertex(None, k0)
        yield from rec(0, 0, 0)
        dsu.rollback(0)
        pop_vertex(start, k0)


@dataclass
class EnumSpec:
    """What to enumerate: size bound, surface restriction, filters."""

    n_edges: int
    surface: SurfaceId | None = None
    min_chi: int | None = None
    filters: tuple = ()
    degrees: tuple | None = None

    def admits_surface(self, s: SurfaceId) -> bool:
        if self.surface is not None and s != self.surface:
            return False
        if self.min_chi is not None and s.euler_characteristic < self.min_chi:
            return False
        return True


_FILTERS = {
    "bipartite": lambda m: m.is_bipartite(),
    "quadrangulation": lambda m: m.is_quadrangulation(),
    "four_valent": lambda m: m.is_four_valent(),
    "bicolorable": lambda m: m.is_bicolorable(),
}


def enumerate_maps(spec: EnumSpec):
    """Stream the rooted maps matching ``spec``, sorted by encoding."""
    out = []
    for m in generate_rooted_maps(
        spec.n_edges,
        degrees=spec.degrees,
        bipartite="bipartite" in spec.filters,
    ):
        if not spec.admits_surface(m.surface()):
            continue
        if all(_FILTERS[f](m) for f in spec.filters if f in _FILTERS):
            out.append(m)
    out.sort(key=lambda m: m.canonical_encoding())
    return out


def enumerate_pointed_maps(spec: EnumSpec, root_pointed_only=False):
    """(rooted map, pointed vertex) pairs; rooting kills automorphisms,
    so pointings need no extra quotient."""
    for m in enumerate_maps(spec):
        if m.n_darts == 0:
            yield m._replace(pointed=0)
            continue
        if root_pointed_only:
            yield m._replace(pointed=m.vertex_of[m.root[0]])
            continue
        for cyc in m.vertices:
            yield m._replace(pointed=min(cyc))


def enumerate_quadrangulations(spec: EnumSpec):
    """Bipartite quadrangulations via duals of four-valent maps.

    A quadrangulation's dual is four-valent, so searching rotations
    with all degrees 4 reaches every quadrangulation with a quarter of
    the darts a direct face-constrained search would carry.  The
    degenerate single-edge map (one face of degree 2) is admitted as
    the image of the vertex map under the corner construction.
    """
    if spec.n_edges >= 1:
        bridge = CombinatorialMap([0, 1], [1, 0], [1, 1], (0, 1))
        if spec.admits_surface(bridge.surface()):
            yield bridge
    n_faces = spec.n_edges // 2
    seen = set()
    for m in generate_rooted_maps(2 * n_faces, degrees=(4,)):
        if not spec.admits_surface(m.surface()):
            continue
        q = m.dual()
        if not (q.is_quadrangulation() and q.is_bipartite()):
            continue
        q = q.canonical_form()
        enc = q.to_json()
        if enc in seen:
            raise AssertionError("duplicate quadrangulation from dual route")
        seen.add(enc)
        yield q


class _SizeDSU:
    """Array union-find over corner indices with class sizes, a count
    of not-yet-settled corner sides per class, and rollback.

    A corner side settles when the adjacent slot is a stem or a closed
    chord; a class with no pending side can never grow again, which
    lets the 4-valent search fail early.
    """

    __slots__ = ("parent", "size", "pending", "trail")

    def __init__(self, cap):
        self.parent = list(range(cap))
        self.size = [1] * cap
        self.pending = [2] * cap
        self.trail = []

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            x = parent[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            self.trail.append(-1)
            return rx
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.trail.append(ry)
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]
        self.pending[rx] += self.pending[ry]
        return rx

    def settle(self, x):
        r = self.find(x)
        self.pending[r] -= 1
        self.trail.append(-2 - r)
        return r

    def mark(self):
        return len(self.trail)

    def rollback(self, mark):
        trail = self.trail
        while len(trail) > mark:
            op = trail.pop()
            if op == -1:
                continue
            if op <= -2:
                self.pending[-op - 2] += 1
                continue
            ry = op
            rx = self.parent[ry]
            self.size[rx] -= self.size[ry]
            self.pending[rx] -= self.pending[ry]
            self.parent[ry] = ry


def generate_blossoming_diagrams(
    max_interior_edges,
    max_stem_pairs,
    *,
    bud_rooted=False,
    well_rooted=False,
    four_valent=False,
    include_empty=False,
    orientable=None,
    chi=None,
    min_chi=None,
    max_label=None,
    exact_stem_pairs=None,
    exact_interior_edges=None,
    exact_slots=None,
):
    """Yield tour diagrams of well-blossoming maps within the bounds.

    The well-labeling translates into local constraints on the diagram:
    the root corner is followed by a stem, an interior edge closes at
    label (opening label - 1), and an edge closing in the very last
    slot must have opened at label 1.  These are pruned during the
    search, so every emitted diagram glues to a well-blossoming map and
    none is missed.  Passing the exact_* sizes (forced, for 4-valent
    maps, by the surface and the stem count) sharpens the search
    considerably.
    """
    from .blossoming import Diagram

    out = []
    if include_empty and _admit_surface(2, True, orientable, chi, min_chi):
        out.append(Diagram(()))

    L_cap = 2 * max_interior_edges + 2 * max_stem_pairs
    if exact_slots is not None:
        L_cap = min(L_cap, exact_slots)
    _max_darts_guard(L_cap)
    if L_cap > 0:
        _diagram_search(
            out.append,
            Diagram,
            L_cap,
            max_interior_edges,
            max_stem_pairs,
            bud_rooted,
            well_rooted,
            four_valent,
            orientable,
            chi,
            min_chi,
            max_label,
            exact_stem_pairs,
            exact_interior_edges,
            exact_slots,
        )
    return iter(out)


def _diagram_search(
    sink,
    Diagram,
    L_cap,
    max_interior_edges,
    max_stem_pairs,
    bud_rooted,
    well_rooted,
    four_valent,
    orientable,
    chi,
    min_chi,
    max_label,
    exact_stem_pairs,
    exact_interior_edges,
    exact_slots,
):
    slots = []
    labels = [0]
    opens = []  # (slot index, label at opening); any entry may close
    dsu = _SizeDSU(L_cap + 2)
    dsize = dsu.size
    dpend = dsu.pending

    def class_ok(r, newest):
        if not four_valent:
            return True
        if dsu.find(newest) == r:
            # may absorb the wrap corner, which aliases corner 0
            return dsize[r] <= 5
        if dsize[r] > 4:
            return False
        return dpend[r] > 0 or dsize[r] == 4

    def finalize():
        if not slots or opens or labels[-1] != 0:
            return
        if counts[0] != counts[1]:
            return
        if exact_stem_pairs is not None and counts[0] != exact_stem_pairs:
            return
        if exact_interior_edges is not None and counts[2] != exact_interior_edges:
            return
        if exact_slots is not None and len(slots) != exact_slots:
            return
        last = slots[-1]
        if last[0] == "edge" and labels[last[1]] != 1:
            return
        mark = dsu.mark()
        L = len(slots)
        dsu.union(L, 0)
        ok = True
        if four_valent:
            sizes = {}
            for x in range(L):
                r = dsu.find(x)
                sizes[r] = sizes.get(r, 0) + 1
            ok = all(v == 4 for v in sizes.values())
            V = len(sizes)
        else:
            V = len({dsu.find(x) for x in range(L)})
        if ok:
            c = V - counts[2] + 1
            orient = all(s[0] != "edge" or s[2] == 1 for s in slots)
            ok = _admit_surface(c, orient, orientable, chi, min_chi)
        if ok:
            sink(Diagram(tuple(slots)))
        dsu.rollback(mark)

    counts = [0, 0, 0]  # buds, leaves, open+closed edges

    def rec():
        finalize()
        k = len(slots)
        if k >= L_cap:
            return
        if four_valent and dsize[dsu.find(k)] > 4:
            return
        lam = labels[-1]
        if len(opens) + (lam if lam > 0 else -lam) > L_cap - k:
            return
        if exact_stem_pairs is not None:
            buds_left = exact_stem_pairs - counts[0]
            leaves_left = exact_stem_pairs - counts[1]
            if buds_left < 0 or leaves_left < 0 or lam > leaves_left or -lam > buds_left:
                return
            if exact_interior_edges is not None:
                edge_slots_left = 2 * (exact_interior_edges - counts[2]) + len(opens)
                if exact_slots is not None and (
                    k + buds_left + leaves_left + edge_slots_left != exact_slots
                ):
                    return
        # stem slots
        for idx, kind, dlam in ((0, "bud", 1), (1, "leaf", -1)):
            if counts[idx] >= max_stem_pairs:
                continue
            if idx == 0:
                if max_label is not None and lam >= max_label:
                    continue
            else:
                if well_rooted and lam < 1:
                    continue
                if bud_rooted and k == 0:
                    continue
                if lam - 1 < -(max_stem_pairs - counts[0]):
                    continue
            slots.append((kind, False))
            labels.append(lam + dlam)
            counts[idx] += 1
            mark = dsu.mark()
            r = dsu.union(k, k + 1)
            dpend[r] -= 2
            dsu.trail.append(-2 - r)
            dsu.trail.append(-2 - r)
            if class_ok(r, k + 1):
                rec()
            dsu.rollback(mark)
            counts[idx] -= 1
            labels.pop()
            slots.pop()
        # open an interior edge (never in the first slot)
        if k >= 1 and counts[2] < max_interior_edges:
            slots.append(None)
            labels.append(lam)
            counts[2] += 1
            opens.append((k, lam))
            rec()
            opens.pop()
            counts[2] -= 1
            labels.pop()
            slots.pop()
        # close an open edge at label (opening label - 1)
        for t in range(len(opens)):
            i, li = opens[t]
            if li != lam + 1:
                continue
            for flag in (1, -1):
                if flag == -1 and orientable is True:
                    continue
                slots[i] = ("edge", k, flag)
                slots.append(("edge", i, flag))
                labels.append(lam)
                saved = opens[t]
                del opens[t]
                mark = dsu.mark()
                if flag == 1:
                    ok = class_ok(dsu.union(i, k + 1), k + 1)
                    ok = ok and class_ok(dsu.union(i + 1, k), k + 1)
                else:
                    ok = class_ok(dsu.union(i, k), k + 1)
                    ok = ok and class_ok(dsu.union(i + 1, k + 1), k + 1)
                if ok:
                    for c in (i, i + 1, k, k + 1):
                        if not class_ok(dsu.settle(c), k + 1):
                            ok = False
                            break
                if ok:
                    rec()
                dsu.rollback(mark)
                opens.insert(t, saved)
                labels.pop()
                slots.pop()
                slots[i] = None

    rec()


def _admit_surface(c, orientable_val, orientable, chi, min_chi):
    if orientable is not None and orientable_val != orientable:
        return False
    if chi is not None and c != chi:
        return False
    if min_chi is not None and c < min_chi:
        return False
    return True

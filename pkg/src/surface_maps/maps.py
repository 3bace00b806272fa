"""Combinatorial maps on arbitrary (orientable or not) surfaces.

A map is encoded by a signed rotation system on darts (halfedges):

* ``sigma`` -- permutation sending a dart to the next dart around its
  vertex, in the vertex's chosen *direct* orientation;
* ``alpha`` -- involution pairing the two darts of each edge (``-1``
  marks an unmatched dart, i.e. a stem of a blossoming map);
* ``twist`` -- a sign per dart, equal on both darts of an edge, which
  records whether the two endpoint orientations agree across the edge.

The choice of direct orientation at each vertex is a gauge: reversing it
at one vertex (a *flip*) yields the same embedded map.  All structural
queries (faces, surface, encodings) are flip-invariant.

Corners are identified with darts: corner ``c`` is the corner lying
between dart ``c`` and ``sigma[c]`` in direct order.  An oriented corner
is a pair ``(corner, spin)`` with ``spin`` in ``{+1, -1}``.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from functools import cached_property

from .errors import (
    AlphaFixedPoint,
    Disconnected,
    MapError,
    NonPermutation,
    RootOutOfRange,
)

BUD = "bud"
LEAF = "leaf"


@dataclass(frozen=True)
class SurfaceId:
    """A surface, up to homeomorphism: Euler characteristic + orientability."""

    euler_characteristic: int
    orientable: bool

    def __post_init__(self):
        if self.euler_characteristic > 2:
            raise ValueError("Euler characteristic exceeds 2")
        if self.orientable and self.euler_characteristic % 2:
            raise ValueError("an odd Euler characteristic forces non-orientability")

    @property
    def genus(self):
        """Genus as a half-integer, returned as a Fraction-free float-safe pair."""
        return (2 - self.euler_characteristic) / 2

    @property
    def name(self) -> str:
        named = {
            (2, True): "sphere",
            (1, False): "pp",
            (0, True): "torus",
            (0, False): "klein",
        }
        key = (self.euler_characteristic, self.orientable)
        if key in named:
            return named[key]
        return "chi:%d,%s" % (
            self.euler_characteristic,
            "orient" if self.orientable else "nonorient",
        )

    @staticmethod
    def from_name(name: str) -> "SurfaceId":
        named = {
            "sphere": SurfaceId(2, True),
            "pp": SurfaceId(1, False),
            "torus": SurfaceId(0, True),
            "klein": SurfaceId(0, False),
        }
        if name in named:
            return named[name]
        if name.startswith("chi:"):
            chi_s, orient = name[4:].split(",")
            return SurfaceId(int(chi_s), orient in ("orient", "orientable", "true"))
        raise ValueError("unknown surface %r" % name)


SPHERE = SurfaceId(2, True)
PROJECTIVE_PLANE = SurfaceId(1, False)
TORUS = SurfaceId(0, True)
KLEIN_BOTTLE = SurfaceId(0, False)


def reversed_corner(oc):
    c, s = oc
    return (c, -s)


class DartMap:
    """Shared dart-level structure for plain and blossoming maps.

    Unmatched darts (``alpha[d] == -1``) are stems; plain combinatorial
    maps reject them.  The map with zero darts is the single-vertex map
    on the sphere and is handled as a special case throughout.
    """

    def __init__(
        self,
        sigma,
        alpha,
        twist,
        root,
        pointed=None,
        stem_kind=None,
        stem_virtual=None,
        check=True,
    ):
        self.sigma = tuple(sigma)
        self.alpha = tuple(alpha)
        self.twist = tuple(twist)
        self.root = tuple(root) if root is not None else None
        self.pointed = pointed
        n = len(self.sigma)
        if stem_kind is None:
            stem_kind = tuple(BUD if self.alpha[d] < 0 else None for d in range(n))
        self.stem_kind = tuple(stem_kind)
        if stem_virtual is None:
            stem_virtual = tuple(False for _ in range(n))
        self.stem_virtual = tuple(stem_virtual)
        if check:
            violations = self.violations()
            if violations:
                raise violations[0]

    # -- basic structure ---------------------------------------------------

    @property
    def n_darts(self) -> int:
        return len(self.sigma)

    def violations(self):
        """All detected structural problems, as a list of exceptions."""
        out = []
        n = self.n_darts
        if sorted(self.sigma) != list(range(n)):
            out.append(NonPermutation("sigma is not a permutation of the darts"))
            return out
        if len(self.alpha) != n or len(self.twist) != n:
            out.append(NonPermutation("alpha/twist tables have wrong length"))
            return out
        for d in range(n):
            a = self.alpha[d]
            if a == d:
                out.append(AlphaFixedPoint("alpha fixes dart %d" % d))
            elif a >= 0 and (a >= n or self.alpha[a] != d):
                out.append(NonPermutation("alpha is not an involution at dart %d" % d))
            if a >= 0 and self.twist[d] != self.twist[a]:
                out.append(NonPermutation("twist differs on the two darts of an edge"))
            if self.twist[d] not in (1, -1):
                out.append(NonPermutation("twist values must be +-1"))
        if out:
            return out
        if n == 0:
            if self.root is not None:
                out.append(RootOutOfRange("the zero-dart map carries no root corner"))
            if self.pointed not in (None, 0):
                out.append(RootOutOfRange("pointed vertex out of range"))
            return out
        if self.root is None:
            out.append(RootOutOfRange("missing root"))
            return out
        rd, rs = self.root
        if not (0 <= rd < n) or rs not in (1, -1):
            out.append(RootOutOfRange("root corner (%r,%r) out of range" % (rd, rs)))
        if self.pointed is not None and not (0 <= self.pointed < n):
            out.append(RootOutOfRange("pointed vertex out of range"))
        seen = [False] * n
        stack = [0]
        seen[0] = True
        count = 1
        while stack:
            d = stack.pop()
            for e in (self.sigma[d], self.alpha[d]):
                if e >= 0 and not seen[e]:
                    seen[e] = True
                    count += 1
                    stack.append(e)
        if count != n:
            out.append(Disconnected("dart structure is not connected"))
        if (
            self.pointed is not None
            and not out
            and self.vertex_of[self.pointed] != self.pointed
        ):
            out.append(RootOutOfRange("pointed vertex is not an orbit representative"))
        return out

    @cached_property
    def sigma_inv(self):
        inv = [0] * self.n_darts
        for d, e in enumerate(self.sigma):
            inv[e] = d
        return tuple(inv)

    @cached_property
    def vertices(self):
        """Vertices as sigma-orbits, each listed from its minimal dart."""
        n = self.n_darts
        seen = [False] * n
        out = []
        for d in range(n):
            if seen[d]:
                continue
            cyc = []
            e = d
            while not seen[e]:
                seen[e] = True
                cyc.append(e)
                e = self.sigma[e]
            out.append(tuple(cyc))
        return tuple(out)

    @cached_property
    def vertex_of(self):
        """vertex_of[d] is the minimal dart of d's vertex (the vertex id)."""
        out = [0] * self.n_darts
        for cyc in self.vertices:
            m = min(cyc)
            for d in cyc:
                out[d] = m
        return tuple(out)

    @property
    def n_vertices(self) -> int:
        return 1 if self.n_darts == 0 else len(self.vertices)

    @cached_property
    def edges(self):
        """Edges as pairs (d, alpha[d]) with d < alpha[d]."""
        return tuple(
            (d, self.alpha[d]) for d in range(self.n_darts) if self.alpha[d] > d
        )

    @property
    def n_edges(self) -> int:
        return sum(1 for d in range(self.n_darts) if self.alpha[d] > d)

    @property
    def stems(self):
        return tuple(d for d in range(self.n_darts) if self.alpha[d] < 0)

    def is_stem(self, d) -> bool:
        return self.alpha[d] < 0

    def degree(self, v) -> int:
        """Number of darts at vertex v, virtual stems excluded."""
        return sum(
            1
            for d in self.vertex_darts(v)
            if not (self.is_stem(d) and self.stem_virtual[d])
        )

    def interior_degree(self, v) -> int:
        return sum(1 for d in self.vertex_darts(v) if not self.is_stem(d))

    def virtual_degree(self, v) -> int:
        return len(self.vertex_darts(v))

    def vertex_darts(self, v):
        for cyc in self.vertices:
            if min(cyc) == v:
                return cyc
        raise MapError("no vertex %r" % (v,))

    # -- corners and rotations ---------------------------------------------

    def vertex_next(self, oc):
        c, s = oc
        return (self.sigma[c] if s > 0 else self.sigma_inv[c], s)

    def vertex_prev(self, oc):
        c, s = oc
        return (self.sigma_inv[c] if s > 0 else self.sigma[c], s)

    def crossed_halfedge(self, oc) -> int:
        """The halfedge separating oc from vertex_next(oc)."""
        c, s = oc
        return self.sigma[c] if s > 0 else c

    def face_next(self, oc):
        """Face rotation on oriented corners.

        Crossing an edge multiplies the spin by its twist; a corner
        followed by a stem is rotated within its vertex instead.
        """
        c, s = oc
        h = self.sigma[c] if s > 0 else c
        a = self.alpha[h]
        if a < 0:
            return self.vertex_next(oc)
        s2 = s * self.twist[h]
        return (a, 1) if s2 > 0 else (self.sigma_inv[a], -1)

    def face_prev(self, oc):
        return reversed_corner(self.face_next(reversed_corner(oc)))

    @cached_property
    def faces(self):
        """One canonically oriented corner orbit per face.

        The orbits of the face rotation pair up under corner reversal;
        for each pair we keep the orbit containing the smallest
        ``(corner, spin-preference)`` element, rotated to start there.
        """
        n = self.n_darts
        seen = set()
        orbits = []
        for d in range(n):
            for s in (1, -1):
                if (d, s) in seen:
                    continue
                orb = []
                oc = (d, s)
                while (oc) not in seen:
                    seen.add(oc)
                    orb.append(oc)
                    oc = self.face_next(oc)
                orbits.append(orb)
        # pair orbits with their reversals
        rep_of = {}
        for i, orb in enumerate(orbits):
            for oc in orb:
                rep_of[oc] = i
        chosen = []
        used = set()
        for i, orb in enumerate(orbits):
            if i in used:
                continue
            j = rep_of[reversed_corner(orb[0])]
            if j == i:
                raise MapError("face orbit closed under reversal")
            used.add(i)
            used.add(j)
            cand = min(orbits[i] + orbits[j], key=lambda oc: (oc[0], -oc[1]))
            orb = orbits[i] if cand in orbits[i] else orbits[j]
            k = orb.index(cand)
            chosen.append(tuple(orb[k:] + orb[:k]))
        chosen.sort(key=lambda orb: orb[0])
        return tuple(chosen)

    @cached_property
    def face_of(self):
        """face_of[corner] = index into self.faces."""
        out = [None] * self.n_darts
        for i, orb in enumerate(self.faces):
            for c, _s in orb:
                if out[c] is not None:
                    raise MapError("face orbit visits a corner twice")
                out[c] = i
        return tuple(out)

    @property
    def n_faces(self) -> int:
        return 1 if self.n_darts == 0 else len(self.faces)

    def face_degree(self, i) -> int:
        return len(self.faces[i])

    def tour_spin(self, c) -> int:
        """Spin with which the chosen orbit of c's face passes corner c."""
        for cc, s in self.faces[self.face_of[c]]:
            if cc == c:
                return s
        raise MapError("corner missing from its face orbit")

    # -- surface -----------------------------------------------------------

    @property
    def euler_characteristic(self) -> int:
        if self.n_darts == 0:
            return 2
        return self.n_vertices - self.n_edges + self.n_faces

    @cached_property
    def is_orientable(self) -> bool:
        """Search a flip assignment making every twist positive.

        Sign propagation over a spanning tree of the vertex/edge graph,
        then a consistency check on the remaining edges.  Loops cannot
        be fixed by flips, so a twisted loop is immediately one-sided.
        """
        if self.n_darts == 0:
            return True
        eps = {}
        v0 = self.vertex_of[0]
        eps[v0] = 1
        stack = [v0]
        while stack:
            v = stack.pop()
            for d in self.vertex_darts(v):
                a = self.alpha[d]
                if a < 0:
                    continue
                w = self.vertex_of[a]
                if w not in eps:
                    eps[w] = self.twist[d] * eps[v]
                    stack.append(w)
        for d in range(self.n_darts):
            a = self.alpha[d]
            if a < 0:
                continue
            u, w = self.vertex_of[d], self.vertex_of[a]
            if self.twist[d] * eps[u] * eps[w] != 1:
                return False
        return True

    def surface(self) -> SurfaceId:
        return SurfaceId(self.euler_characteristic, self.is_orientable)

    # -- gauge transformations ----------------------------------------------

    def _replace(self, **kw):
        base = dict(
            sigma=self.sigma,
            alpha=self.alpha,
            twist=self.twist,
            root=self.root,
            pointed=self.pointed,
            stem_kind=self.stem_kind,
            stem_virtual=self.stem_virtual,
        )
        base.update(kw)
        return type(self)(**base)

    def flip(self, v):
        """Reverse the direct orientation at vertex v.

        Twists of non-loop edges at v change sign, loops keep theirs;
        the root corner is re-expressed in the new rotation.
        """
        darts = set(self.vertex_darts(v))
        sigma = list(self.sigma)
        for d in darts:
            sigma[self.sigma[d]] = d
        twist = list(self.twist)
        for d in darts:
            a = self.alpha[d]
            if a >= 0 and a not in darts:
                twist[d] = -twist[d]
                twist[a] = -twist[a]
        root = self.root
        if root is not None:
            rd, rs = root
            if rd in darts:
                root = (self.sigma[rd], -rs)
        return self._replace(sigma=sigma, twist=twist, root=root)

    def relabel(self, perm):
        """Rename darts by perm (old id -> new id)."""
        n = self.n_darts
        sigma = [0] * n
        alpha = [0] * n
        twist = [1] * n
        kind = [None] * n
        virt = [False] * n
        for d in range(n):
            sigma[perm[d]] = perm[self.sigma[d]]
            a = self.alpha[d]
            alpha[perm[d]] = perm[a] if a >= 0 else -1
            twist[perm[d]] = self.twist[d]
            kind[perm[d]] = self.stem_kind[d]
            virt[perm[d]] = self.stem_virtual[d]
        root = None
        if self.root is not None:
            root = (perm[self.root[0]], self.root[1])
        pointed = self.pointed
        if pointed is not None:
            pointed = min(perm[d] for d in self.vertex_darts(pointed))
        return self._replace(
            sigma=sigma, alpha=alpha, twist=twist, root=root,
            pointed=pointed, stem_kind=kind, stem_virtual=virt,
        )

    def gauge_shuffle(self, seed):
        """Random relabeling plus random flips; canonically a no-op."""
        if self.n_darts == 0:
            return self
        rng = random.Random(seed)
        perm = list(range(self.n_darts))
        rng.shuffle(perm)
        m = self.relabel(perm)
        for v in [min(cyc) for cyc in m.vertices]:
            if rng.random() < 0.5:
                m = m.flip(v)
        return m

    # -- canonical form -----------------------------------------------------

    def canonical_form(self):
        """Relabel darts by a root-first traversal and normalize the gauge.

        The traversal assigns ids to the whole rotation of a vertex on
        first visit, orienting the vertex so that the entering edge has
        twist +1 (the root vertex is oriented by the root spin).  Two
        maps are related by relabeling and flips iff their canonical
        forms are equal.
        """
        n = self.n_darts
        if n == 0:
            return self
        rd, rs = self.root
        new_id = [-1] * n
        order = []
        eps = {}

        def discover(d0, e):
            v = self.vertex_of[d0]
            eps[v] = e
            step = self.sigma if e > 0 else self.sigma_inv
            d = d0
            while True:
                new_id[d] = len(order)
                order.append(d)
                d = step[d]
                if d == d0:
                    break

        discover(rd if rs > 0 else self.sigma[rd], rs)
        i = 0
        while i < len(order):
            od = order[i]
            a = self.alpha[od]
            if a >= 0 and new_id[a] < 0:
                discover(a, self.twist[od] * eps[self.vertex_of[od]])
            i += 1
        if len(order) != n:
            raise Disconnected("canonical traversal missed darts")
        sigma = [0] * n
        alpha = [0] * n
        twist = [1] * n
        kind = [None] * n
        virt = [False] * n
        for d in range(n):
            v = self.vertex_of[d]
            step = self.sigma if eps[v] > 0 else self.sigma_inv
            sigma[new_id[d]] = new_id[step[d]]
            a = self.alpha[d]
            if a >= 0:
                alpha[new_id[d]] = new_id[a]
                twist[new_id[d]] = (
                    self.twist[d] * eps[v] * eps[self.vertex_of[a]]
                )
            else:
                alpha[new_id[d]] = -1
            kind[new_id[d]] = self.stem_kind[d]
            virt[new_id[d]] = self.stem_virtual[d]
        pointed = self.pointed
        if pointed is not None:
            pointed = min(new_id[d] for d in self.vertex_darts(pointed))
        return self._replace(
            sigma=sigma, alpha=alpha, twist=twist, root=(0, 1),
            pointed=pointed, stem_kind=kind, stem_virtual=virt,
        )

    # -- serialization -------------------------------------------------------

    def to_dict(self) -> dict:
        d = {
            "n_darts": self.n_darts,
            "sigma": list(self.sigma),
            "alpha": list(self.alpha),
            "twist": list(self.twist),
            "root": list(self.root) if self.root is not None else None,
            "pointed": self.pointed,
        }
        stems = {
            str(s): {"kind": self.stem_kind[s], "virtual": self.stem_virtual[s]}
            for s in self.stems
        }
        if stems:
            d["stems"] = stems
        return d

    @classmethod
    def from_dict(cls, d):
        n = d["n_darts"]
        kind = [None] * n
        virt = [False] * n
        for s, meta in d.get("stems", {}).items():
            kind[int(s)] = meta["kind"]
            virt[int(s)] = bool(meta.get("virtual", False))
        return cls(
            sigma=d["sigma"],
            alpha=d["alpha"],
            twist=d["twist"],
            root=tuple(d["root"]) if d.get("root") is not None else None,
            pointed=d.get("pointed"),
            stem_kind=kind,
            stem_virtual=virt,
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, s: str):
        return cls.from_dict(json.loads(s))

    def canonical_encoding(self) -> bytes:
        return self.canonical_form().to_json().encode("utf-8")

    def __eq__(self, other):
        if not isinstance(other, DartMap):
            return NotImplemented
        return self.canonical_encoding() == other.canonical_encoding()

    def __hash__(self):
        return hash(self.canonical_encoding())

    def __repr__(self):
        return "%s(%s)" % (type(self).__name__, self.to_json())


class CombinatorialMap(DartMap):
    """A rooted map on a surface: no unmatched darts allowed."""

    def violations(self):
        out = super().violations()
        if not out and any(a < 0 for a in self.alpha):
            out.append(NonPermutation("stems are not allowed on a plain map"))
        return out

    # -- metric ---------------------------------------------------------------

    def vertex_neighbors(self, v):
        for d in self.vertex_darts(v):
            a = self.alpha[d]
            if a >= 0:
                yield self.vertex_of[a]

    def distances_from(self, v) -> dict:
        """Graph distances from vertex v, by breadth-first search."""
        if self.n_darts == 0:
            return {0: 0}
        dist = {v: 0}
        frontier = [v]
        while frontier:
            nxt = []
            for u in frontier:
                for w in self.vertex_neighbors(u):
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        nxt.append(w)
            frontier = nxt
        if len(dist) != self.n_vertices:
            raise Disconnected("distance search missed vertices")
        return dist

    def heights(self) -> dict:
        """Distances from the pointed vertex."""
        if self.pointed is None and self.n_darts > 0:
            raise MapError("map is not pointed")
        return self.distances_from(self.pointed if self.n_darts else 0)

    def is_root_pointed(self) -> bool:
        if self.n_darts == 0:
            return True
        return self.pointed == self.vertex_of[self.root[0]]

    # -- bipartite structure ----------------------------------------------------

    def bipartite_classes(self):
        """2-coloring by parity of distance from the root vertex, or None.

        Black vertices sit at even distance from the root.
        """
        if self.n_darts == 0:
            return ({0}, set())
        dist = self.distances_from(self.vertex_of[self.root[0]])
        for d in range(self.n_darts):
            a = self.alpha[d]
            if a >= 0:
                if (dist[self.vertex_of[d]] - dist[self.vertex_of[a]]) % 2 == 0:
                    return None
        black = {v for v, k in dist.items() if k % 2 == 0}
        white = {v for v, k in dist.items() if k % 2 == 1}
        return (black, white)

    def is_bipartite(self) -> bool:
        return self.bipartite_classes() is not None

    def is_quadrangulation(self) -> bool:
        if self.n_darts == 0:
            return False
        return all(len(f) == 4 for f in self.faces)

    def is_four_valent(self) -> bool:
        if self.n_darts == 0:
            return False
        return all(len(cyc) == 4 for cyc in self.vertices)

    def is_bicolorable(self) -> bool:
        if self.n_darts == 0:
            return True
        return self.dual().is_bipartite()

    def face_weight(self):
        """Vector (n_1, n_2, ...) with n_i faces of degree 2i."""
        if self.n_darts == 0:
            return ()
        degs = [len(f) for f in self.faces]
        if any(k % 2 for k in degs):
            raise MapError("odd face degree: face-weight undefined")
        top = max(degs) // 2
        out = [0] * top
        for k in degs:
            out[k // 2 - 1] += 1
        return tuple(out)

    def vertex_weight(self):
        if self.n_darts == 0:
            return ()
        degs = [len(c) for c in self.vertices]
        if any(k % 2 for k in degs):
            raise MapError("odd vertex degree: vertex-weight undefined")
        top = max(degs) // 2
        out = [0] * top
        for k in degs:
            out[k // 2 - 1] += 1
        return tuple(out)

    def vertex_color_weight(self):
        """(black, white) vertex counts, black = even distance from root."""
        if self.n_darts == 0:
            return (1, 0)
        classes = self.bipartite_classes()
        if classes is None:
            raise MapError("map is not bipartite")
        return (len(classes[0]), len(classes[1]))

    def face_color_weight(self):
        return self.dual().vertex_color_weight()

    # -- duality -------------------------------------------------------------

    def dual(self) -> "CombinatorialMap":
        """The dual map: vertices and faces exchanged, corner orders kept.

        Dual darts are the corners of the map.  Around a dual vertex
        (a face of self), corners follow the face's chosen orientation;
        two corners are dual-edge partners when the face tours cross the
        same primal edge to reach them.
        """
        return self.dual_with_edge_map()[0]

    def dual_with_edge_map(self):
        """(dual map, {primal edge id: pair of dual darts of its dual edge})."""
        n = self.n_darts
        if n == 0:
            return CombinatorialMap((), (), (), None, pointed=self.pointed), {}
        sigma = [0] * n
        arrivals = {}
        spin_in_chosen = {}
        for orb in self.faces:
            k = len(orb)
            for i, oc in enumerate(orb):
                c, s = oc
                spin_in_chosen[c] = s
                nxt = orb[(i + 1) % k]
                sigma[c] = nxt[0]
                h = self.crossed_halfedge(oc)
                e = min(h, self.alpha[h])
                arrivals.setdefault(e, []).append((oc, nxt[0]))
        alpha = [0] * n
        twist = [1] * n
        edge_map = {}
        for e, pair in arrivals.items():
            if len(pair) != 2:
                raise MapError("edge crossed %d times by chosen tours" % len(pair))
            (oc1, a1), (oc2, a2) = pair
            alpha[a1] = a2
            alpha[a2] = a1
            edge_map[e] = (a1, a2)
            ts = []
            for oc in (oc1, oc2):
                nxt_v = self.vertex_next(oc)
                ts.append(spin_in_chosen[nxt_v[0]] * nxt_v[1])
            if ts[0] != ts[1]:
                raise MapError("inconsistent dual twist")
            twist[a1] = twist[a2] = ts[0]
        rd, rs = self.root
        dual_spin = rs * spin_in_chosen[rd]
        root = (rd, -dual_spin)
        return CombinatorialMap(sigma, alpha, twist, root), edge_map

    def dual_vertex_of_face(self, i) -> int:
        """Vertex id, in dual(), of the i-th face of self."""
        return min(c for c, _s in self.faces[i])


def validate_map(sigma, alpha, twist, root, pointed=None) -> CombinatorialMap:
    """Build a CombinatorialMap, raising the first violated invariant."""
    return CombinatorialMap(sigma, alpha, twist, root, pointed=pointed)


def vertex_map(pointed=False) -> CombinatorialMap:
    """The single-vertex, zero-edge map on the sphere."""
    return CombinatorialMap((), (), (), None, pointed=0 if pointed else None)

"""Blossoming maps: unicellular maps with oriented stems.

A stem is an unmatched halfedge; outgoing stems are buds, ingoing ones
leaves.  On a unicellular map the face tour linearizes everything:
the *tour diagram* of a blossoming map lists, in tour order, one slot
per halfedge crossing -- a stem slot, or one of the two crossings of an
interior edge, the pair being tagged by whether the two crossings run
in the same direction around the face (a one-sided gluing) or opposite
(two-sided).  The diagram is a complete, gauge-free invariant of the
rooted map and is the workhorse representation for enumeration.

Corner labels follow the tour: 0 at the root, +1 after a bud, -1 after
a leaf, constant across interior edges.  The labeling is a
*well-labeling* when, across every interior halfedge, the flanking
corner visited later carries the smaller of the two labels (they always
differ by one).  Well-blossoming maps are unicellular maps whose
labeling is a well-labeling; well-rooted ones have no negative label.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import MapError, NotUnicellular, Unbalanced
from .maps import BUD, LEAF, CombinatorialMap, DartMap, reversed_corner


class BlossomingMap(DartMap):
    """Dart map with stems; see module docstring for conventions."""

    def __init__(self, *args, allow_unbalanced=False, **kw):
        self.allow_unbalanced = allow_unbalanced
        super().__init__(*args, **kw)

    def _replace(self, **kw):
        base = dict(
            sigma=self.sigma,
            alpha=self.alpha,
            twist=self.twist,
            root=self.root,
            pointed=self.pointed,
            stem_kind=self.stem_kind,
            stem_virtual=self.stem_virtual,
            allow_unbalanced=self.allow_unbalanced,
        )
        base.update(kw)
        return type(self)(**base)

    def violations(self):
        out = super().violations()
        if out:
            return out
        for s in self.stems:
            if self.stem_kind[s] not in (BUD, LEAF):
                out.append(MapError("stem %d lacks an orientation" % s))
        if not self.allow_unbalanced and not out:
            buds = sum(1 for s in self.stems if self.stem_kind[s] == BUD)
            leaves = len(self.stems) - buds
            if buds != leaves:
                out.append(Unbalanced("%d buds vs %d leaves" % (buds, leaves)))
        return out

    # -- tour ---------------------------------------------------------------

    def is_unicellular(self) -> bool:
        return self.n_faces == 1

    @cached_property
    def tour(self):
        """Tour corners from the root: [root, t(root), t^2(root), ...].

        The root corner is by convention the maximum for tour order;
        ranks are positions with the root moved to the end.
        """
        if self.n_darts == 0:
            return ()
        if not self.is_unicellular():
            raise NotUnicellular("tour requires a single face")
        out = []
        oc = self.root
        while True:
            out.append(oc)
            oc = self.face_next(oc)
            if oc == self.root:
                break
        if len(out) != self.n_darts:
            raise NotUnicellular("tour misses corners")
        return tuple(out)

    @cached_property
    def tour_rank(self):
        """tour_rank[corner]: 1..L in tour order, root corner = L (max)."""
        L = len(self.tour)
        out = {}
        for i, (c, _s) in enumerate(self.tour):
            if c in out:
                raise NotUnicellular("tour visits a corner twice")
            out[c] = i if i >= 1 else L
        return out

    @cached_property
    def tour_labels(self):
        """Label of each tour position 0..L (position L closes the tour)."""
        lab = [0]
        for oc in self.tour:
            h = self.crossed_halfedge(oc)
            step = 0
            if self.is_stem(h):
                step = 1 if self.stem_kind[h] == BUD else -1
            lab.append(lab[-1] + step)
        if lab[-1] != 0:
            raise Unbalanced("corner labeling does not close up")
        return tuple(lab)

    def corner_labeling(self) -> dict:
        """The unique tour labeling, as a map corner -> label."""
        lab = self.tour_labels
        return {oc[0]: lab[i] for i, oc in enumerate(self.tour)}

    # -- classification -------------------------------------------------------

    def halfedge_flanks(self, h):
        """Corners flanking halfedge h at its vertex: (before, after)."""
        return (self.sigma_inv[h], h)

    def is_well_labeling(self) -> bool:
        """Across each interior halfedge, later flank = earlier flank - 1."""
        lab = self.corner_labeling()
        rank = self.tour_rank
        for h in range(self.n_darts):
            if self.is_stem(h):
                continue
            a, b = self.halfedge_flanks(h)
            if rank[a] > rank[b]:
                a, b = b, a
            if lab[b] != lab[a] - 1:
                return False
        return True

    def is_well_blossoming(self) -> bool:
        return self.is_unicellular() and self.is_well_labeling()

    def is_bud_rooted(self) -> bool:
        if self.n_darts == 0:
            return False
        h = self.crossed_halfedge(self.root)
        return self.is_stem(h) and self.stem_kind[h] == BUD

    def is_well_rooted(self) -> bool:
        return self.is_well_blossoming() and min(self.tour_labels, default=0) >= 0

    def is_bicolorable(self) -> bool:
        """Every cycle of corner moves crosses an even number of halfedges."""
        if self.n_darts == 0:
            return True
        color = {}
        L = len(self.tour)
        color[self.tour[0][0]] = 0
        for i, oc in enumerate(self.tour):
            c = oc[0]
            nc = self.tour[(i + 1) % L][0]
            want = color[c] ^ 1
            if color.setdefault(nc, want) != want:
                return False
        for c in range(self.n_darts):
            nc = self.sigma[c]
            want = color[c] ^ 1
            if color.setdefault(nc, want) != want:
                return False
        return True

    def is_virtually_rooted(self) -> bool:
        """Root corner surrounded by two virtual buds."""
        if self.n_darts == 0 or not self.is_bud_rooted():
            return False
        h_after = self.crossed_halfedge(self.root)
        h_before = self.crossed_halfedge(reversed_corner(self.root))
        return (
            self.stem_virtual[h_after]
            and self.is_stem(h_before)
            and self.stem_kind[h_before] == BUD
            and self.stem_virtual[h_before]
        )

    def classify(self) -> dict:
        wb = self.is_well_blossoming()
        return {
            "well_blossoming": wb,
            "bud_rooted": self.is_bud_rooted(),
            "well_rooted": wb and min(self.tour_labels, default=0) >= 0,
            "bicolorable": self.is_bicolorable(),
        }

    # -- colors and weights ------------------------------------------------------

    @cached_property
    def stem_tour_position(self):
        """stem dart -> index i such that the tour crosses it between
        positions i and i+1."""
        out = {}
        for i, oc in enumerate(self.tour):
            h = self.crossed_halfedge(oc)
            if self.is_stem(h):
                if h in out:
                    raise NotUnicellular("stem crossed twice")
                out[h] = i
        return out

    def stem_color(self, s) -> str:
        """'black' when the tour label just before the stem is even.

        For a bud this is the lower of the two labels around it, for a
        leaf the higher one; the convention makes stem colors track the
        vertex colors transported by the opening.  Virtual stems carry
        no color.
        """
        if self.stem_virtual[s]:
            return None
        i = self.stem_tour_position[s]
        return "black" if self.tour_labels[i] % 2 == 0 else "white"

    def face_color(self) -> str:
        return "black" if min(self.tour_labels) % 2 == 0 else "white"

    def rootable_stems(self):
        """The root bud and all leaves, in tour order of crossing."""
        if not self.is_bud_rooted():
            raise MapError("rootable stems are defined for bud-rooted maps")
        root_bud = self.crossed_halfedge(self.root)
        out = [root_bud]
        for oc in self.tour:
            h = self.crossed_halfedge(oc)
            if self.is_stem(h) and self.stem_kind[h] == LEAF:
                out.append(h)
        return tuple(out)

    def face_color_weight(self):
        """(black, white) counting leaves and the face itself."""
        blacks = whites = 0
        for s in self.stems:
            if self.stem_kind[s] == LEAF and not self.stem_virtual[s]:
                if self.stem_color(s) == "black":
                    blacks += 1
                else:
                    whites += 1
        if self.n_darts == 0:
            return (1, 0)
        if self.face_color() == "black":
            blacks += 1
        else:
            whites += 1
        return (blacks, whites)

    def rootable_stem_color_weight(self):
        """(black, white) over real rootable stems."""
        blacks = whites = 0
        for s in self.rootable_stems():
            col = self.stem_color(s)
            if col == "black":
                blacks += 1
            elif col == "white":
                whites += 1
        return (blacks, whites)

    def vertex_weight(self):
        """(n_1, n_2, ...): n_i vertices of degree 2i, virtual stems ignored."""
        if self.n_darts == 0:
            return ()
        degs = [self.degree(min(cyc)) for cyc in self.vertices]
        if any(k % 2 for k in degs):
            raise MapError("odd vertex degree: vertex-weight undefined")
        top = max(degs) // 2
        out = [0] * top
        for k in degs:
            out[k // 2 - 1] += 1
        return tuple(out)

    def is_four_valent(self) -> bool:
        return all(self.degree(min(cyc)) == 4 for cyc in self.vertices)

    # -- interior ---------------------------------------------------------------

    def interior_map(self) -> CombinatorialMap:
        """The map left after deleting all stems."""
        keep = [d for d in range(self.n_darts) if not self.is_stem(d)]
        if not keep:
            from .maps import vertex_map

            return vertex_map()
        new_id = {d: i for i, d in enumerate(keep)}
        sigma = [0] * len(keep)
        for d in keep:
            e = self.sigma[d]
            while self.is_stem(e):
                e = self.sigma[e]
            sigma[new_id[d]] = new_id[e]
        alpha = [new_id[self.alpha[d]] for d in keep]
        twist = [self.twist[d] for d in keep]
        rd, rs = self.root
        d = rd
        while self.is_stem(d):
            d = self.sigma_inv[d]
        root = (new_id[d], rs)
        pointed = self.pointed
        if pointed is not None:
            cands = [new_id[d] for d in self.vertex_darts(pointed) if not self.is_stem(d)]
            pointed = min(cands) if cands else None
        return CombinatorialMap(sigma, alpha, twist, root, pointed=pointed)

    def to_diagram(self) -> "Diagram":
        """Read the tour diagram off the face tour."""
        slots = []
        pending = {}
        chord_flags = {}
        for i, oc in enumerate(self.tour):
            h = self.crossed_halfedge(oc)
            if self.is_stem(h):
                slots.append((self.stem_kind[h], self.stem_virtual[h]))
                continue
            e = min(h, self.alpha[h])
            if e not in pending:
                pending[e] = (i, h)
                slots.append(None)
            else:
                j, h0 = pending.pop(e)
                flag = 1 if h == self.alpha[h0] else -1
                slots[j] = ("edge", i, flag)
                slots.append(("edge", j, flag))
                chord_flags[(j, i)] = flag
        if pending:
            raise NotUnicellular("tour left unmatched edge crossings")
        return Diagram(tuple(slots))


@dataclass(frozen=True)
class Diagram:
    """Tour diagram: per slot a stem ('bud'/'leaf', virtual) or an edge
    crossing ('edge', partner slot, flag); flag +1 means the two
    crossings run in opposite directions around the face."""

    slots: tuple

    def __len__(self):
        return len(self.slots)

    @property
    def n_interior_edges(self):
        return sum(1 for s in self.slots if s[0] == "edge") // 2

    @property
    def n_stems(self):
        return sum(1 for s in self.slots if s[0] != "edge")

    def labels(self):
        """Corner labels along the tour (length L+1, closes at 0)."""
        lab = [0]
        for s in self.slots:
            step = 0
            if s[0] == BUD:
                step = 1
            elif s[0] == LEAF:
                step = -1
            lab.append(lab[-1] + step)
        return lab

    def chords(self):
        for i, s in enumerate(self.slots):
            if s[0] == "edge" and s[1] > i:
                yield (i, s[1], s[2])

    def is_orientable(self) -> bool:
        return all(flag == 1 for _i, _j, flag in self.chords())

    def euler_characteristic(self) -> int:
        return self.n_vertex_classes() - self.n_interior_edges + 1

    def corner_class_pairs(self):
        """Corner identifications induced by the gluing."""
        L = len(self.slots)
        for k, s in enumerate(self.slots):
            if s[0] != "edge":
                yield (k, (k + 1) % L)
        for i, j, flag in self.chords():
            if flag == 1:
                yield (i, (j + 1) % L)
                yield ((i + 1) % L, j)
            else:
                yield (i, j)
                yield ((i + 1) % L, (j + 1) % L)

    def n_vertex_classes(self) -> int:
        L = len(self.slots)
        if L == 0:
            return 1
        parent = list(range(L))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.corner_class_pairs():
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
        return len({find(x) for x in range(L)})

    def to_map(self) -> BlossomingMap:
        return map_from_diagram(self)


def map_from_diagram(diagram: Diagram, allow_unbalanced=False) -> BlossomingMap:
    """Rebuild the rooted blossoming map glued from a tour diagram."""
    L = len(diagram.slots)
    if L == 0:
        return BlossomingMap((), (), (), None, allow_unbalanced=allow_unbalanced)
    # halfedge instances: ("s", k) for a stem slot, ("e", k) for the
    # halfedge whose flanking corners include corner k of chord slot k.
    flanks = {}

    def add_instance(inst, a, b):
        flanks[inst] = (a, b)

    for k, s in enumerate(diagram.slots):
        if s[0] != "edge":
            add_instance(("s", k), k, (k + 1) % L)
    for i, j, flag in diagram.chords():
        if flag == 1:
            add_instance(("e", i), i, (j + 1) % L)
            add_instance(("e", j), (i + 1) % L, j)
        else:
            add_instance(("e", i), i, j)
            add_instance(("e", j), (i + 1) % L, (j + 1) % L)

    # the halfedge through which the tour leaves corner k (crosses slot k):
    # for a one-sided chord both crossings depart through the same halfedge
    near_inst = {}
    for k, s in enumerate(diagram.slots):
        if s[0] != "edge":
            near_inst[k] = ("s", k)
    for i, j, flag in diagram.chords():
        near_inst[i] = ("e", i)
        near_inst[j] = ("e", j) if flag == 1 else ("e", i)

    # each corner touches exactly two instances: from its two adjacent slots
    at_corner = {k: [] for k in range(L)}
    for inst, (a, b) in flanks.items():
        at_corner[a].append(inst)
        at_corner[b].append(inst)
    for k, lst in at_corner.items():
        if len(lst) != 2:
            raise MapError("corner %d has %d flanking halfedges" % (k, len(lst)))

    # walk rotations: alternate corner, instance, corner, ...
    dart_id = {}
    sigma = []
    corner_after_dart = {}
    visited = set()
    for start in range(L):
        if start in visited:
            continue
        # choose direction: leave `start` through the halfedge its tour
        # crossing uses, so the root corner gets spin +1
        inst = at_corner[start][0]
        if at_corner[start][1] == near_inst[start]:
            inst = at_corner[start][1]
        cycle_darts = []
        c = start
        while True:
            visited.add(c)
            d = dart_id.setdefault(inst, len(dart_id))
            while len(sigma) <= d:
                sigma.append(None)
            cycle_darts.append(d)
            a, b = flanks[inst]
            c = b if a == c else a
            corner_after_dart[d] = c
            if c == start:
                break
            i1, i2 = at_corner[c]
            inst = i2 if i1 == inst else i1
        for t, d in enumerate(cycle_darts):
            sigma[d] = cycle_darts[(t + 1) % len(cycle_darts)]

    n = len(dart_id)
    alpha = [-1] * n
    twist = [1] * n
    kind = [None] * n
    virt = [False] * n

    # spin of the tour at corner k: +1 when it leaves k in direct order
    dart_before_corner = {}
    for d, c in corner_after_dart.items():
        dart_before_corner[c] = d
    spin = {}
    for k in range(L):
        d_prev = dart_before_corner[k]
        d_near = dart_id[near_inst[k]]
        # rotation reads ..., d_prev, corner k, sigma[d_prev], ...
        if d_near == sigma[d_prev]:
            spin[k] = 1
        elif d_near == d_prev:
            spin[k] = -1
        else:
            raise MapError("tour crossing detached from corner %d" % k)

    for k, s in enumerate(diagram.slots):
        if s[0] != "edge":
            d = dart_id[("s", k)]
            kind[d] = s[0]
            virt[d] = bool(s[1])
    for i, j, flag in diagram.chords():
        di, dj = dart_id[("e", i)], dart_id[("e", j)]
        alpha[di] = dj
        alpha[dj] = di
        t1 = spin[i] * spin[(i + 1) % L]
        t2 = spin[j] * spin[(j + 1) % L]
        if t1 != t2:
            raise MapError("inconsistent twist from diagram")
        twist[di] = twist[dj] = t1

    root = (dart_before_corner[0], spin[0])
    m = BlossomingMap(
        sigma, alpha, twist, root,
        stem_kind=kind, stem_virtual=virt, allow_unbalanced=allow_unbalanced,
    )
    return m

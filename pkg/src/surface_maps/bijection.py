"""Opening and closure: the bijection between bipartite pointed maps
and well-blossoming unicellular maps, plus the corner construction
turning arbitrary maps into bipartite quadrangulations.

The opening cuts, in the dual of the map, every edge dual to the
leftmost geodesic tree, replacing it by an oriented stem pair; heights
from the pointed vertex become the corner labels of the result.  The
closure matches stems back into edges by cyclic first-return matching,
marks the face of minimum label and points its dual vertex.
"""

from __future__ import annotations

from .blossoming import BlossomingMap
from .errors import (
    MapError,
    NotBipartite,
    NotPointed,
    NotQuadrangulation,
    NotWellBlossoming,
)
from .maps import BUD, LEAF, CombinatorialMap, vertex_map


def edge_id(m, h):
    return min(h, m.alpha[h])


class SpanningTree:
    """An edge subset of a host map, closed under the usual queries."""

    def __init__(self, host, edge_set):
        self.host = host
        self.edges = frozenset(edge_set)
        n_v = host.n_vertices
        if len(self.edges) != n_v - 1:
            raise MapError("edge count %d does not span" % len(self.edges))

    def tree_neighbors(self, v):
        for d in self.host.vertex_darts(v):
            a = self.host.alpha[d]
            if a >= 0 and edge_id(self.host, d) in self.edges:
                yield self.host.vertex_of[a]

    def tree_distances(self, v):
        dist = {v: 0}
        frontier = [v]
        while frontier:
            nxt = []
            for u in frontier:
                for w in self.tree_neighbors(u):
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        nxt.append(w)
            frontier = nxt
        return dist

    def is_spanning(self):
        return len(self.tree_distances(self.host.vertex_of[0])) == self.host.n_vertices

    def is_geodesic(self):
        h = self.host.heights()
        t = self.tree_distances(self.host.pointed)
        return self.is_spanning() and all(t[v] == h[v] for v in h)

    def contour_word(self):
        """Heights of corners along the tour of the tree from the root."""
        m = self.host
        h = m.heights()
        word = []
        oc = m.root
        for _ in range(4 * m.n_darts + 4):
            word.append(h[m.vertex_of[oc[0]]])
            e = edge_id(m, m.crossed_halfedge(oc))
            oc = m.face_next(oc) if e in self.edges else m.vertex_next(oc)
            if oc == m.root:
                return tuple(word)
        raise MapError("contour never closed")


def leftmost_geodesic_tree(m: CombinatorialMap) -> SpanningTree:
    """The geodesic spanning tree with lexicographically maximal contour.

    Single tour from the root; an unvisited edge joins the tree when it
    climbs away from the pointed vertex, or when discarding it would
    disconnect what remains or stretch a distance.
    """
    if m.pointed is None:
        raise NotPointed("leftmost geodesic tree needs a pointed map")
    if not m.is_bipartite():
        raise NotBipartite("leftmost geodesic tree needs a bipartite map")
    if m.n_darts == 0:
        return SpanningTree(m, ())
    heights = m.heights()
    all_edges = {edge_id(m, d) for d in range(m.n_darts)}
    t = set()
    visited = set()

    def bfs(allowed):
        dist = {m.pointed: 0}
        frontier = [m.pointed]
        while frontier:
            nxt = []
            for u in frontier:
                for d in m.vertex_darts(u):
                    if edge_id(m, d) not in allowed:
                        continue
                    w = m.vertex_of[m.alpha[d]]
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        nxt.append(w)
            frontier = nxt
        return dist

    oc = m.root
    guard = 0
    while True:
        guard += 1
        if guard > 8 * m.n_darts + 8:
            raise MapError("tree tour never closed")
        e = edge_id(m, m.crossed_halfedge(oc))
        if e in visited:
            oc = m.face_next(oc) if e in t else m.vertex_next(oc)
            if oc == m.root:
                break
            continue
        c_now = m.vertex_of[oc[0]]
        c_next = m.vertex_of[m.face_next(oc)[0]]
        allowed = all_edges - (visited - t) - {e}
        dist = bfs(allowed)
        take = (
            heights[c_next] == heights[c_now] + 1
            or len(dist) != m.n_vertices
            or dist.get(c_now) != heights[c_now]
        )
        if take:
            t.add(e)
        visited.add(e)
    return SpanningTree(m, t)


def opening(m: CombinatorialMap, t: SpanningTree) -> BlossomingMap:
    """Open m along the spanning tree t (in the dual)."""
    if m.n_darts == 0:
        return BlossomingMap((), (), (), None)
    heights = m.heights()
    mstar, edge_map = m.dual_with_edge_map()
    alpha = list(mstar.alpha)
    for e in t.edges:
        a1, a2 = edge_map[e]
        alpha[a1] = -1
        alpha[a2] = -1
    kind = [None] * m.n_darts
    cut = BlossomingMap(
        mstar.sigma,
        alpha,
        mstar.twist,
        mstar.root,
        stem_kind=[BUD if a < 0 else None for a in alpha],
        stem_virtual=None,
        allow_unbalanced=True,
        check=False,
    )
    # assign stem orientations so the corner labeling equals the height
    # of the primal vertex of each corner
    tour = cut.tour
    L = len(tour)
    for i, oc in enumerate(tour):
        h = cut.crossed_halfedge(oc)
        if cut.alpha[h] >= 0:
            continue
        here = heights[m.vertex_of[tour[i][0]]]
        there = heights[m.vertex_of[tour[(i + 1) % L][0]]]
        if abs(here - there) != 1:
            raise MapError("cut edge does not step the height by one")
        kind[h] = BUD if there == here + 1 else LEAF
    u = BlossomingMap(
        cut.sigma,
        cut.alpha,
        cut.twist,
        cut.root,
        stem_kind=kind,
    )
    if not u.is_unicellular():
        raise MapError("opening failed to produce a unicellular map")
    return u


def opening_leftmost(m: CombinatorialMap) -> BlossomingMap:
    return opening(m, leftmost_geodesic_tree(m))


def match_stems(u: BlossomingMap):
    """Pair buds with leaves by the recursive adjacent-matching rule;
    equal to the cyclic first-return walk matching, which is asserted.
    """
    order = []
    for oc in u.tour:
        h = u.crossed_halfedge(oc)
        if u.is_stem(h):
            order.append(h)
    n = len(order)
    if n == 0:
        return ()
    matched = {}
    alive = list(range(n))
    progress = True
    while alive and progress:
        progress = False
        k = len(alive)
        for idx in range(k):
            a = alive[idx]
            b = alive[(idx + 1) % k]
            if a == b:
                break
            if u.stem_kind[order[a]] == BUD and u.stem_kind[order[b]] == LEAF:
                matched[a] = b
                alive = [x for x in alive if x not in (a, b)]
                progress = True
                break
    if alive:
        raise NotWellBlossoming("stem matching got stuck")
    pairs = tuple(sorted((order[a], order[b]) for a, b in matched.items()))
    assert pairs == _match_stems_walk(u, order), "walk rule disagrees"
    return pairs

def _match_stems_walk(u, order):
    """First-return matching read off the up/down walk of stems."""
    n = len(order)
    height = 0
    up_at = {}
    pairs = []
    pending = []
    for i in range(n):
        if u.stem_kind[order[i]] == BUD:
            up_at[height] = i
            height += 1
        else:
            height -= 1
            if height in up_at:
                pairs.append((order[up_at.pop(height)], order[i]))
            else:
                pending.append((height, i))
    for height, i in pending:
        j = up_at.pop(height)
        pairs.append((order[j], order[i]))
    return tuple(sorted(pairs))


def closure(u: BlossomingMap) -> CombinatorialMap:
    """Close a well-blossoming map into a bipartite pointed map."""
    if u.n_darts == 0:
        return vertex_map(pointed=True)
    if not u.is_well_blossoming():
        raise NotWellBlossoming("closure requires a well-blossoming map")
    pairs = match_stems(u)
    spin_at = {}
    tour = u.tour
    pos = u.stem_tour_position
    for i, oc in enumerate(tour):
        spin_at[i] = oc[1]
    alpha = list(u.alpha)
    twist = list(u.twist)
    for b, l in pairs:
        if u.stem_kind[b] != BUD:
            b, l = l, b
        alpha[b] = l
        alpha[l] = b
        tw = spin_at[pos[b]] * spin_at[pos[l]]
        twist[b] = tw
        twist[l] = tw
    closed = CombinatorialMap(u.sigma, alpha, twist, u.root)
    # the corners of minimum label all sit in one face of the closed map
    labels = u.corner_labeling()
    lo = min(labels.values())
    lo_faces = {closed.face_of[c] for c, v in labels.items() if v == lo}
    if len(lo_faces) != 1:
        raise MapError("minimum-label corners spread over several faces")
    marked = lo_faces.pop()
    pointed = closed.dual_vertex_of_face(marked)
    result = closed.dual()
    return result._replace(pointed=pointed)


def roundtrip_open_close(m: CombinatorialMap) -> bool:
    return closure(opening_leftmost(m)).canonical_encoding() == m.canonical_encoding()


def roundtrip_close_open(u: BlossomingMap) -> bool:
    return opening_leftmost(closure(u)).canonical_encoding() == u.canonical_encoding()


# -- the corner construction ---------------------------------------------------


def quadrangulate(m: CombinatorialMap) -> CombinatorialMap:
    """Bipartite quadrangulation whose edges are the corners of m.

    Vertices are the vertices and faces of m; the edge of corner c
    joins the vertex and the face adjacent to c.  The vertex map goes
    to the single-edge map.
    """
    n = m.n_darts
    if n == 0:
        return CombinatorialMap([0, 1], [1, 0], [1, 1], (0, 1))
    sigma = [0] * (2 * n)
    alpha = [0] * (2 * n)
    twist = [1] * (2 * n)
    spin_in_chosen = {}
    for orb in m.faces:
        k = len(orb)
        for i, (c, s) in enumerate(orb):
            spin_in_chosen[c] = s
            sigma[2 * c + 1] = 2 * orb[(i + 1) % k][0] + 1
    for c in range(n):
        sigma[2 * c] = 2 * m.sigma[c]
        alpha[2 * c] = 2 * c + 1
        alpha[2 * c + 1] = 2 * c
        twist[2 * c] = twist[2 * c + 1] = spin_in_chosen[c]
    rd, rs = m.root
    q = CombinatorialMap(sigma, alpha, twist, (2 * rd, rs))
    if not (q.is_quadrangulation() and q.is_bipartite()):
        raise MapError("corner construction left a non-quadrangulation")
    return q


def quadrangulate_inverse(q: CombinatorialMap) -> CombinatorialMap:
    """Recover the map whose corner construction is q.

    Black corners of q (at even distance from the root) become darts;
    each face of q carries one edge, joining the successors of its two
    black corners in their vertex rotations.
    """
    if q.n_darts == 2 and q.n_edges == 1:
        return vertex_map()
    classes = q.bipartite_classes()
    if classes is None or not q.is_quadrangulation():
        raise NotQuadrangulation("input is not a bipartite quadrangulation")
    black = classes[0]
    blacks = [c for c in range(q.n_darts) if q.vertex_of[c] in black]
    dart_of = {c: i for i, c in enumerate(blacks)}
    nd = len(blacks)
    sigma = [0] * nd
    alpha = [0] * nd
    twist = [1] * nd
    for c in blacks:
        sigma[dart_of[c]] = dart_of[q.sigma[c]]
    spin_in_chosen = {}
    for orb in q.faces:
        for c, s in orb:
            spin_in_chosen[c] = s
    for orb in q.faces:
        bc = [c for c, _s in orb if q.vertex_of[c] in black]
        if len(bc) != 2:
            raise NotQuadrangulation("face without two black corners")
        p, r = bc
        dp, dr = dart_of[q.sigma[p]], dart_of[q.sigma[r]]
        alpha[dp] = dr
        alpha[dr] = dp
        tw = spin_in_chosen[p] * spin_in_chosen[r]
        twist[dp] = twist[dr] = tw
    rd, rs = q.root
    if q.vertex_of[rd] not in black:
        raise NotQuadrangulation("root corner is not at a black vertex")
    return CombinatorialMap(sigma, alpha, twist, (dart_of[rd], rs))

"""Triangulated open-closed cobordisms and their local moves.

A complex stores oriented triangles as vertex triples (canonically rotated so
the smallest vertex comes first), a set of coloured (free) boundary edges,
and ordered black boundary components split into inputs and outputs.  Edge
identity is the unordered vertex pair; all orientation data lives on the
triangles.  Degenerate triangulations (loop edges, parallel edges, repeated
triangles) are rejected -- in particular a boundary circle needs at least
three edges.

Moves (bistellar 1-3 / 3-1 / 2-2 and the coloured elementary shellings)
return new complexes; values are immutable after construction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import InvalidComplexError, NotApplicableError


def ekey(u: int, v: int):
    return (u, v) if u < v else (v, u)


def canonical_triangle(tri):
    a, b, c = tri
    if len({a, b, c}) != 3:
        raise InvalidComplexError([f"degenerate triangle {tri}"])
    m = min(tri)
    while tri[0] != m:
        tri = (tri[1], tri[2], tri[0])
    return tri


@dataclass(frozen=True)
class BoundaryComponent:
    """An ordered black boundary piece: the edge list fixes the leg order."""

    kind: str  # "interval" | "circle"
    edges: tuple  # tuple of directed (u, v) pairs chaining head-to-tail

    def __post_init__(self):
        if self.kind not in ("interval", "circle"):
            raise InvalidComplexError([f"unknown boundary kind {self.kind!r}"])
        object.__setattr__(self, "edges", tuple((u, v) for (u, v) in self.edges))

    def edge_keys(self):
        return [ekey(u, v) for (u, v) in self.edges]

    def vertices(self):
        seq = [self.edges[0][0]]
        for (u, v) in self.edges:
            seq.append(v)
        return seq


class OpenClosedComplex:
    """Oriented triangulated 2-manifold with black/coloured boundary."""

    __slots__ = ("vertex_count", "triangles", "coloured_edges", "black_in", "black_out",
                 "edge_colours", "_edge_tris", "_directed")

    def __init__(self, vertex_count, triangles, coloured_edges, black_in, black_out,
                 edge_colours=None):
        self.vertex_count = vertex_count
        self.triangles = tuple(canonical_triangle(tuple(t)) for t in triangles)
        self.coloured_edges = frozenset(ekey(u, v) for (u, v) in coloured_edges)
        self.black_in = tuple(
            b if isinstance(b, BoundaryComponent) else BoundaryComponent(**b) for b in black_in
        )
        self.black_out = tuple(
            b if isinstance(b, BoundaryComponent) else BoundaryComponent(**b) for b in black_out
        )
        self.edge_colours = {ekey(u, v): c for (u, v), c in (edge_colours or {}).items()}

        et = {}
        directed = {}
        for idx, (a, b, c) in enumerate(self.triangles):
            for (u, v) in ((a, b), (b, c), (c, a)):
                et.setdefault(ekey(u, v), []).append(idx)
                directed[(u, v)] = directed.get((u, v), 0) + 1
        self._edge_tris = et
        self._directed = directed

    # -- derived sets -----------------------------------------------------------

    def edge_triangles(self):
        return self._edge_tris

    def edges(self):
        return sorted(self._edge_tris)

    def boundary_edges(self):
        return sorted(e for e, ts in self._edge_tris.items() if len(ts) == 1)

    def interior_edges(self):
        return sorted(e for e, ts in self._edge_tris.items() if len(ts) == 2)

    def black_edge_set(self):
        out = set()
        for comp in self.black_in + self.black_out:
            out.update(comp.edge_keys())
        return out

    def boundary_vertex_set(self):
        verts = set()
        for e in self.boundary_edges():
            verts.update(e)
        return verts

    def corner_vertices(self):
        """Vertices where a black and a coloured boundary edge meet."""
        black_v = set()
        for e in self.black_edge_set():
            black_v.update(e)
        col_v = set()
        for e in self.coloured_edges:
            col_v.update(e)
        return black_v & col_v

    def vertex_components(self):
        """Union-find partition of vertices by triangle adjacency."""
        parent = list(range(self.vertex_count))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for (a, b, c) in self.triangles:
            for (u, v) in ((a, b), (b, c)):
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
        return [find(v) for v in range(self.vertex_count)]

    def boundary_cycles(self):
        """Boundary circuits as directed vertex cycles (induced orientation)."""
        succ = {}
        for idx, (a, b, c) in enumerate(self.triangles):
            for (u, v) in ((a, b), (b, c), (c, a)):
                if len(self._edge_tris[ekey(u, v)]) == 1:
                    succ[u] = v
        cycles = []
        seen = set()
        for start in sorted(succ):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            v = succ[start]
            while v != start:
                cyc.append(v)
                seen.add(v)
                v = succ[v]
            cycles.append(cyc)
        return cycles

    def coloured_arcs(self):
        """Maximal coloured chains, in a deterministic discovery order.

        Arcs are sorted by their smallest edge; each arc is a list of edge
        keys in chain order starting from the end with the smaller vertex
        (paths) or from the smallest edge (cycles).
        """
        adj = {}
        for (u, v) in self.coloured_edges:
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
        unvisited = set(self.coloured_edges)
        arcs = []
        while unvisited:
            seed = min(unvisited)
            endpoints = [x for x in adj if len(adj[x]) == 1]
            # walk the whole chain containing `seed`
            comp = {seed}
            frontier = [seed]
            while frontier:
                (a, b) = frontier.pop()
                for x in (a, b):
                    for y in adj[x]:
                        e = ekey(x, y)
                        if e in unvisited and e not in comp:
                            comp.add(e)
                            frontier.append(e)
            comp_vertices = set()
            for e in comp:
                comp_vertices.update(e)
            ends = sorted(v for v in comp_vertices if len([y for y in adj[v] if ekey(v, y) in comp]) == 1)
            if ends:  # path: start from the smaller endpoint
                start = ends[0]
            else:  # cycle: start at the smallest vertex of the smallest edge
                start = min(min(e) for e in comp)
            chain = []
            prev = None
            cur = start
            while True:
                nxts = [y for y in adj[cur] if ekey(cur, y) in comp and y != prev]
                if prev is None and not ends:
                    nxts = [min(nxts)]
                if not nxts:
                    break
                nxt = nxts[0]
                chain.append(ekey(cur, nxt))
                prev, cur = cur, nxt
                if len(chain) == len(comp):
                    break
            arcs.append(chain)
            unvisited -= comp
        arcs.sort(key=lambda chain: min(chain))
        return arcs

    def arc_colours(self):
        """Brane colours as an arc-index map (the file-format view)."""
        out = {}
        for idx, arc in enumerate(self.coloured_arcs()):
            cols = {self.edge_colours.get(e) for e in arc}
            cols.discard(None)
            if len(cols) > 1:
                raise InvalidComplexError([f"arc {idx} carries inconsistent colours {sorted(cols)}"])
            if cols:
                out[idx] = next(iter(cols))
        return out

    # -- validation ----------------------------------------------------------------

    def validate(self) -> "ComplexReport":
        violations = []
        n = self.vertex_count

        used = set()
        for t in self.triangles:
            for v in t:
                if not (0 <= v < n):
                    violations.append(("vertex_range", f"triangle {t} references vertex {v}"))
                used.add(v)
        for v in range(n):
            if v not in used:
                violations.append(("isolated_vertex", f"vertex {v} lies in no triangle"))

        seen_sets = set()
        for t in self.triangles:
            key = frozenset(t)
            if len(key) != 3:
                violations.append(("degenerate_triangle", f"{t}"))
                continue
            if key in seen_sets:
                violations.append(("duplicate_triangle", f"{t}"))
            seen_sets.add(key)

        for e, ts in sorted(self._edge_tris.items()):
            if len(ts) > 2:
                violations.append(("edge_in_many_triangles", f"edge {e} lies in {len(ts)} triangles"))
        for (u, v), cnt in sorted(self._directed.items()):
            if cnt > 1:
                violations.append(("orientation", f"directed edge {(u, v)} repeats; orientations clash"))
        for e, ts in sorted(self._edge_tris.items()):
            if len(ts) == 2:
                u, v = e
                if self._directed.get((u, v), 0) != 1 or self._directed.get((v, u), 0) != 1:
                    violations.append(("orientation", f"interior edge {e} not traversed both ways"))

        boundary = set(self.boundary_edges())
        black = set()
        for comp in self.black_in + self.black_out:
            for e in comp.edge_keys():
                if e in black:
                    violations.append(("component_overlap", f"edge {e} in two black components"))
                black.add(e)
        overlap = black & self.coloured_edges
        for e in sorted(overlap):
            violations.append(("classification", f"edge {e} is both black and coloured"))
        for e in sorted(black | self.coloured_edges):
            if e not in boundary:
                violations.append(("classification", f"classified edge {e} is not a boundary edge"))
        for e in sorted(boundary - black - self.coloured_edges):
            violations.append(("classification", f"boundary edge {e} is unclassified"))

        for which, comps in (("in", self.black_in), ("out", self.black_out)):
            for ci, comp in enumerate(comps):
                if not comp.edges:
                    violations.append(("component_empty", f"black_{which}[{ci}] has no edges"))
                    continue
                for (u, v) in comp.edges:
                    if u == v:
                        violations.append(("component_chain", f"black_{which}[{ci}] has loop edge"))
                for i in range(len(comp.edges) - 1):
                    if comp.edges[i][1] != comp.edges[i + 1][0]:
                        violations.append(
                            ("component_chain", f"black_{which}[{ci}] edges {i},{i+1} do not chain")
                        )
                if comp.kind == "circle":
                    if len(comp.edges) < 3:
                        violations.append(
                            ("circle_too_short",
                             f"black_{which}[{ci}] circle has {len(comp.edges)} edges; needs >= 3")
                        )
                    elif comp.edges[-1][1] != comp.edges[0][0]:
                        violations.append(("component_chain", f"black_{which}[{ci}] circle does not close"))
                else:
                    if comp.edges[-1][1] == comp.edges[0][0]:
                        violations.append(("component_chain", f"black_{which}[{ci}] interval closes up"))

        # every boundary vertex must lie on exactly two boundary edges
        bcount = {}
        for e in boundary:
            for v in e:
                bcount[v] = bcount.get(v, 0) + 1
        for v, cnt in sorted(bcount.items()):
            if cnt != 2:
                violations.append(("pinched_boundary", f"vertex {v} lies on {cnt} boundary edges"))

        # interval endpoints are corners; corners are exactly the black/coloured meeting points
        corner = self.corner_vertices()
        for which, comps in (("in", self.black_in), ("out", self.black_out)):
            for ci, comp in enumerate(comps):
                if comp.kind == "interval" and comp.edges:
                    seq = comp.vertices()
                    for endpoint in (seq[0], seq[-1]):
                        if endpoint not in corner:
                            violations.append(
                                ("corner", f"black_{which}[{ci}] endpoint {endpoint} is not a corner")
                            )

        violations.extend(self._link_violations())

        try:
            self.arc_colours()
        except InvalidComplexError as err:
            violations.extend(("brane_colours", v) for v in err.violations)
        for e in self.edge_colours:
            if e not in self.coloured_edges:
                violations.append(("brane_colours", f"colour on non-coloured edge {e}"))

        components = self._component_reports() if not violations else []
        return ComplexReport(ok=not violations, violations=violations, components=components)

    def _link_violations(self):
        violations = []
        links = {}
        for (a, b, c) in self.triangles:
            for v, opp in ((a, (b, c)), (b, (c, a)), (c, (a, b))):
                links.setdefault(v, []).append(opp)
        boundary_vertices = self.boundary_vertex_set()
        for v in sorted(links):
            opposite = links[v]
            deg = {}
            for (x, y) in opposite:
                deg[x] = deg.get(x, 0) + 1
                deg[y] = deg.get(y, 0) + 1
            odd = [x for x, d in sorted(deg.items()) if d == 1]
            bad = [x for x, d in sorted(deg.items()) if d > 2]
            if bad:
                violations.append(("link", f"link of vertex {v} branches at {bad}"))
                continue
            # connectivity of the link graph
            adj = {}
            for (x, y) in opposite:
                adj.setdefault(x, set()).add(y)
                adj.setdefault(y, set()).add(x)
            start = next(iter(sorted(adj)))
            seen = {start}
            stack = [start]
            while stack:
                cur = stack.pop()
                for nxt in adj[cur]:
                    if nxt not in seen:
                        seen.add(nxt)
                        stack.append(nxt)
            if len(seen) != len(adj):
                violations.append(("link", f"link of vertex {v} is disconnected"))
                continue
            if v in boundary_vertices:
                if len(odd) != 2:
                    violations.append(("link", f"boundary vertex {v} link is not a chain"))
            else:
                if odd:
                    violations.append(("link", f"interior vertex {v} link is not a cycle"))
        return violations

    def _component_reports(self):
        roots = self.vertex_components()
        comp_ids = sorted(set(roots))
        reports = []
        cycles = self.boundary_cycles()
        coloured_v = set()
        for e in self.coloured_edges:
            coloured_v.update(e)
        black_v = set()
        for e in self.black_edge_set():
            black_v.update(e)
        for cid in comp_ids:
            verts = [v for v in range(self.vertex_count) if roots[v] == cid]
            vset = set(verts)
            tris = [t for t in self.triangles if t[0] in vset]
            edges = [e for e in self._edge_tris if e[0] in vset]
            chi = len(verts) - len(edges) + len(tris)
            my_cycles = [c for c in cycles if c[0] in vset]
            windows = 0
            black_circles = 0
            mixed = 0
            intervals_touched = 0
            for cyc in my_cycles:
                cset = set(cyc)
                if cset <= coloured_v and not (cset & black_v):
                    windows += 1
                elif cset <= black_v and not (cset & coloured_v):
                    black_circles += 1
                else:
                    mixed += 1
            genus2 = 2 - chi - len(my_cycles)
            reports.append({
                "vertices": len(verts),
                "edges": len(edges),
                "triangles": len(tris),
                "euler_characteristic": chi,
                "boundary_cycles": len(my_cycles),
                "windows": windows,
                "black_circles": black_circles,
                "mixed_cycles": mixed,
                "genus": genus2 // 2 if genus2 % 2 == 0 and genus2 >= 0 else None,
            })
        return reports

    def require_valid(self):
        report = self.validate()
        if not report.ok:
            raise InvalidComplexError(report.violations)
        return self

    # -- rebuilding helpers -----------------------------------------------------

    def replaced(self, vertex_count=None, triangles=None, coloured_edges=None,
                 black_in=None, black_out=None, edge_colours=None) -> "OpenClosedComplex":
        return OpenClosedComplex(
            vertex_count if vertex_count is not None else self.vertex_count,
            triangles if triangles is not None else self.triangles,
            coloured_edges if coloured_edges is not None else self.coloured_edges,
            black_in if black_in is not None else self.black_in,
            black_out if black_out is not None else self.black_out,
            edge_colours if edge_colours is not None else self.edge_colours,
        )

    def relabelled(self, vmap, new_count) -> "OpenClosedComplex":
        def m(v):
            return vmap[v]

        return OpenClosedComplex(
            new_count,
            [(m(a), m(b), m(c)) for (a, b, c) in self.triangles],
            [(m(u), m(v)) for (u, v) in self.coloured_edges],
            [BoundaryComponent(b.kind, [(m(u), m(v)) for (u, v) in b.edges]) for b in self.black_in],
            [BoundaryComponent(b.kind, [(m(u), m(v)) for (u, v) in b.edges]) for b in self.black_out],
            {(m(u), m(v)): c for (u, v), c in self.edge_colours.items()},
        )

    def __repr__(self):
        return (f"OpenClosedComplex(V={self.vertex_count}, F={len(self.triangles)}, "
                f"in={len(self.black_in)}, out={len(self.black_out)}, "
                f"coloured={len(self.coloured_edges)})")


@dataclass
class ComplexReport:
    ok: bool
    violations: list
    components: list

    def __bool__(self):
        return self.ok


def validate(c: OpenClosedComplex) -> ComplexReport:
    return c.validate()


# -- bistellar moves ---------------------------------------------------------------


def _directed_occurrence(c, e):
    """For an interior edge return ((u,v), t1, apex1), ((v,u), t2, apex2)."""
    u, v = e
    out = []
    for idx in c.edge_triangles()[e]:
        a, b, cc = c.triangles[idx]
        for (x, y, z) in ((a, b, cc), (b, cc, a), (cc, a, b)):
            if (x, y) == (u, v) or (x, y) == (v, u):
                out.append(((x, y), idx, z))
    return out


def pachner_22(c: OpenClosedComplex, edge) -> OpenClosedComplex:
    """Flip the diagonal of the quadrilateral around an interior edge."""
    e = ekey(*edge)
    tris = c.edge_triangles().get(e)
    if tris is None:
        raise NotApplicableError(f"no edge {e}")
    if len(tris) != 2:
        raise NotApplicableError(f"edge {e} is not interior")
    occ = _directed_occurrence(c, e)
    ((u, v), t1, x), (_, t2, y) = occ
    if x == y:
        raise NotApplicableError("flip would produce a degenerate triangle")
    if ekey(x, y) in c.edge_triangles():
        raise NotApplicableError(f"flipped diagonal {ekey(x, y)} already present")
    new_tris = list(c.triangles)
    new_tris[t1] = (x, u, y)
    new_tris[t2] = (y, v, x)
    return c.replaced(triangles=new_tris)


def _find_triangle(c, triangle):
    if isinstance(triangle, int):
        if not (0 <= triangle < len(c.triangles)):
            raise NotApplicableError(f"no triangle index {triangle}")
        return triangle
    want = canonical_triangle(tuple(triangle))
    for idx, t in enumerate(c.triangles):
        if t == want:
            return idx
    raise NotApplicableError(f"no triangle {triangle}")


def pachner_13(c: OpenClosedComplex, triangle) -> OpenClosedComplex:
    """Star-subdivide one triangle with a fresh interior vertex."""
    idx = _find_triangle(c, triangle)
    i, j, k = c.triangles[idx]
    w = c.vertex_count
    new_tris = list(c.triangles)
    new_tris[idx] = (i, j, w)
    new_tris.append((j, k, w))
    new_tris.append((k, i, w))
    return c.replaced(vertex_count=c.vertex_count + 1, triangles=new_tris)


def pachner_31(c: OpenClosedComplex, vertex: int) -> OpenClosedComplex:
    """Remove an interior vertex of degree exactly three."""
    v = vertex
    if not (0 <= v < c.vertex_count):
        raise NotApplicableError(f"no vertex {v}")
    incident = [idx for idx, t in enumerate(c.triangles) if v in t]
    boundary_vs = c.boundary_vertex_set()
    if v in boundary_vs:
        raise NotApplicableError(f"vertex {v} is on the boundary")
    if len(incident) != 3:
        raise NotApplicableError(f"vertex {v} has degree {len(incident)}, need 3")
    # outer directed edges (a,b) opposite v form the replacement cycle
    opp = {}
    for idx in incident:
        a, b, cc = c.triangles[idx]
        for (x, y, z) in ((a, b, cc), (b, cc, a), (cc, a, b)):
            if z == v:
                opp[x] = y
    start = min(opp)
    cyc = (start, opp[start], opp[opp[start]])
    if len(set(cyc)) != 3 or opp[cyc[2]] != start:
        raise NotApplicableError("link of vertex is not a 3-cycle")
    if frozenset(cyc) in {frozenset(t) for t in c.triangles}:
        raise NotApplicableError("outer triangle already exists")
    new_tris = [t for idx, t in enumerate(c.triangles) if idx not in incident]
    new_tris.append(cyc)
    vmap = {x: (x if x < v else x - 1) for x in range(c.vertex_count)}
    vmap[v] = -1
    return c.replaced(triangles=new_tris).relabelled(vmap, c.vertex_count - 1)


# -- type-2 elementary shellings (all involved boundary edges coloured) -------------


def _boundary_direction(c, e):
    """Directed form of a boundary edge as induced by its triangle."""
    u, v = e
    if c._directed.get((u, v), 0) == 1:
        return (u, v)
    return (v, u)


def _coloured_boundary_edge(c, edge):
    e = ekey(*edge)
    tris = c.edge_triangles().get(e)
    if tris is None or len(tris) != 1:
        raise NotApplicableError(f"edge {e} is not a boundary edge")
    if e not in c.coloured_edges:
        raise NotApplicableError(f"edge {e} is not coloured (black sites change the black boundary)")
    return e, tris[0]


def shelling_split_edge(c: OpenClosedComplex, edge) -> OpenClosedComplex:
    """One coloured edge -> two: glue a triangle with a fresh boundary vertex."""
    e, _ = _coloured_boundary_edge(c, edge)
    (u, v) = _boundary_direction(c, e)
    w = c.vertex_count
    colour = c.edge_colours.get(e)
    new_cols = dict(c.edge_colours)
    new_cols.pop(e, None)
    new_coloured = set(c.coloured_edges) - {e} | {ekey(u, w), ekey(w, v)}
    if colour is not None:
        new_cols[ekey(u, w)] = colour
        new_cols[ekey(w, v)] = colour
    return c.replaced(
        vertex_count=w + 1,
        triangles=list(c.triangles) + [(v, u, w)],
        coloured_edges=new_coloured,
        edge_colours=new_cols,
    )


def shelling_merge_edges(c: OpenClosedComplex, vertex: int) -> OpenClosedComplex:
    """Two coloured edges -> one: remove a boundary vertex spanning one triangle."""
    w = vertex
    incident = [idx for idx, t in enumerate(c.triangles) if w in t]
    if len(incident) != 1:
        raise NotApplicableError(f"vertex {w} lies in {len(incident)} triangles, need 1")
    tri = c.triangles[incident[0]]
    others = [x for x in tri if x != w]
    u, v = others
    e1, e2 = ekey(u, w), ekey(w, v)
    if e1 not in c.coloured_edges or e2 not in c.coloured_edges:
        raise NotApplicableError("both boundary edges at the vertex must be coloured")
    if c.edge_colours.get(e1) != c.edge_colours.get(e2):
        raise NotApplicableError("edges carry different brane colours")
    inner = ekey(u, v)
    if len(c.edge_triangles().get(inner, ())) != 2:
        raise NotApplicableError("opposite edge is not interior")
    colour = c.edge_colours.get(e1)
    new_cols = {k: col for k, col in c.edge_colours.items() if k not in (e1, e2)}
    if colour is not None:
        new_cols[inner] = colour
    new_coloured = set(c.coloured_edges) - {e1, e2} | {inner}
    new_tris = [t for idx, t in enumerate(c.triangles) if idx != incident[0]]
    vmap = {x: (x if x < w else x - 1) for x in range(c.vertex_count)}
    vmap[w] = -1
    return c.replaced(
        triangles=new_tris, coloured_edges=new_coloured, edge_colours=new_cols
    ).relabelled(vmap, c.vertex_count - 1)


def shelling_open_vertex(c: OpenClosedComplex, edge) -> OpenClosedComplex:
    """Remove the triangle under a coloured edge, pushing its interior apex out."""
    e, t_idx = _coloured_boundary_edge(c, edge)
    tri = c.triangles[t_idx]
    w = next(x for x in tri if x not in e)
    if w in c.boundary_vertex_set():
        raise NotApplicableError("apex is already on the boundary")
    u, v = e
    for x in (u, v):
        if len([idx for idx, t in enumerate(c.triangles) if x in t]) < 2:
            raise NotApplicableError(f"vertex {x} would be orphaned")
    colour = c.edge_colours.get(e)
    new_cols = {k: col for k, col in c.edge_colours.items() if k != e}
    new_coloured = set(c.coloured_edges) - {e} | {ekey(u, w), ekey(w, v)}
    if colour is not None:
        new_cols[ekey(u, w)] = colour
        new_cols[ekey(w, v)] = colour
    new_tris = [t for idx, t in enumerate(c.triangles) if idx != t_idx]
    return c.replaced(triangles=new_tris, coloured_edges=new_coloured, edge_colours=new_cols)


def shelling_close_vertex(c: OpenClosedComplex, vertex: int) -> OpenClosedComplex:
    """Fill the notch at a boundary vertex with two coloured edges, making it interior."""
    w = vertex
    bedges = [e for e in c.boundary_edges() if w in e]
    if len(bedges) != 2:
        raise NotApplicableError(f"vertex {w} does not lie on exactly two boundary edges")
    e1, e2 = bedges
    if e1 not in c.coloured_edges or e2 not in c.coloured_edges:
        raise NotApplicableError("both boundary edges at the vertex must be coloured")
    if c.edge_colours.get(e1) != c.edge_colours.get(e2):
        raise NotApplicableError("edges carry different brane colours")
    d1 = _boundary_direction(c, e1)
    d2 = _boundary_direction(c, e2)
    # boundary runs ... u -> w -> v ...
    if d1[1] == w and d2[0] == w:
        u, v = d1[0], d2[1]
    elif d2[1] == w and d1[0] == w:
        u, v = d2[0], d1[1]
    else:
        raise NotApplicableError("boundary does not pass through the vertex as a chain")
    if u == v or ekey(u, v) in c.edge_triangles():
        raise NotApplicableError("closing edge already present")
    colour = c.edge_colours.get(e1)
    new_cols = {k: col for k, col in c.edge_colours.items() if k not in (e1, e2)}
    new_coloured = set(c.coloured_edges) - {e1, e2} | {ekey(u, v)}
    if colour is not None:
        new_cols[ekey(u, v)] = colour
    return c.replaced(
        triangles=list(c.triangles) + [(w, u, v)],
        coloured_edges=new_coloured,
        edge_colours=new_cols,
    )


_SHELLINGS = {
    "split_edge": shelling_split_edge,
    "merge_edges": shelling_merge_edges,
    "open_vertex": shelling_open_vertex,
    "close_vertex": shelling_close_vertex,
}


def shelling_type2(c: OpenClosedComplex, kind: str, site) -> OpenClosedComplex:
    """Dispatch one of the four coloured elementary shellings by name."""
    if kind not in _SHELLINGS:
        raise NotApplicableError(f"unknown type-2 shelling {kind!r}")
    return _SHELLINGS[kind](c, site)


# -- seeded fuzz driver ---------------------------------------------------------------


def applicable_moves(c: OpenClosedComplex):
    """Deterministically ordered list of applicable local moves."""
    moves = []
    et = c.edge_triangles()
    boundary_vs = c.boundary_vertex_set()
    tri_sets = {frozenset(t) for t in c.triangles}

    for e in c.interior_edges():
        occ = _directed_occurrence(c, e)
        if len(occ) != 2:
            continue
        (_, _, x), (_, _, y) = occ
        if x != y and ekey(x, y) not in et:
            moves.append(("flip", e))
    for idx in range(len(c.triangles)):
        moves.append(("split", idx))

    deg = {}
    for t in c.triangles:
        for v in t:
            deg[v] = deg.get(v, 0) + 1
    for v in range(c.vertex_count):
        if v in boundary_vs or deg.get(v) != 3:
            continue
        incident = [t for t in c.triangles if v in t]
        opp = {}
        for t in incident:
            a, b, cc = t
            for (x, y, z) in ((a, b, cc), (b, cc, a), (cc, a, b)):
                if z == v:
                    opp[x] = y
        start = min(opp)
        cyc = (start, opp.get(start), opp.get(opp.get(start)))
        if None in cyc or len(set(cyc)) != 3 or frozenset(cyc) in tri_sets:
            continue
        moves.append(("merge", v))

    for e in sorted(c.coloured_edges):
        moves.append(("shell_split", e))
        tri = c.triangles[et[e][0]]
        w = next(x for x in tri if x not in e)
        if w not in boundary_vs and all(deg.get(x, 0) >= 2 for x in e):
            moves.append(("shell_open", e))
    for v in sorted(boundary_vs):
        b_at_v = [e for e in c.boundary_edges() if v in e]
        if len(b_at_v) != 2 or not all(e in c.coloured_edges for e in b_at_v):
            continue
        if c.edge_colours.get(b_at_v[0]) != c.edge_colours.get(b_at_v[1]):
            continue
        if deg.get(v) == 1:
            inner = ekey(*[x for x in set().union(*b_at_v) if x != v])
            if len(et.get(inner, ())) == 2:
                moves.append(("shell_merge", v))
        d1 = _boundary_direction(c, b_at_v[0])
        d2 = _boundary_direction(c, b_at_v[1])
        if d1[1] == v and d2[0] == v:
            u, w2 = d1[0], d2[1]
        elif d2[1] == v and d1[0] == v:
            u, w2 = d2[0], d1[1]
        else:
            continue
        if u != w2 and ekey(u, w2) not in et:
            moves.append(("shell_close", v))
    return moves


_MOVE_FUNCS = {
    "flip": pachner_22,
    "split": pachner_13,
    "merge": pachner_31,
    "shell_split": shelling_split_edge,
    "shell_merge": shelling_merge_edges,
    "shell_open": shelling_open_vertex,
    "shell_close": shelling_close_vertex,
}


def random_moves(c: OpenClosedComplex, seed: int, n: int) -> OpenClosedComplex:
    """Apply ``n`` uniformly chosen applicable moves with a seeded PRNG."""
    rng = random.Random(seed)
    cur = c
    for _ in range(n):
        moves = applicable_moves(cur)
        if not moves:
            break
        kind, site = moves[rng.randrange(len(moves))]
        try:
            cur = _MOVE_FUNCS[kind](cur, site)
        except NotApplicableError:
            continue
    return cur

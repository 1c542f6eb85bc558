"""Bipartite incidence graphs over finite projective spaces.

Two constructions are built from scratch: the point/line incidence graph of
the projective plane PG(2,q) (girth 6) and the incidence graph of the
symplectic generalized quadrangle W(q) inside PG(3,q) (girth 8).  Girth-12
incidence graphs are not constructed here; they enter through
:func:`import_cage`, which validates externally supplied graph6 data.
"""

from __future__ import annotations

from .fields import FiniteField, field_make
from .graph import Graph, build_graph, metric_summary
from .io import from_graph6

__all__ = [
    "projective_plane_incidence_graph",
    "symplectic_quadrangle_incidence_graph",
    "import_cage",
    "CageValidationError",
]


def _projective_points(field: FiniteField, dim: int) -> list:
    """Normalised homogeneous coordinate tuples of PG(dim, q), sorted.

    Each 1-dimensional subspace is represented by the unique scaling whose
    first non-zero coordinate is 1; tuples are ordered by their integer
    coordinate vectors.
    """
    zero, one = field.zero, field.one
    points = []
    for lead in range(dim + 1):
        free = dim - lead
        for code in range(field.q ** free):
            coords = [zero] * lead + [one]
            c = code
            for _ in range(free):
                coords.append(field.element(c % field.q))
                c //= field.q
            points.append(tuple(coords))
    points.sort(key=lambda pt: tuple(x.value for x in pt))
    return points


def _dot(u, v, field):
    acc = field.zero
    for a, b in zip(u, v):
        acc = acc + a * b
    return acc


def projective_plane_incidence_graph(q: int) -> Graph:
    """Point/line incidence graph of PG(2,q): bipartite, (q+1)-regular, girth 6.

    Vertices 0..q^2+q are the points sorted by normalised coordinates, the
    rest are the lines (same coordinate space, dual role); point P is joined
    to line L exactly when sum_i P_i L_i = 0 in GF(q).  For q = 2 this yields
    the 14-vertex Heawood graph.
    """
    field = field_make(q)
    points = _projective_points(field, 2)
    count = len(points)
    edges = []
    for i, pt in enumerate(points):
        for j, line in enumerate(points):
            if not _dot(pt, line, field):
                edges.append((i, count + j))
    return build_graph(2 * count, edges)


def _symplectic_product(u, v):
    # B(x, y) = x0*y1 - x1*y0 + x2*y3 - x3*y2, an alternating form on GF(q)^4
    return (u[0] * v[1] - u[1] * v[0]) + (u[2] * v[3] - u[3] * v[2])


def _rref_2x4(rows, field):
    """Canonical reduced row echelon form of a rank-2 pair of coordinate rows."""
    a, b = list(rows[0]), list(rows[1])
    piv_a = next(i for i, x in enumerate(a) if x)
    inv = a[piv_a].inverse()
    a = [x * inv for x in a]
    if b[piv_a]:
        f = b[piv_a]
        b = [y - f * x for x, y in zip(a, b)]
    piv_b = next(i for i, x in enumerate(b) if x)
    inv = b[piv_b].inverse()
    b = [x * inv for x in b]
    if a[piv_b]:
        f = a[piv_b]
        a = [y - f * x for x, y in zip(b, a)]
    if piv_b < piv_a:
        a, b = b, a
    return tuple(x.value for x in a) + tuple(x.value for x in b)


def symplectic_quadrangle_incidence_graph(q: int) -> Graph:
    """Incidence graph of the generalized quadrangle W(q): girth 8.

    Vertices are the q^3+q^2+q+1 points of PG(3,q) (all of them are isotropic
    for the alternating form) followed by the (q+1)(q^2+1) totally isotropic
    lines; adjacency is containment.  For q = 2 this is the 30-vertex
    Tutte-Coxeter graph.
    """
    field = field_make(q)
    points = _projective_points(field, 3)
    index = {pt: i for i, pt in enumerate(points)}
    npts = len(points)

    def normalise(vec):
        lead = next(x for x in vec if x)
        inv = lead.inverse()
        return tuple(x * inv for x in vec)

    lines = {}
    for a in range(npts):
        pa = points[a]
        for b in range(a + 1, npts):
            pb = points[b]
            if _symplectic_product(pa, pb):
                continue
            key = _rref_2x4((pa, pb), field)
            if key in lines:
                continue
            span = {b}
            for t in field.elements():
                span.add(index[normalise(tuple(x + t * y for x, y in zip(pa, pb)))])
            lines[key] = tuple(sorted(span))
    line_list = sorted(lines.values())
    expected = (q + 1) * (q * q + 1)
    if len(line_list) != expected:
        raise RuntimeError(
            f"W({q}) construction found {len(line_list)} totally isotropic lines, "
            f"expected {expected}"
        )
    edges = []
    for j, line in enumerate(line_list):
        for p in line:
            edges.append((p, npts + j))
    return build_graph(npts + len(line_list), edges)


class CageValidationError(ValueError):
    """Imported graph failed the connectivity/degree/girth validation."""

    def __init__(self, message, *, connected=None, min_degree=None, girth=None):
        super().__init__(message)
        self.connected = connected
        self.min_degree = min_degree
        self.girth = girth


def import_cage(data, expected_delta: int, expected_girth: int) -> Graph:
    """Decode graph6 data and validate it as a usable high-girth base graph.

    The graph must be connected with minimum degree >= expected_delta and
    girth >= expected_girth; otherwise a :class:`CageValidationError` carrying
    the measured quantities is raised.
    """
    G = from_graph6(data)
    ms = metric_summary(G)
    connected = ms.radius is not None
    if not connected or ms.min_degree < expected_delta or ms.girth < expected_girth:
        raise CageValidationError(
            f"imported graph rejected: connected={connected}, "
            f"min_degree={ms.min_degree} (expected >= {expected_delta}), "
            f"girth={ms.girth} (expected >= {expected_girth})",
            connected=connected,
            min_degree=ms.min_degree,
            girth=ms.girth,
        )
    return G

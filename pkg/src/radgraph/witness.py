"""Witness-set machinery: vertex collections whose pairwise distance
structure forces lower bounds on the host graph's order.

Three witness flavours are checked here.  A GENERAL_2K set may only contain
pairs that are adjacent or at distance >= 2k-1 (girth >= 2k); it forces
n >= |T| d (d-1)^(k-2), plus one more when |T| is odd.  A NO_DISTANCE_2 set
in a triangle-free graph forbids pairs at distance exactly two and forces
n >= 2 ceil(d |T| / 2).  A DOUBLE_CYCLE set U of size 2r whose distance-2
auxiliary graph is two disjoint r-cycles forces n >= 2 ceil(r d / 2).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .bounds import BoundReport
from .graph import (
    UNREACHABLE,
    Graph,
    bfs,
    metric_summary,
    sphere,
)

__all__ = [
    "WitnessKind",
    "WitnessSet",
    "WitnessValidationError",
    "GeodesicObservationReport",
    "check_witness_general",
    "check_witness_triangle_free",
    "check_witness_two_cycles",
    "find_witness",
    "easycases_pattern",
    "easycases_configuration",
    "check_easycases_instantiation",
    "upper_bound_witness_pattern",
    "validate_geodesic_observations",
]


class WitnessKind(Enum):
    GENERAL_2K = "general-2k"
    NO_DISTANCE_2 = "no-distance-2"
    DOUBLE_CYCLE = "double-cycle"


@dataclass(frozen=True)
class WitnessSet:
    """A validated witness vertex set with its distance-condition tag."""

    vertices: tuple
    kind: WitnessKind
    k_or_r: int


class WitnessValidationError(ValueError):
    """A proposed witness set violates its distance conditions.

    ``pair`` names an offending vertex pair when one exists; ``detail``
    carries structure information for the double-cycle check.
    """

    def __init__(self, message, *, pair=None, detail=None):
        super().__init__(message)
        self.pair = pair
        self.detail = detail


def _clean_vertex_set(G, vertices):
    out = sorted(set(vertices))
    for v in out:
        if not 0 <= v < G.n:
            raise ValueError(f"vertex {v} out of range for graph on {G.n} vertices")
    return out


def _require_triangle_free(G):
    if metric_summary(G).girth <= 3:
        raise ValueError("graph contains a triangle")


def check_witness_general(G: Graph, T, k: int) -> BoundReport:
    """Check a GENERAL_2K witness and the sphere counting behind its bound.

    Validates that every non-adjacent pair of T is at distance >= 2k-1, then
    verifies the two counting facts the bound rests on -- the radius-(k-1)
    spheres around T are pairwise disjoint and each has at least
    d (d-1)^(k-2) vertices -- and finally compares n against
    |T| d (d-1)^(k-2) (+1 when |T| is odd).
    """
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    ms = metric_summary(G)
    if ms.girth < 2 * k:
        raise ValueError(f"girth {ms.girth} is below the required {2 * k}")
    T = _clean_vertex_set(G, T)
    dist = {v: bfs(G, v).dist for v in T}
    for i, u in enumerate(T):
        for w in T[i + 1:]:
            d = dist[u][w]
            if d == UNREACHABLE or d == 1 or d >= 2 * k - 1:
                continue
            raise WitnessValidationError(
                f"vertices {u} and {w} are non-adjacent at distance {d} < {2 * k - 1}",
                pair=(u, w),
            )
    delta = ms.min_degree
    size_floor = delta * (delta - 1) ** (k - 2)
    spheres = [sphere(G, v, k - 1) for v in T]
    union: set = set()
    total = 0
    for s in spheres:
        union |= s
        total += len(s)
    if total != len(union):
        raise RuntimeError("sphere disjointness failed despite valid witness")
    if any(len(s) < size_floor for s in spheres):
        raise RuntimeError("sphere size bound failed despite valid witness")
    claimed = len(T) * size_floor + (1 if len(T) % 2 else 0)
    return BoundReport(
        kind="witness-general",
        claimed=claimed,
        measured=G.n,
        passed=G.n >= claimed,
        witness=WitnessSet(tuple(T), WitnessKind.GENERAL_2K, k),
        details={
            "sphere_sizes": tuple(len(s) for s in spheres),
            "spheres_disjoint": True,
            "sphere_size_floor": size_floor,
        },
    )


def check_witness_triangle_free(G: Graph, T) -> BoundReport:
    """Check a NO_DISTANCE_2 witness in a triangle-free graph.

    No two set members may be at distance exactly 2; the forced bound is
    n >= 2 ceil(d |T| / 2).
    """
    _require_triangle_free(G)
    T = _clean_vertex_set(G, T)
    dist = {v: bfs(G, v).dist for v in T}
    for i, u in enumerate(T):
        for w in T[i + 1:]:
            if dist[u][w] == 2:
                raise WitnessValidationError(
                    f"vertices {u} and {w} are at distance exactly 2",
                    pair=(u, w),
                )
    delta = metric_summary(G).min_degree
    claimed = 2 * ((delta * len(T) + 1) // 2)
    return BoundReport(
        kind="witness-triangle-free",
        claimed=claimed,
        measured=G.n,
        passed=G.n >= claimed,
        witness=WitnessSet(tuple(T), WitnessKind.NO_DISTANCE_2, len(T)),
    )


def check_witness_two_cycles(G: Graph, U, r: int) -> BoundReport:
    """Check a DOUBLE_CYCLE witness in a triangle-free graph.

    The auxiliary graph on U joining pairs at distance exactly 2 must be a
    disjoint union of two r-cycles; the forced bound is n >= 2 ceil(r d / 2).
    """
    if r < 4:
        raise ValueError(f"need cycle length r >= 4, got {r}")
    _require_triangle_free(G)
    U = _clean_vertex_set(G, U)
    if len(U) != 2 * r:
        raise WitnessValidationError(
            f"witness has {len(U)} distinct vertices, need exactly 2r = {2 * r}"
        )
    dist = {v: bfs(G, v).dist for v in U}
    aux = {v: [] for v in U}
    for i, u in enumerate(U):
        for w in U[i + 1:]:
            if dist[u][w] == 2:
                aux[u].append(w)
                aux[w].append(u)
    comp_sizes = []
    seen: set = set()
    for v in U:
        if v in seen:
            continue
        comp = [v]
        seen.add(v)
        queue = [v]
        while queue:
            x = queue.pop()
            for y in aux[x]:
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    queue.append(y)
        comp_sizes.append(len(comp))
    degrees = sorted(len(row) for row in aux.values())
    shape_ok = (
        len(comp_sizes) == 2
        and all(size == r for size in comp_sizes)
        and degrees[0] == 2
        and degrees[-1] == 2
    )
    if not shape_ok:
        raise WitnessValidationError(
            "auxiliary distance-2 graph is not two disjoint "
            f"{r}-cycles: component sizes {sorted(comp_sizes)}, "
            f"degrees range {degrees[0]}..{degrees[-1]}",
            detail={"component_sizes": tuple(sorted(comp_sizes)), "degrees": tuple(degrees)},
        )
    delta = metric_summary(G).min_degree
    claimed = 2 * ((r * delta + 1) // 2)
    return BoundReport(
        kind="witness-two-cycles",
        claimed=claimed,
        measured=G.n,
        passed=G.n >= claimed,
        witness=WitnessSet(tuple(U), WitnessKind.DOUBLE_CYCLE, r),
    )


# -- witness search ----------------------------------------------------------


class _BudgetExhausted(Exception):
    pass


def find_witness(G: Graph, k: int, budget: int = 10**6) -> WitnessSet:
    """Best-effort maximum GENERAL_2K witness set.

    A greedy pass seeded by BFS layers around the canonical centre produces a
    valid set; a branch-and-bound refinement over the pairwise-compatibility
    graph then searches for a larger one within ``budget`` branch nodes.
    When the search completes it returns the lexicographically smallest
    maximum-size set; the result always validates under
    :func:`check_witness_general`.
    """
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    ms = metric_summary(G)
    if ms.girth < 2 * k:
        raise ValueError(f"girth {ms.girth} is below the required {2 * k}")
    n = G.n
    dist = [bfs(G, v).dist for v in range(n)]
    lo = 2 * k - 1
    compat = []
    for v in range(n):
        mask = 0
        row = dist[v]
        for u in range(n):
            if u != v and (row[u] == 1 or row[u] == UNREACHABLE or row[u] >= lo):
                mask |= 1 << u
        compat.append(mask)

    center = ms.centers[0] if ms.centers else 0
    order = sorted(range(n), key=lambda v: (dist[center][v], v))
    greedy: list = []
    greedy_mask = (1 << n) - 1
    for v in order:
        if (greedy_mask >> v) & 1:
            greedy.append(v)
            greedy_mask &= compat[v]
    greedy.sort()

    best: list = []
    nodes = budget

    def bb(chosen, cand):
        nonlocal best, nodes
        if nodes <= 0:
            raise _BudgetExhausted
        nodes -= 1
        if not cand:
            if len(chosen) > len(best):
                best = list(chosen)
            return
        if len(chosen) + cand.bit_count() <= len(best):
            return
        u = (cand & -cand).bit_length() - 1
        chosen.append(u)
        bb(chosen, cand & compat[u])
        chosen.pop()
        bb(chosen, cand & ~(1 << u))

    try:
        if budget > 0:
            bb([], (1 << n) - 1)
    except _BudgetExhausted:
        pass

    pick = min((greedy, best), key=lambda s: (-len(s), s))
    result = WitnessSet(tuple(pick), WitnessKind.GENERAL_2K, k)
    report = check_witness_general(G, result.vertices, k)
    if report.witness.vertices != result.vertices:
        raise RuntimeError("witness search produced an inconsistent set")
    return result


# -- geodesic index patterns ---------------------------------------------------


def _pairs(start, count):
    out = []
    for i in range(count):
        out.append(start + 4 * i)
        out.append(start + 4 * i + 1)
    return out


# Index patterns for a distance-2-avoiding collection along two geodesics,
# keyed by (r mod 4, t).  Each side is (leading singles, first pair start,
# pair count offset added to k = r//4, trailing offsets added to 4k).
_EASYCASES_TABLE = {
    (0, 0): (((), 3, 0, ()), ((), 3, 0, ())),
    (0, 1): (((0,), 3, 0, ()), ((), 3, -1, (-1,))),
    (0, 2): (((), 3, 0, ()), ((), 1, 0, ())),
    (0, 3): (((0,), 3, 0, ()), ((1,), 4, -1, ())),
    (1, 0): (((0,), 4, 0, ()), ((), 4, 0, ())),
    (1, 1): (((0,), 3, 0, ()), ((), 3, 0, ())),
    (1, 2): (((0, 1), 4, 0, ()), ((), 3, -1, (-1,))),
    (2, 0): (((0, 1), 5, 0, ()), ((), 5, 0, ())),
    (2, 1): (((0, 1), 4, 0, ()), ((), 4, 0, ())),
    (2, 2): (((0, 1), 5, 0, ()), ((), 3, 0, ())),
    (2, 3): (((1, 2), 5, 0, ()), ((), 2, 0, ())),
}


def _materialise_side(side, k):
    singles, pair_start, count_off, tail_offs = side
    idx = list(singles)
    idx.extend(_pairs(pair_start, k + count_off))
    idx.extend(4 * k + off for off in tail_offs)
    return tuple(idx)


def easycases_pattern(r: int, t: int) -> tuple:
    """Index pattern (unprimed, primed) for a size-r distance-2-avoiding
    collection along a geodesic pair with shift t.

    Defined for r >= 4 with (r mod 4, t) in the eleven supported rows:
    r = 0, 2 (mod 4) with t in 0..3 and r = 1 (mod 4) with t in 0..2.  The
    remaining configurations need different machinery and raise ValueError.
    """
    if r < 4:
        raise ValueError(f"patterns are defined for r >= 4, got {r}")
    key = (r % 4, t)
    if key not in _EASYCASES_TABLE:
        raise ValueError(
            f"no pattern for r = {r} (mod 4 = {r % 4}) with shift t = {t}"
        )
    k = r // 4
    unprimed_side, primed_side = _EASYCASES_TABLE[key]
    unprimed = _materialise_side(unprimed_side, k)
    primed = _materialise_side(primed_side, k)
    return unprimed, primed


def _check_paths(G, path, vprime_path):
    if not path or not vprime_path:
        raise ValueError("paths must be non-empty")
    if path[0] != vprime_path[0]:
        raise ValueError("both paths must start at the same centre vertex")
    dist0 = bfs(G, path[0]).dist
    for name, p in (("path", path), ("vprime_path", vprime_path)):
        for i in range(len(p) - 1):
            if not G.has_edge(p[i], p[i + 1]):
                raise ValueError(f"{name} is not a path: {p[i]} !~ {p[i + 1]}")
        for i, v in enumerate(p):
            if dist0[v] != i:
                raise ValueError(
                    f"{name} is not a shortest path: d(v0, {v}) = {dist0[v]} != {i}"
                )
    return dist0


def check_easycases_instantiation(G: Graph, path, vprime_path) -> BoundReport:
    """Instantiate the pattern for (len(path)-1, shift) on two geodesics and
    run the triangle-free witness check on the resulting collection.

    Raises WitnessValidationError when the instantiated vertices are not r
    distinct vertices (a collapsed pattern) and propagates pattern-domain or
    distance-condition failures.
    """
    _check_paths(G, path, vprime_path)
    r = len(path) - 1
    t = r - (len(vprime_path) - 1)
    if t < 0:
        raise ValueError("second path is longer than the first")
    unprimed, primed = easycases_pattern(r, t)
    verts = [path[i] for i in unprimed] + [vprime_path[j] for j in primed]
    if len(set(verts)) != r:
        raise WitnessValidationError(
            f"pattern instantiation produced {len(set(verts))} distinct vertices, expected {r}"
        )
    return check_witness_triangle_free(G, verts)


def _geodesic_from(G, dist, target):
    path = [target]
    cur = target
    while dist[cur] > 0:
        cur = min(w for w in G.adj[cur] if dist[w] == dist[cur] - 1)
        path.append(cur)
    path.reverse()
    return path


def easycases_configuration(G: Graph) -> tuple:
    """Select the geodesic pair (path, vprime_path) the pattern rows expect.

    The centre v0 is the centre with the fewest vertices at distance exactly
    r (ties to the lowest index); v_r is the lowest farthest vertex.  The far
    endpoint v' is the lowest vertex with d(v_3, v') >= r+1 when v_3 is not a
    centre, otherwise the lowest vertex with d(v_3, v') = r and d(v0, v') < r.
    """
    ms = metric_summary(G)
    if ms.radius is None:
        raise ValueError("graph must be connected")
    r = ms.radius
    if r < 4:
        raise ValueError(f"configuration needs radius >= 4, got {r}")
    best = None
    for c in ms.centers:
        count = sum(1 for d in bfs(G, c).dist if d == r)
        if best is None or (count, c) < best[:2]:
            best = (count, c)
    v0 = best[1]
    dist0 = bfs(G, v0).dist
    target = min(v for v in range(G.n) if dist0[v] == r)
    path = _geodesic_from(G, dist0, target)
    v3 = path[3]
    dist3 = bfs(G, v3).dist
    if max(dist3) > r:
        vprime = min(v for v in range(G.n) if dist3[v] > r)
    else:
        candidates = [v for v in range(G.n) if dist3[v] == r and dist0[v] < r]
        if not candidates:
            raise ValueError("no admissible far vertex for this centre")
        vprime = min(candidates)
    vprime_path = _geodesic_from(G, dist0, vprime)
    return tuple(path), tuple(vprime_path)


def upper_bound_witness_pattern(r: int, k: int, t: int) -> tuple:
    """Index pattern (unprimed, primed) spread at stride 2k along a geodesic
    pair, used at girth >= 2k.

    The four constituent families have sizes q+1, q, q-1, q-2 for
    q = floor(r / 2k), so the total is at least 2r/k - 6.  Requires r >= 2k
    and a shift 0 <= t <= 2k.
    """
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    if r < 2 * k:
        raise ValueError(f"pattern needs r >= 2k = {2 * k}, got {r}")
    if not 0 <= t <= 2 * k:
        raise ValueError(f"shift must be within 0..{2 * k}, got {t}")
    q = r // (2 * k)
    unprimed = sorted(
        {2 * k * i for i in range(q + 1)} | {2 * k * i + 1 for i in range(q)}
    )
    primed = sorted(
        {2 * k * i for i in range(1, q)} | {2 * k * i + 1 for i in range(1, q - 1)}
    )
    return tuple(unprimed), tuple(primed)


# -- geodesic observations -----------------------------------------------------


@dataclass(frozen=True)
class GeodesicObservationReport:
    """Outcome of the three geodesic-pair observations.

    ``precondition_holds`` records d(v_m, v') >= r.  The observations state:
    the shift obeys t <= m; d(v_i, v'_j) respects the two displayed lower
    bounds plus |i - j|; and the two geodesics share no vertices beyond the
    permitted prefix coincidences.
    """

    r: int
    t: int
    m: int
    far_distance: int
    precondition_holds: bool
    shift_bound_holds: bool
    distance_bounds_hold: bool
    distinctness_holds: bool
    violations: tuple
    passed: bool


def validate_geodesic_observations(
    G: Graph, v0: int, path, m: int, vprime_path
) -> GeodesicObservationReport:
    """Evaluate the three geodesic observations on a centre/geodesic pair.

    Structural defects (not shortest paths, v0 not a true centre, bad m)
    raise ValueError; the d(v_m, v') >= r precondition and the observations
    themselves are reported as flags so deliberate violations can be tested.
    """
    if path[0] != v0:
        raise ValueError("path must start at v0")
    dist0 = _check_paths(G, path, vprime_path)
    ms = metric_summary(G)
    if ms.radius is None:
        raise ValueError("graph must be connected")
    r = len(path) - 1
    if r != ms.radius or max(dist0) != ms.radius:
        raise ValueError(
            f"path length {r} does not match the radius {ms.radius} of a true centre"
        )
    if not 1 <= m <= r - 1:
        raise ValueError(f"m must be within 1..{r - 1}, got {m}")
    t = r - (len(vprime_path) - 1)
    vprime = vprime_path[-1]
    D = bfs(G, path[m]).dist[vprime]

    violations = []
    precondition = D >= r
    if not precondition:
        violations.append(f"d(v_{m}, v') = {D} < r = {r}")
    shift_ok = t <= m
    if not shift_ok:
        violations.append(f"shift t = {t} exceeds m = {m}")

    path_dist = [bfs(G, v).dist for v in path]
    distance_ok = True
    for i in range(r + 1):
        row = path_dist[i]
        for j, w in enumerate(vprime_path):
            d = row[w]
            if i >= m:
                lb = D + m + t + j - r - i
            else:
                lb = D + i + j + t - m - r
            lb = max(lb, abs(i - j))
            if d < lb:
                distance_ok = False
                violations.append(
                    f"d(v_{i}, v'_{j}) = {d} below the bound {lb}"
                )
    distinct_ok = True
    for i, u in enumerate(path):
        for j, w in enumerate(vprime_path):
            if u != w:
                continue
            if i != j:
                distinct_ok = False
                violations.append(f"v_{i} coincides with v'_{j}")
            elif 2 * i > m + r - t - D:
                distinct_ok = False
                violations.append(f"v_{i} coincides with v'_{i} beyond the prefix bound")
    passed = precondition and shift_ok and distance_ok and distinct_ok
    return GeodesicObservationReport(
        r=r,
        t=t,
        m=m,
        far_distance=D,
        precondition_holds=precondition,
        shift_bound_holds=shift_ok,
        distance_bounds_hold=distance_ok,
        distinctness_holds=distinct_ok,
        violations=tuple(violations),
        passed=passed,
    )

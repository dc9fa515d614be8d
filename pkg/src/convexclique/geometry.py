"""Exact planar geometry for intersection graphs of convex objects.

Everything here works over :class:`fractions.Fraction`, so tangencies are
decided exactly. Bodies are centrally symmetric convex polygons; the norm they
induce drives the translate/homothet predicates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction, str]
Point = tuple[Fraction, Fraction]
Polygon = tuple[Point, ...]

__all__ = [
    "Point",
    "Polygon",
    "ConvexBody",
    "Placement",
    "HalfPlane",
    "AxisRect",
    "Lens",
    "Scene",
    "SceneObject",
    "frac",
    "pt",
    "minkowski_norm",
    "translates_intersect",
    "homothets_intersect",
    "build_lens",
    "split_lens",
    "lens_side",
    "supporting_normals",
    "central_symmetrize",
    "minkowski_sum",
    "convex_hull",
    "clip_polygon",
    "polygon_contains",
    "convex_polygons_intersect",
    "halfplanes_intersect",
    "objects_intersect",
    "scene_to_graph",
    "vertex_objects",
]


def frac(x: Number | float) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not coordinates")
    return Fraction(x)


def pt(x, y) -> Point:
    return (frac(x), frac(y))


def add(p: Point, q: Point) -> Point:
    return (p[0] + q[0], p[1] + q[1])


def sub(p: Point, q: Point) -> Point:
    return (p[0] - q[0], p[1] - q[1])


def mul(p: Point, k) -> Point:
    return (p[0] * k, p[1] * k)


def dot(p: Point, q: Point) -> Fraction:
    return p[0] * q[0] + p[1] * q[1]


def cross(p: Point, q: Point) -> Fraction:
    return p[0] * q[1] - p[1] * q[0]


def orient(a: Point, b: Point, c: Point) -> Fraction:
    """Twice the signed area of triangle abc (positive when counter-clockwise)."""
    return cross(sub(b, a), sub(c, a))


def midpoint(p: Point, q: Point) -> Point:
    return ((p[0] + q[0]) / 2, (p[1] + q[1]) / 2)


def area2(poly: Sequence[Point]) -> Fraction:
    n = len(poly)
    return sum((cross(poly[i], poly[(i + 1) % n]) for i in range(n)), Fraction(0))


def _dedupe(points: Iterable[Point]) -> list[Point]:
    out: list[Point] = []
    for p in points:
        if not out or out[-1] != p:
            out.append(p)
    while len(out) > 1 and out[0] == out[-1]:
        out.pop()
    return out


def simplify(poly: Sequence[Point]) -> Polygon:
    """Drop repeated and collinear vertices of a convex polygon."""
    pts = _dedupe(poly)
    changed = True
    while changed and len(pts) > 2:
        changed = False
        for i in range(len(pts)):
            a, b, c = pts[i - 1], pts[i], pts[(i + 1) % len(pts)]
            if orient(a, b, c) == 0:
                del pts[i]
                changed = True
                break
    if len(pts) == 2 and pts[0] == pts[1]:
        pts = pts[:1]
    return tuple(pts)


def convex_hull(points: Iterable[Point]) -> Polygon:
    """Andrew's monotone chain; counter-clockwise, no collinear vertices."""
    pts = sorted(set((frac(p[0]), frac(p[1])) for p in points))
    if len(pts) <= 2:
        return tuple(pts)
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and orient(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and orient(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return tuple(lower[:-1] + upper[:-1])


def is_strictly_convex_ccw(poly: Sequence[Point]) -> bool:
    n = len(poly)
    if n < 3:
        return False
    return all(orient(poly[i - 1], poly[i], poly[(i + 1) % n]) > 0 for i in range(n)) and area2(poly) > 0


def polygon_contains(poly: Sequence[Point], p: Point) -> bool:
    """Closed containment test for a convex polygon given counter-clockwise.

    Degenerate inputs (a point or a segment) are handled too.
    """
    n = len(poly)
    if n == 0:
        return False
    if n == 1:
        return poly[0] == p
    if n == 2:
        a, b = poly
        if orient(a, b, p) != 0:
            return False
        return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    return all(orient(poly[i], poly[(i + 1) % n], p) >= 0 for i in range(n))


def clip_polygon(poly: Sequence[Point], normal: Point, offset) -> Polygon:
    """Intersect a convex polygon with the closed half-plane ``normal . x <= offset``.

    Sutherland-Hodgman against a single edge. The result may be degenerate
    (a segment or a single point) or empty.
    """
    out: list[Point] = []
    n = len(poly)
    if n == 0:
        return ()
    if n == 1:
        return tuple(poly) if dot(normal, poly[0]) <= offset else ()
    for i in range(n):
        cur, nxt = poly[i], poly[(i + 1) % n]
        fc = dot(normal, cur) - offset
        fn = dot(normal, nxt) - offset
        if fc <= 0:
            out.append(cur)
        if (fc < 0 < fn) or (fn < 0 < fc):
            t = fc / (fc - fn)
            out.append(add(cur, mul(sub(nxt, cur), t)))
    return simplify(out)


def _axes(poly: Sequence[Point]) -> list[Point]:
    n = len(poly)
    axes = []
    if n >= 2:
        for i in range(n):
            e = sub(poly[(i + 1) % n], poly[i])
            if e != (0, 0):
                axes.append((-e[1], e[0]))
                if n == 2:
                    axes.append(e)
    return axes


def _project(poly: Sequence[Point], axis: Point) -> tuple[Fraction, Fraction]:
    vals = [dot(axis, p) for p in poly]
    return min(vals), max(vals)


def convex_polygons_intersect(P: Sequence[Point], Q: Sequence[Point]) -> bool:
    """Separating-axis test on closed convex polygons (degenerate ones allowed)."""
    if not P or not Q:
        return False
    axes = _axes(P) + _axes(Q)
    gap = sub(Q[0], P[0])
    if gap != (0, 0):
        axes.append(gap)
    for axis in axes:
        lo1, hi1 = _project(P, axis)
        lo2, hi2 = _project(Q, axis)
        if hi1 < lo2 or hi2 < lo1:
            return False
    return True


def minkowski_sum(P: Sequence[Point], Q: Sequence[Point]) -> Polygon:
    """Minkowski sum of two convex counter-clockwise polygons by edge merging."""

    def start(poly):
        return min(range(len(poly)), key=lambda i: (poly[i][1], poly[i][0]))

    def edges(poly):
        k = start(poly)
        rot = list(poly[k:]) + list(poly[:k])
        return rot[0], [sub(rot[(i + 1) % len(rot)], rot[i]) for i in range(len(rot))]

    p0, ep = edges(P)
    q0, eq = edges(Q)
    cur = add(p0, q0)
    out = [cur]
    i = j = 0
    while i < len(ep) or j < len(eq):
        if j == len(eq):
            e = ep[i]
            i += 1
        elif i == len(ep):
            e = eq[j]
            j += 1
        else:
            c = cross(ep[i], eq[j])
            if c > 0:
                e = ep[i]
                i += 1
            elif c < 0:
                e = eq[j]
                j += 1
            else:
                e = add(ep[i], eq[j])
                i += 1
                j += 1
        cur = add(cur, e)
        out.append(cur)
    return simplify(out)


@dataclass(frozen=True)
class ConvexBody:
    """A centrally symmetric convex polygon ``S`` with the origin as centre.

    ``vertices`` must be counter-clockwise with ``vertices[i + k] == -vertices[i]``
    for ``2k`` vertices. The body induces the norm
    ``||x|| = inf {lam > 0 : x in lam S}``.
    """

    vertices: Polygon
    _facets: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        verts = tuple(pt(*v) for v in self.vertices)
        object.__setattr__(self, "vertices", verts)
        n = len(verts)
        if n < 4 or n % 2:
            raise ValueError("a centrally symmetric polygon needs an even number (>= 4) of vertices")
        if not is_strictly_convex_ccw(verts):
            raise ValueError("body must be strictly convex and counter-clockwise")
        k = n // 2
        for i in range(k):
            if verts[i + k] != mul(verts[i], -1):
                raise ValueError("body is not centrally symmetric about the origin")
        facets = []
        for i in range(n):
            a, b = verts[i], verts[(i + 1) % n]
            normal = (b[1] - a[1], a[0] - b[0])
            facets.append((normal, dot(normal, a)))
        object.__setattr__(self, "_facets", tuple(facets))

    @classmethod
    def from_points(cls, points: Iterable) -> "ConvexBody":
        return cls(convex_hull(pt(*p) for p in points))

    @classmethod
    def square(cls, half_side: Number = 1) -> "ConvexBody":
        s = frac(half_side)
        return cls(((s, -s), (s, s), (-s, s), (-s, -s)))

    @classmethod
    def regular(cls, k: int = 64, max_denominator: int = 10**4) -> "ConvexBody":
        """Rational regular ``2k``-gon inscribed in the unit circle.

        Vertices are exact rational points of the unit circle obtained from
        rational approximations of ``tan(theta / 2)``.
        """
        if k < 2:
            raise ValueError("k must be at least 2")
        half = []
        for i in range(k):
            theta = math.pi * i / k
            if i == 0:
                half.append((Fraction(1), Fraction(0)))
                continue
            t = Fraction(math.tan(theta / 2)).limit_denominator(max_denominator)
            den = 1 + t * t
            half.append(((1 - t * t) / den, 2 * t / den))
        return cls(tuple(half) + tuple(mul(p, -1) for p in half))

    @property
    def facets(self) -> tuple:
        """Pairs ``(normal, offset)`` with ``S = {x : normal . x <= offset}``."""
        return self._facets

    def norm(self, v) -> Fraction:
        v = pt(*v)
        if v == (0, 0):
            return Fraction(0)
        return max(dot(n, v) / off for n, off in self._facets)

    def within(self, v, bound) -> bool:
        """``norm(v) <= bound`` without forming the quotient."""
        bound = frac(bound)
        v = pt(*v)
        return all(dot(n, v) <= bound * off for n, off in self._facets)

    def support(self, direction) -> Fraction:
        return max(dot(direction, p) for p in self.vertices)

    def placed(self, center, scale=1) -> Polygon:
        center = pt(*center)
        scale = frac(scale)
        return tuple(add(center, mul(p, scale)) for p in self.vertices)


def minkowski_norm(body: ConvexBody, v) -> Fraction:
    return body.norm(v)


@dataclass(frozen=True)
class Placement:
    center: Point
    scale: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "center", pt(*self.center))
        object.__setattr__(self, "scale", frac(self.scale))
        if self.scale <= 0:
            raise ValueError("scale must be positive")


def translates_intersect(body: ConvexBody, p1: Placement, p2: Placement) -> bool:
    if p1.scale != 1 or p2.scale != 1:
        raise ValueError("translates must have unit scale")
    return body.within(sub(p1.center, p2.center), 2)


def homothets_intersect(body: ConvexBody, p1: Placement, p2: Placement) -> bool:
    return body.within(sub(p1.center, p2.center), p1.scale + p2.scale)


@dataclass(frozen=True)
class HalfPlane:
    """Closed half-plane bounded by the line through ``a`` and ``b``.

    ``side="upper"`` keeps the points to the left of the directed line a -> b
    (above it when ``a`` has the smaller x-coordinate), ``"lower"`` the right.
    """

    a: Point
    b: Point
    side: str = "upper"

    def __post_init__(self):
        object.__setattr__(self, "a", pt(*self.a))
        object.__setattr__(self, "b", pt(*self.b))
        if self.a == self.b:
            raise ValueError("half-plane boundary needs two distinct points")
        if self.side not in ("upper", "lower"):
            raise ValueError(f"unknown side {self.side!r}")

    @property
    def inward_normal(self) -> Point:
        d = sub(self.b, self.a)
        n = (-d[1], d[0])
        return n if self.side == "upper" else mul(n, -1)

    @property
    def offset(self) -> Fraction:
        """The half-plane is ``{x : inward_normal . x >= offset}``."""
        return dot(self.inward_normal, self.a)

    def contains(self, p) -> bool:
        return dot(self.inward_normal, pt(*p)) >= self.offset

    def slope(self) -> Fraction | None:
        d = sub(self.b, self.a)
        return None if d[0] == 0 else d[1] / d[0]


def halfplanes_intersect(h1: HalfPlane, h2: HalfPlane) -> bool:
    n1, n2 = h1.inward_normal, h2.inward_normal
    if cross(n1, n2) != 0 or dot(n1, n2) > 0:
        return True
    # opposite facing parallel half-planes: n2 = -t n1 with t > 0
    t = -dot(n1, n2) / dot(n1, n1)
    return h1.offset <= -h2.offset / t


@dataclass(frozen=True)
class AxisRect:
    x_lo: Fraction
    x_hi: Fraction
    y_lo: Fraction
    y_hi: Fraction
    allow_degenerate: bool = field(default=False, compare=False)

    def __post_init__(self):
        for name in ("x_lo", "x_hi", "y_lo", "y_hi"):
            object.__setattr__(self, name, frac(getattr(self, name)))
        if self.x_lo > self.x_hi or self.y_lo > self.y_hi:
            raise ValueError("rectangle bounds are inverted")
        if not self.allow_degenerate and (self.x_lo == self.x_hi or self.y_lo == self.y_hi):
            raise ValueError("degenerate rectangle (pass allow_degenerate=True to permit)")

    @classmethod
    def from_corners(cls, top_left, bottom_right) -> "AxisRect":
        tl, br = pt(*top_left), pt(*bottom_right)
        return cls(tl[0], br[0], br[1], tl[1])

    def contains(self, p) -> bool:
        x, y = pt(*p)
        return self.x_lo <= x <= self.x_hi and self.y_lo <= y <= self.y_hi

    def intersects(self, other: "AxisRect") -> bool:
        return (
            self.x_lo <= other.x_hi
            and other.x_lo <= self.x_hi
            and self.y_lo <= other.y_hi
            and other.y_lo <= self.y_hi
        )

    def polygon(self) -> Polygon:
        return simplify(
            [(self.x_lo, self.y_lo), (self.x_hi, self.y_lo), (self.x_hi, self.y_hi), (self.x_lo, self.y_hi)]
        )


@dataclass(frozen=True)
class Lens:
    c1: Point
    c2: Point
    d: Fraction
    region: Polygon
    center: Point
    degenerate: bool = False


def build_lens(body: ConvexBody, c1, c2) -> Lens:
    """``D = (c1 + dS) & (c2 + dS)`` with ``d = ||c1 - c2||``, as an exact polygon."""
    c1, c2 = pt(*c1), pt(*c2)
    d = body.norm(sub(c1, c2))
    center = midpoint(c1, c2)
    if d == 0:
        return Lens(c1, c2, d, (c1,), center, degenerate=True)
    if d > 2:
        raise ValueError(f"centres are at distance {d} > 2; the translates do not intersect")
    region = body.placed(c1, d)
    for normal, off in body.facets:
        region = clip_polygon(region, normal, dot(normal, c2) + d * off)
    return Lens(c1, c2, d, region, center)


def _below_direction(c1: Point, c2: Point) -> Point:
    """Direction of the line through c1, c2 such that 'below' is its right side.

    For a vertical line, 'below' means the side with smaller x.
    """
    d = sub(c2, c1)
    if d[0] < 0 or (d[0] == 0 and d[1] > 0):
        d = mul(d, -1)
    return d


def lens_side(lens: Lens, p) -> int:
    """1 if ``p`` lies strictly below the line through the centres, else 2."""
    d = _below_direction(lens.c1, lens.c2)
    return 1 if cross(d, sub(pt(*p), lens.c1)) < 0 else 2


def split_lens(lens: Lens) -> tuple[Polygon, Polygon]:
    """Cut ``D`` along the line through its two centres into closed halves (D1, D2).

    D1 is the part below the line, D2 the part not below; both polygons are
    closed so they share the chord.
    """
    if lens.degenerate:
        raise ValueError("cannot split a degenerate lens")
    d = _below_direction(lens.c1, lens.c2)
    normal = (-d[1], d[0])  # points to the "not below" side
    off = dot(normal, lens.c1)
    lower = clip_polygon(lens.region, normal, off)
    upper = clip_polygon(lens.region, mul(normal, -1), -off)
    return lower, upper


def supporting_normals(poly: Sequence[Point], p: Point) -> list[Point]:
    """Outward normals of the polygon edges that contain boundary point ``p``."""
    n = len(poly)
    out = []
    for i in range(n):
        a, b = poly[i], poly[(i + 1) % n]
        if orient(a, b, p) == 0 and polygon_contains((a, b), p):
            out.append((b[1] - a[1], a[0] - b[0]))
    return out


def central_symmetrize(poly: Iterable) -> ConvexBody:
    """The difference body ``(P + (-P)) / 2``, centred at the origin."""
    P = convex_hull(pt(*p) for p in poly)
    if len(P) < 3 or area2(P) == 0:
        raise ValueError("input polygon is degenerate")
    neg = tuple(mul(p, -1) for p in P)
    neg = convex_hull(neg)
    S = minkowski_sum(P, neg)
    S = tuple(mul(p, Fraction(1, 2)) for p in S)
    # rotate so that the symmetric partner of vertices[i] sits at i + k
    k = len(S) // 2
    start = min(range(len(S)), key=lambda i: (S[i][1], S[i][0]))
    S = S[start:] + S[:start]
    assert all(S[i + k] == mul(S[i], -1) for i in range(k))
    return ConvexBody(S)


# --------------------------------------------------------------------- scenes

KINDS = ("translate", "homothet", "halfplane", "rect")


@dataclass(frozen=True)
class SceneObject:
    kind: str
    shape: object
    label: str = ""
    weight: int = 1
    body: ConvexBody | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown object kind {self.kind!r}")
        if not isinstance(self.weight, int) or self.weight < 1:
            raise ValueError("weight must be a positive integer")
        expected = {"translate": Placement, "homothet": Placement, "halfplane": HalfPlane, "rect": AxisRect}
        if not isinstance(self.shape, expected[self.kind]):
            raise TypeError(f"{self.kind} objects need a {expected[self.kind].__name__}")
        if self.kind == "translate" and self.shape.scale != 1:
            raise ValueError("translate objects must have unit scale")


@dataclass(frozen=True)
class Scene:
    body: ConvexBody | None
    objects: tuple[SceneObject, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(self.objects))
        for obj in self.objects:
            if obj.kind in ("translate", "homothet") and obj.body is None and self.body is None:
                raise ValueError("placement objects need a body")

    def body_of(self, obj: SceneObject) -> ConvexBody | None:
        return obj.body if obj.body is not None else self.body


def _region(scene: Scene, obj: SceneObject):
    if obj.kind in ("translate", "homothet"):
        return scene.body_of(obj).placed(obj.shape.center, obj.shape.scale)
    if obj.kind == "rect":
        return obj.shape.polygon()
    return obj.shape


def objects_intersect(scene: Scene, o1: SceneObject, o2: SceneObject) -> bool:
    placements = ("translate", "homothet")
    if o1.kind in placements and o2.kind in placements and scene.body_of(o1) == scene.body_of(o2):
        return homothets_intersect(scene.body_of(o1), o1.shape, o2.shape)
    if o1.kind == "rect" and o2.kind == "rect":
        return o1.shape.intersects(o2.shape)
    r1, r2 = _region(scene, o1), _region(scene, o2)
    if isinstance(r1, HalfPlane) and isinstance(r2, HalfPlane):
        return halfplanes_intersect(r1, r2)
    if isinstance(r1, HalfPlane):
        return any(r1.contains(p) for p in r2)
    if isinstance(r2, HalfPlane):
        return any(r2.contains(p) for p in r1)
    return convex_polygons_intersect(r1, r2)


def vertex_objects(scene: Scene) -> list[int]:
    """Object index of every graph vertex once weights are expanded into copies."""
    out = []
    for idx, obj in enumerate(scene.objects):
        out.extend([idx] * obj.weight)
    return out


def scene_to_graph(scene: Scene):
    """Intersection graph of a scene; weighted objects become true twins."""
    from .graph import IntersectionGraph

    owners = vertex_objects(scene)
    labels = []
    for obj in scene.objects:
        if obj.weight == 1:
            labels.append(obj.label)
        else:
            labels.extend(f"{obj.label}#{c}" for c in range(obj.weight))
    m = len(scene.objects)
    hit = [[False] * m for _ in range(m)]
    for i in range(m):
        hit[i][i] = True
        for j in range(i + 1, m):
            hit[i][j] = hit[j][i] = objects_intersect(scene, scene.objects[i], scene.objects[j])
    n = len(owners)
    adj = [0] * n
    for u in range(n):
        row = hit[owners[u]]
        mask = 0
        for v in range(n):
            if v != u and row[owners[v]]:
                mask |= 1 << v
        adj[u] = mask
    return IntersectionGraph(n, tuple(adj), tuple(labels))

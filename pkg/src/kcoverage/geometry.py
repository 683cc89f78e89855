"""2-D convex geometry: half-plane clipping, polygon measures, enclosing circles.

Points are plain ``(2,)`` float arrays (or anything array-like).  Polygons
are immutable counter-clockwise vertex lists.  ``clip_halfplane`` returns
``None`` for an empty intersection; emptiness is a value here, not an error.
"""

import numpy as np

from .errors import DegenerateGenerators
from .rng import stream

# Minimum allowed generator separation; bisectors are undefined below this.
MIN_SEPARATION = 1e-9
# Consecutive polygon vertices closer than this (relative to polygon scale)
# are merged after clipping.
VERTEX_MERGE_TOL = 1e-12
# Containment / equidistance checks.
GEOM_TOL = 1e-9


class HalfPlane:
    """The closed half-plane ``{q : normal . q <= offset}`` with unit normal."""

    __slots__ = ("normal", "offset")

    def __init__(self, normal, offset):
        normal = np.asarray(normal, dtype=float)
        norm = float(np.hypot(normal[0], normal[1]))
        if norm < MIN_SEPARATION:
            raise ValueError("half-plane normal must be nonzero")
        self.normal = normal / norm
        self.normal.flags.writeable = False
        self.offset = float(offset) / norm

    def signed_distance(self, points):
        """Positive inside the half-plane, negative outside."""
        pts = np.asarray(points, dtype=float)
        return self.offset - pts @ self.normal

    def contains(self, point, tol=GEOM_TOL):
        return bool(self.signed_distance(point) >= -tol)

    def __repr__(self):
        return f"HalfPlane(normal={self.normal.tolist()}, offset={self.offset})"


class ConvexPolygon:
    """Immutable convex polygon with counter-clockwise vertices.

    The constructor normalizes orientation (clockwise input is reversed)
    and validates convexity and minimum vertex spacing.  Area, centroid
    and the polar second moment come from the shoelace (Green's theorem)
    formulas and are cached.
    """

    __slots__ = ("vertices", "_moments")

    def __init__(self, vertices, validate=True):
        v = np.array(vertices, dtype=float)
        if v.ndim != 2 or v.shape[1] != 2 or v.shape[0] < 3:
            raise ValueError("a convex polygon needs at least 3 vertices")
        if not np.all(np.isfinite(v)):
            raise ValueError("polygon vertices must be finite")
        if _signed_area(v) < 0.0:
            v = v[::-1].copy()
        self.vertices = v
        self.vertices.flags.writeable = False
        self._moments = None
        if validate:
            self._validate()

    def _validate(self):
        v = self.vertices
        scale = max(1.0, float(np.abs(v).max()))
        d = np.roll(v, -1, axis=0) - v
        if np.min(np.einsum("ij,ij->i", d, d)) < (VERTEX_MERGE_TOL * scale) ** 2:
            raise ValueError("polygon has (near-)coincident consecutive vertices")
        cross = d[:, 0] * np.roll(d[:, 1], -1) - d[:, 1] * np.roll(d[:, 0], -1)
        if np.min(cross) < -1e-12 * scale * scale:
            raise ValueError("polygon is not convex")

    def moments(self):
        """Monomial integrals ``(A, Sx, Sy, Ixx, Ixy, Iyy)`` over the polygon.

        ``A`` is the area, ``Sx = integral of x``, ``Ixx = integral of x^2``
        and so on, all about the origin (shoelace formulas).
        """
        if self._moments is None:
            v = self.vertices
            w = np.roll(v, -1, axis=0)
            x0, y0 = v[:, 0], v[:, 1]
            x1, y1 = w[:, 0], w[:, 1]
            cross = x0 * y1 - x1 * y0
            a = float(cross.sum() / 2.0)
            sx = float(((x0 + x1) * cross).sum() / 6.0)
            sy = float(((y0 + y1) * cross).sum() / 6.0)
            ixx = float(((x0 * x0 + x0 * x1 + x1 * x1) * cross).sum() / 12.0)
            iyy = float(((y0 * y0 + y0 * y1 + y1 * y1) * cross).sum() / 12.0)
            ixy = float(((2 * x0 * y0 + x0 * y1 + x1 * y0 + 2 * x1 * y1)
                         * cross).sum() / 24.0)
            self._moments = (a, sx, sy, ixx, ixy, iyy)
        return self._moments

    @property
    def area(self):
        return self.moments()[0]

    @property
    def centroid(self):
        a, sx, sy = self.moments()[:3]
        return np.array([sx / a, sy / a])

    @property
    def moment2_origin(self):
        """Integral of ``x^2 + y^2`` over the polygon."""
        m = self.moments()
        return m[3] + m[5]

    @property
    def polar_moment(self):
        """Second moment about the area centroid."""
        c = self.centroid
        return self.moment2_origin - self.area * float(c @ c)

    def diameter(self):
        v = self.vertices
        d2 = ((v[:, None, :] - v[None, :, :]) ** 2).sum(axis=-1)
        return float(np.sqrt(d2.max()))

    def contains(self, point, tol=GEOM_TOL):
        q = np.asarray(point, dtype=float)
        v = self.vertices
        d = np.roll(v, -1, axis=0) - v
        cross = d[:, 0] * (q[1] - v[:, 1]) - d[:, 1] * (q[0] - v[:, 0])
        return bool(np.min(cross) >= -tol)

    def contains_many(self, points, tol=GEOM_TOL):
        q = np.asarray(points, dtype=float)
        v = self.vertices
        d = np.roll(v, -1, axis=0) - v
        cross = (q[:, None, 0] - v[None, :, 0]) * d[None, :, 1] \
            - (q[:, None, 1] - v[None, :, 1]) * d[None, :, 0]
        return cross.max(axis=1) <= tol

    def boundary_distance(self, points):
        """Distance from interior points to the boundary (negative outside)."""
        q = np.asarray(points, dtype=float)
        v = self.vertices
        d = np.roll(v, -1, axis=0) - v
        lengths = np.linalg.norm(d, axis=1)
        cross = (q[:, None, 0] - v[None, :, 0]) * d[None, :, 1] \
            - (q[:, None, 1] - v[None, :, 1]) * d[None, :, 0]
        return -(cross / lengths[None, :]).max(axis=1)

    def project(self, point):
        """Closest point of the polygon to ``point``."""
        q = np.asarray(point, dtype=float)
        if self.contains(q, tol=0.0):
            return q.copy()
        v = self.vertices
        w = np.roll(v, -1, axis=0)
        d = w - v
        t = np.clip(np.einsum("ij,ij->i", q[None, :] - v, d)
                    / np.einsum("ij,ij->i", d, d), 0.0, 1.0)
        cand = v + t[:, None] * d
        return cand[np.argmin(((cand - q) ** 2).sum(axis=1))]

    def translated(self, shift):
        return ConvexPolygon(self.vertices + np.asarray(shift, dtype=float),
                             validate=False)

    def halfplanes(self):
        """Edge half-planes whose intersection is this polygon."""
        v = self.vertices
        w = np.roll(v, -1, axis=0)
        d = w - v
        # inward normal of a CCW edge is (-dy, dx); flip for the <= form
        out = []
        for i in range(len(v)):
            n = np.array([d[i, 1], -d[i, 0]])
            out.append(HalfPlane(n, float(n @ v[i])))
        return out

    def __repr__(self):
        return f"ConvexPolygon({self.vertices.tolist()})"


class Circle:
    __slots__ = ("center", "radius")

    def __init__(self, center, radius):
        self.center = np.asarray(center, dtype=float)
        self.radius = float(radius)
        if self.radius < 0:
            raise ValueError("radius must be nonnegative")

    def contains(self, point, tol=GEOM_TOL):
        return bool(np.linalg.norm(np.asarray(point) - self.center)
                    <= self.radius + tol)

    def __repr__(self):
        return f"Circle(center={self.center.tolist()}, radius={self.radius})"


def _signed_area(v):
    w = np.roll(v, -1, axis=0)
    return float((v[:, 0] * w[:, 1] - w[:, 0] * v[:, 1]).sum() / 2.0)


def rectangle(xmin, ymin, xmax, ymax):
    return ConvexPolygon([(xmin, ymin), (xmax, ymin), (xmax, ymax), (xmin, ymax)])


def regular_polygon(sides, radius=1.0, center=(0.0, 0.0), phase=0.0):
    """Regular polygon, e.g. a 256-gon as a disk stand-in."""
    ang = phase + 2.0 * np.pi * np.arange(sides) / sides
    c = np.asarray(center, dtype=float)
    return ConvexPolygon(c + radius * np.stack([np.cos(ang), np.sin(ang)], axis=1))


def perpendicular_bisector(p_i, p_j):
    """Half-plane of points at least as close to ``p_i`` as to ``p_j``.

    The boundary line is the perpendicular bisector of the segment; the
    returned half-plane contains ``p_i``.
    """
    a = np.asarray(p_i, dtype=float)
    b = np.asarray(p_j, dtype=float)
    d = b - a
    if float(np.hypot(d[0], d[1])) <= MIN_SEPARATION:
        raise DegenerateGenerators(
            f"generators {a.tolist()} and {b.tolist()} are closer than "
            f"{MIN_SEPARATION}")
    mid = 0.5 * (a + b)
    return HalfPlane(d, float(d @ mid))


def clip_halfplane(poly, h, merge_tol=VERTEX_MERGE_TOL):
    """Intersect a convex polygon with a half-plane (Sutherland-Hodgman step).

    Returns the clipped ``ConvexPolygon`` or ``None`` when the intersection
    has zero area.
    """
    v = poly.vertices
    d = h.signed_distance(v)
    if np.all(d >= 0):
        return poly
    if np.all(d <= 0):
        return None
    out = []
    m = len(v)
    for i in range(m):
        j = (i + 1) % m
        if d[i] >= 0.0:
            out.append(v[i])
        if (d[i] > 0.0 and d[j] < 0.0) or (d[i] < 0.0 and d[j] > 0.0):
            t = d[i] / (d[i] - d[j])
            out.append(v[i] + t * (v[j] - v[i]))
    return polygon_from_loop(out, merge_tol)


def clip_halfplanes(poly, halfplanes, merge_tol=VERTEX_MERGE_TOL):
    """Sequentially clip by several half-planes; ``None`` once empty."""
    for h in halfplanes:
        poly = clip_halfplane(poly, h, merge_tol)
        if poly is None:
            return None
    return poly


def polygon_from_loop(points, merge_tol=VERTEX_MERGE_TOL):
    """Build a polygon from an ordered loop, merging near-duplicate vertices.

    Returns ``None`` if fewer than 3 distinct vertices survive or the loop
    has (numerically) zero area.
    """
    pts = np.asarray(points, dtype=float)
    if len(pts) < 3:
        return None
    scale = max(1.0, float(np.abs(pts).max()))
    tol2 = (merge_tol * scale) ** 2
    kept = [pts[0]]
    for p in pts[1:]:
        if ((p - kept[-1]) ** 2).sum() > tol2:
            kept.append(p)
    if len(kept) >= 2 and ((kept[0] - kept[-1]) ** 2).sum() <= tol2:
        kept.pop()
    if len(kept) < 3:
        return None
    v = np.asarray(kept)
    if abs(_signed_area(v)) < tol2:
        return None
    return ConvexPolygon(v, validate=False)


def intersection_area(poly_a, poly_b):
    """Area of the intersection of two convex polygons."""
    clipped = clip_halfplanes(poly_a, poly_b.halfplanes())
    return 0.0 if clipped is None else clipped.area


# ---------------------------------------------------------------------------
# Minimum enclosing circle (randomized incremental, deterministic order)
# ---------------------------------------------------------------------------

_MEC_EPS = 1e-12


def min_enclosing_circle(points):
    """Smallest circle enclosing all points.

    Expected linear time over the deterministically shuffled input;
    exact on the <= 3 support points that define the optimum.
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim == 1:
        pts = pts[None, :]
    if len(pts) == 0:
        raise ValueError("need at least one point")
    order = stream(0x5EC0, "shuffle").permutation(len(pts))
    pts = pts[order]

    c = None
    for i in range(len(pts)):
        if c is None or not _in_circle(c, pts[i]):
            c = _mec_with_one(pts[: i + 1], pts[i])
    return Circle(c[0], c[1])


def _in_circle(c, p):
    center, r = c
    return float(np.hypot(p[0] - center[0], p[1] - center[1])) \
        <= r * (1.0 + _MEC_EPS) + _MEC_EPS


def _mec_with_one(pts, p):
    c = (p.copy(), 0.0)
    for i in range(len(pts)):
        if not _in_circle(c, pts[i]):
            if c[1] == 0.0:
                c = _diameter_circle(p, pts[i])
            else:
                c = _mec_with_two(pts[: i + 1], p, pts[i])
    return c


def _mec_with_two(pts, p, q):
    circ = _diameter_circle(p, q)
    left = None
    right = None
    pq = q - p
    for r in pts:
        if _in_circle(circ, r):
            continue
        cross = pq[0] * (r[1] - p[1]) - pq[1] * (r[0] - p[0])
        c = _circumcircle(p, q, r)
        if c is None:
            continue
        d = pq[0] * (c[0][1] - p[1]) - pq[1] * (c[0][0] - p[0])
        if cross > 0.0 and (left is None or d > pq[0] * (left[0][1] - p[1])
                            - pq[1] * (left[0][0] - p[0])):
            left = c
        elif cross < 0.0 and (right is None or d < pq[0] * (right[0][1] - p[1])
                              - pq[1] * (right[0][0] - p[0])):
            right = c
    if left is None and right is None:
        return circ
    if left is None:
        return right
    if right is None:
        return left
    return left if left[1] <= right[1] else right


def _diameter_circle(p, q):
    center = 0.5 * (p + q)
    r = max(float(np.linalg.norm(p - center)), float(np.linalg.norm(q - center)))
    return (center, r)


def _circumcircle(a, b, c):
    # Shift to the bounding-box midpoint for numerical stability.
    ox = (min(a[0], b[0], c[0]) + max(a[0], b[0], c[0])) / 2.0
    oy = (min(a[1], b[1], c[1]) + max(a[1], b[1], c[1])) / 2.0
    ax, ay = a[0] - ox, a[1] - oy
    bx, by = b[0] - ox, b[1] - oy
    cx, cy = c[0] - ox, c[1] - oy
    d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    if d == 0.0:
        return None
    ux = ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay)
          + (cx * cx + cy * cy) * (ay - by)) / d
    uy = ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx)
          + (cx * cx + cy * cy) * (bx - ax)) / d
    center = np.array([ox + ux, oy + uy])
    r = max(float(np.linalg.norm(center - a)),
            float(np.linalg.norm(center - b)),
            float(np.linalg.norm(center - c)))
    return (center, r)

"""Incremental 3D convex hull with half-space output.

Small, deterministic hull builder for the few dozen points the invariant
polytope iteration produces.  Faces are kept as triangles during
construction; a point coplanar with a face it can see is merged into that
face's replacement fan rather than spawning sliver faces.  The published
polytope interface exposes the deduplicated supporting half-spaces
``{x : n . x <= c}`` together with the surviving vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


class DegenerateInputError(ValueError):
    """Input points span fewer than three dimensions."""


@dataclass(frozen=True)
class Polytope3:
    """Convex polytope given by hull vertices and supporting half-spaces."""

    vertices: np.ndarray                      # (n, 3)
    normals: np.ndarray = field(repr=False)   # (f, 3) unit outward normals
    offsets: np.ndarray = field(repr=False)   # (f,)
    triangles: tuple = ()                     # triangle index triples into vertices

    def __post_init__(self):
        for name in ("vertices", "normals", "offsets"):
            arr = np.asarray(getattr(self, name), dtype=np.float64)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @property
    def vertex_count(self) -> int:
        return self.vertices.shape[0]

    @property
    def facet_count(self) -> int:
        return self.normals.shape[0]

    def relative_violations(self, points) -> np.ndarray:
        """Per-point ``max_f (n_f . p - c_f) / (1 + |c_f|)``; <= 0 means inside."""
        pts = np.atleast_2d(np.asarray(points, dtype=np.float64))
        raw = pts @ self.normals.T - self.offsets
        return np.max(raw / (1.0 + np.abs(self.offsets)), axis=1)

    def contains(self, points, tol: float = 1e-10) -> bool:
        return bool(np.all(self.relative_violations(points) <= tol))

    def is_centrally_symmetric(self) -> bool:
        """Exact closure of the vertex set under negation."""
        seen = {v.tobytes() for v in self.vertices}
        return all((-v).tobytes() in seen for v in self.vertices)

    def to_dict(self) -> dict:
        return {
            "vertices": [[float(x) for x in v] for v in self.vertices],
            "facets": [
                {"normal": [float(x) for x in n], "offset": float(c)}
                for n, c in zip(self.normals, self.offsets)
            ],
        }


def _initial_tetrahedron(pts: np.ndarray, eps: float) -> list[int]:
    order = np.lexsort(pts.T[::-1])
    i0 = int(order[0])
    d = np.linalg.norm(pts - pts[i0], axis=1)
    i1 = int(np.argmax(d))
    if d[i1] <= eps:
        raise DegenerateInputError("all points coincide")
    axis = pts[i1] - pts[i0]
    d = np.linalg.norm(np.cross(pts - pts[i0], axis), axis=1) / np.linalg.norm(axis)
    i2 = int(np.argmax(d))
    if d[i2] <= eps:
        raise DegenerateInputError("points are collinear")
    n = np.cross(pts[i1] - pts[i0], pts[i2] - pts[i0])
    n /= np.linalg.norm(n)
    d = np.abs((pts - pts[i0]) @ n)
    i3 = int(np.argmax(d))
    if d[i3] <= eps:
        raise DegenerateInputError("points are coplanar")
    return [i0, i1, i2, i3]


def _face(pts, a, b, c, interior):
    n = np.cross(pts[b] - pts[a], pts[c] - pts[a])
    norm = np.linalg.norm(n)
    if norm == 0.0:
        return None
    n = n / norm
    if n @ (interior - pts[a]) > 0:
        b, c = c, b
        n = -n
    return (a, b, c), n, float(n @ pts[a])


def convex_hull_3d(points, tol: float = 1e-10) -> Polytope3:
    """Hull of >= 4 points in R^3; raises on coplanar/collinear input.

    Insertion order is the input order, so the result is deterministic.
    Every input point ends up inside or on the returned half-spaces to
    within ``tol`` (scaled by the data magnitude).
    """
    pts = np.asarray(points, dtype=np.float64)
    if pts.ndim != 2 or pts.shape[1] != 3:
        raise ValueError("expected an (n, 3) array of points")
    if pts.shape[0] < 4:
        raise DegenerateInputError("need at least 4 points")
    scale = float(np.max(np.abs(pts)))
    eps = tol * max(1.0, scale)

    seed = _initial_tetrahedron(pts, eps)
    interior = pts[seed].mean(axis=0)
    faces = {}
    next_id = 0
    for tri in ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)):
        built = _face(pts, seed[tri[0]], seed[tri[1]], seed[tri[2]], interior)
        faces[next_id] = built
        next_id += 1

    def edge_map():
        owner = {}
        for fid, (tri, _, _) in faces.items():
            a, b, c = tri
            for u, v in ((a, b), (b, c), (c, a)):
                owner[(u, v)] = fid
        return owner

    for ip in range(pts.shape[0]):
        if ip in seed:
            continue
        p = pts[ip]
        dists = {fid: float(n @ p - off) for fid, (tri, n, off) in faces.items()}
        start = max(dists, key=lambda fid: (dists[fid], -fid))
        if dists[start] <= eps:
            continue  # inside or on the boundary
        owner = edge_map()
        # Flood outward from the most violated face, absorbing coplanar
        # neighbours so their shared plane is re-fanned instead of split.
        visible = {start}
        queue = [start]
        while queue:
            fid = queue.pop()
            a, b, c = faces[fid][0]
            for u, v in ((a, b), (b, c), (c, a)):
                nb = owner.get((v, u))
                if nb is not None and nb not in visible and dists[nb] > -eps:
                    visible.add(nb)
                    queue.append(nb)
        horizon = []
        for fid in sorted(visible):
            a, b, c = faces[fid][0]
            for u, v in ((a, b), (b, c), (c, a)):
                nb = owner.get((v, u))
                if nb is None or nb not in visible:
                    horizon.append((u, v))
        for fid in visible:
            del faces[fid]
        for u, v in horizon:
            built = _face(pts, u, v, ip, interior)
            if built is not None:
                faces[next_id] = built
                next_id += 1

    used = sorted({i for tri, _, _ in faces.values() for i in tri})
    remap = {orig: new for new, orig in enumerate(used)}
    triangles = tuple(
        (remap[a], remap[b], remap[c]) for (a, b, c), _, _ in faces.values()
    )
    normals, offsets = [], []
    for _, n, off in faces.values():
        dup = any(
            np.linalg.norm(n - n2) <= 1e-8 and abs(off - off2) <= 1e-8 * (1.0 + abs(off2))
            for n2, off2 in zip(normals, offsets)
        )
        if not dup:
            normals.append(n)
            offsets.append(off)
    return Polytope3(pts[used], np.array(normals), np.array(offsets), triangles)

"""Simplicial complexes on {1..n}, stored as facet antichains of bitmasks.

Conventions that matter everywhere downstream:

* The VOID complex (no faces at all) has an empty facet tuple; the
  EMPTY complex {∅} has the single facet 0. They are different values
  with different serializations ("facets": null vs [[]]).
* A complex carries an ambient vertex mask. Fresh complexes are ambient
  on all of [n]; induced subcomplexes keep their original labels and
  record W as the ambient set, and links live on ambient minus the face.
* Values are immutable; every operation returns a new complex, so they
  can be shared and used as memo keys freely.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

from .bitsets import (
    iter_vertices,
    mask_from_vertices,
    maximal_elements,
    minimal_transversals,
    subsets_of_size,
    vertices_from_mask,
)
from .errors import (
    DimensionRangeError,
    FormatError,
    NotAFaceError,
    VertexRangeError,
    VoidComplexError,
)

MAX_VERTICES = 64

FaceLike = "int | Iterable[int]"


def as_mask(face) -> int:
    """Coerce a face given as a mask or an iterable of vertex labels."""
    if isinstance(face, int):
        return face
    return mask_from_vertices(face)


class SimplicialComplex:
    """A simplicial complex determined by its facet antichain.

    `facets` is a sorted tuple of masks with no facet contained in
    another. `ambient` is the mask of the vertex universe the complex
    lives on; `n` bounds the labels (1..n, n <= 64).
    """

    __slots__ = ("n", "ambient", "facets")

    def __init__(self, n: int, facets: Iterable = (), *, ambient: int | None = None):
        if not 1 <= n <= MAX_VERTICES:
            raise VertexRangeError(f"ambient vertex count must be in 1..{MAX_VERTICES}, got {n}")
        full = (1 << n) - 1
        amb = full if ambient is None else ambient
        if amb & ~full:
            raise VertexRangeError("ambient set contains labels outside 1..n")
        masks = []
        for f in facets:
            m = as_mask(f)
            if m & ~amb:
                bad = vertices_from_mask(m & ~amb)
                raise VertexRangeError(f"facet vertices {bad} outside the ambient set")
            masks.append(m)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "ambient", amb)
        object.__setattr__(self, "facets", maximal_elements(masks))

    def __setattr__(self, *_):
        raise AttributeError("SimplicialComplex is immutable")

    @classmethod
    def _raw(cls, n: int, ambient: int, facets: tuple[int, ...]) -> "SimplicialComplex":
        """Internal fast path; `facets` must already be a reduced antichain."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "ambient", ambient)
        object.__setattr__(obj, "facets", facets)
        return obj

    @classmethod
    def from_facets(cls, n: int, facets: Iterable) -> "SimplicialComplex":
        """Complex generated by the given faces; dominated faces are dropped."""
        return cls(n, facets)

    @classmethod
    def void(cls, n: int) -> "SimplicialComplex":
        return cls(n, ())

    @classmethod
    def empty(cls, n: int) -> "SimplicialComplex":
        return cls(n, (0,))

    @classmethod
    def simplex(cls, n: int) -> "SimplicialComplex":
        return cls(n, ((1 << n) - 1,))

    # -- basic structure ------------------------------------------------

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_empty_complex(self) -> bool:
        return self.facets == (0,)

    @property
    def dim(self) -> int:
        """Dimension; -1 for {∅} and -2 (sentinel) for the void complex."""
        if self.is_void:
            return -2
        return max(f.bit_count() for f in self.facets) - 1

    def vertices(self) -> tuple[int, ...]:
        """Labels v with {v} a face, ascending."""
        u = 0
        for f in self.facets:
            u |= f
        return vertices_from_mask(u)

    def vertex_mask(self) -> int:
        u = 0
        for f in self.facets:
            u |= f
        return u

    def _coerce_face(self, face) -> int:
        m = as_mask(face)
        if m < 0 or m & ~((1 << self.n) - 1):
            raise VertexRangeError(f"face {face!r} has vertices outside 1..{self.n}")
        return m

    def is_face(self, face) -> bool:
        m = self._coerce_face(face)
        return any(m & ~f == 0 for f in self.facets)

    def faces_of_dim(self, k: int) -> list[int]:
        """All k-dimensional faces, ascending by mask."""
        if k == -1:
            return [0] if not self.is_void else []
        out: set[int] = set()
        for f in self.facets:
            out.update(subsets_of_size(f, k + 1))
        return sorted(out)

    def face_masks(self) -> set[int]:
        """The full face set (exponential in facet sizes; fine for small n)."""
        out: set[int] = set()
        for f in self.facets:
            vs = [1 << (v - 1) for v in iter_vertices(f)]
            for size in range(len(vs) + 1):
                for combo in combinations(vs, size):
                    m = 0
                    for b in combo:
                        m |= b
                    out.add(m)
        return out

    def num_faces(self) -> int:
        return len(self.face_masks())

    # -- operations -----------------------------------------------------

    def pure_skeleton(self, i: int) -> "SimplicialComplex":
        """Complex generated by all i-dimensional faces."""
        if self.is_void or not 0 <= i <= self.dim:
            raise DimensionRangeError(f"skeleton dimension {i} outside 0..dim")
        return SimplicialComplex._raw(self.n, self.ambient, tuple(self.faces_of_dim(i)))

    def induced(self, w) -> "SimplicialComplex":
        """Induced subcomplex on W; keeps labels, re-ambients to W."""
        wm = self._coerce_face(w)
        if self.is_void:
            return SimplicialComplex._raw(self.n, wm, ())
        return SimplicialComplex._raw(self.n, wm, maximal_elements(f & wm for f in self.facets))

    def link(self, face) -> "SimplicialComplex":
        m = self._coerce_face(face)
        if not self.is_face(m):
            raise NotAFaceError(f"{vertices_from_mask(m)} is not a face")
        if m == 0:
            return self
        amb = self.ambient & ~m
        cands = [f & ~m for f in self.facets if f & m == m]
        return SimplicialComplex._raw(self.n, amb, maximal_elements(cands))

    def delete_all(self, face) -> "SimplicialComplex":
        """Remove every face containing the given set (including itself)."""
        m = self._coerce_face(face)
        cands: list[int] = []
        for f in self.facets:
            if f & m != m:
                cands.append(f)
            else:
                for v in iter_vertices(m):
                    cands.append(f & ~(1 << (v - 1)))
        return SimplicialComplex._raw(self.n, self.ambient, maximal_elements(cands))

    def face_deletion(self, face) -> "SimplicialComplex":
        """Remove the faces strictly containing E but keep E itself."""
        m = self._coerce_face(face)
        if not self.is_face(m):
            return self
        if m in self.facets:
            return self
        reduced = self.delete_all(m)
        return SimplicialComplex._raw(
            self.n, self.ambient, maximal_elements(reduced.facets + (m,))
        )

    def alexander_dual(self) -> "SimplicialComplex":
        """Faces are the complements (in the ambient set) of nonfaces."""
        if self.is_void:
            return SimplicialComplex._raw(self.n, self.ambient, (self.ambient,))
        nonfaces = self.minimal_nonfaces()
        facets = tuple(sorted(self.ambient & ~f for f in nonfaces))
        return SimplicialComplex._raw(self.n, self.ambient, facets)

    def minimal_nonfaces(self) -> tuple[int, ...]:
        """Inclusion-minimal subsets of the ambient set that are not faces.

        These are the minimal hitting sets of the facet complements.
        """
        if self.is_void:
            raise VoidComplexError("the void complex has no nonface lattice")
        return minimal_transversals(self.ambient & ~f for f in self.facets)

    # -- value semantics / serialization ---------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.ambient == other.ambient and self.facets == other.facets

    def __hash__(self) -> int:
        return hash((self.ambient, self.facets))

    def __repr__(self) -> str:
        if self.is_void:
            return f"SimplicialComplex(n={self.n}, VOID)"
        inner = ",".join("{" + ",".join(map(str, vertices_from_mask(f))) + "}" for f in self.facets)
        return f"SimplicialComplex(n={self.n}, <{inner}>)"

    def to_json_dict(self) -> dict:
        d: dict = {"n": self.n}
        if self.ambient != (1 << self.n) - 1:
            d["vertices"] = list(vertices_from_mask(self.ambient))
        d["facets"] = None if self.is_void else [list(vertices_from_mask(f)) for f in self.facets]
        return d

    @classmethod
    def from_json_dict(cls, data: dict) -> "SimplicialComplex":
        if not isinstance(data, dict) or "n" not in data or "facets" not in data:
            raise FormatError('complex JSON needs "n" and "facets" keys')
        n = data["n"]
        if not isinstance(n, int):
            raise FormatError('"n" must be an integer')
        ambient = None
        if "vertices" in data and data["vertices"] is not None:
            ambient = mask_from_vertices(data["vertices"])
        raw = data["facets"]
        if raw is None:
            if ambient is None:
                return cls.void(n)
            return cls(n, (), ambient=ambient)
        if not isinstance(raw, list) or not all(isinstance(f, list) for f in raw):
            raise FormatError('"facets" must be null or a list of vertex lists')
        try:
            return cls(n, [mask_from_vertices(f) for f in raw], ambient=ambient)
        except VertexRangeError as exc:
            raise FormatError(str(exc)) from exc


def simplex_skeleton(n: int, ambient: int, i: int) -> SimplicialComplex:
    """Pure i-skeleton of the full simplex on the ambient set.

    For i >= |ambient| - 1 this is the full simplex itself (the natural
    reading of the skeleton tower above its top dimension); for i = -1
    it is {∅}.
    """
    size = ambient.bit_count()
    if i + 1 >= size:
        return SimplicialComplex._raw(n, ambient, (ambient,))
    if i < -1:
        raise DimensionRangeError(f"skeleton dimension {i} below -1")
    return SimplicialComplex._raw(n, ambient, tuple(sorted(subsets_of_size(ambient, i + 1))))

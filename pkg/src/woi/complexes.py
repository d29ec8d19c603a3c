"""Simplicial complexes as bitmask face families, with exact reduced homology.

Conventions: the void complex (no faces at all) has zero homology in every
degree; the irrelevant complex {emptyset} has reduced homology of rank one
in degree -1.  Ranks are computed exactly, over the rationals through
fraction-free integer elimination, or over a prime field.
"""

from __future__ import annotations

from collections.abc import Iterable
from itertools import combinations

import numpy as np

from .errors import ResourceCapError


def popcount(x: int) -> int:
    return x.bit_count()


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for j in indices:
        m |= 1 << j
    return m


def mask_members(m: int) -> tuple[int, ...]:
    out = []
    j = 0
    while m:
        if m & 1:
            out.append(j)
        m >>= 1
        j += 1
    return tuple(out)


class SimplicialComplex:
    """Downward-closed face family on vertex set {0, ..., n-1}."""

    __slots__ = ("n", "faces")

    def __init__(self, n: int, faces: Iterable[int], *, closed: bool = False):
        face_set = set(faces)
        if not closed:
            stack = list(face_set)
            while stack:
                f = stack.pop()
                g = f
                while g:
                    low = g & -g
                    sub = f & ~low
                    if sub not in face_set:
                        face_set.add(sub)
                        stack.append(sub)
                    g &= g - 1
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "faces", frozenset(face_set))

    def __setattr__(self, key, value):
        raise AttributeError("SimplicialComplex is immutable")

    def __eq__(self, other):
        return (isinstance(other, SimplicialComplex)
                and self.n == other.n and self.faces == other.faces)

    def __hash__(self):
        return hash((self.n, self.faces))

    def __repr__(self):
        if self.is_void:
            return f"SimplicialComplex(n={self.n}, void)"
        return f"SimplicialComplex(n={self.n}, faces={len(self.faces)}, dim={self.dim})"

    @classmethod
    def void(cls, n: int) -> "SimplicialComplex":
        return cls(n, (), closed=True)

    @classmethod
    def irrelevant(cls, n: int) -> "SimplicialComplex":
        return cls(n, (0,), closed=True)

    @classmethod
    def from_facets(cls, n: int, facets: Iterable[int]) -> "SimplicialComplex":
        faces = set()
        for top in facets:
            sub = top
            while True:
                faces.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & top
        return cls(n, faces, closed=True)

    @classmethod
    def independence(cls, n: int, circuits: Iterable[int],
                     face_cap: int | None = None) -> "SimplicialComplex":
        """Faces are the subsets containing none of the circuit masks.

        An empty circuit (mask 0) forces the void complex.  Enumeration is
        by backtracking, so only actual faces are visited.
        """
        circ = sorted(set(circuits), key=popcount)
        if any(c == 0 for c in circ):
            return cls.void(n)
        faces = [0]

        def extend(cur: int, start: int):
            for v in range(start, n):
                cand = cur | (1 << v)
                if any(c & ~cand == 0 for c in circ):
                    continue
                faces.append(cand)
                if face_cap is not None and len(faces) > face_cap:
                    raise ResourceCapError(
                        f"simplicial complex exceeds {face_cap} faces")
                extend(cand, v + 1)

        extend(0, 0)
        return cls(n, faces, closed=True)

    # -- state ----------------------------------------------------------

    @property
    def is_void(self) -> bool:
        return not self.faces

    @property
    def is_irrelevant(self) -> bool:
        return self.faces == frozenset((0,))

    @property
    def dim(self) -> int:
        """Dimension; -1 for the irrelevant complex. Undefined (raises) when void."""
        if self.is_void:
            raise ValueError("the void complex has no dimension")
        return max(popcount(f) for f in self.faces) - 1

    def has_face(self, mask: int) -> bool:
        return mask in self.faces

    def facets(self) -> list[int]:
        ordered = sorted(self.faces, key=lambda f: (-popcount(f), f))
        out: list[int] = []
        for f in ordered:
            if not any(f & ~g == 0 for g in out):
                out.append(f)
        return out

    def link(self, face_mask: int) -> "SimplicialComplex":
        """Faces disjoint from F whose union with F is a face."""
        if face_mask not in self.faces:
            raise ValueError("link of a non-face")
        sub = frozenset(f & ~face_mask for f in self.faces if f & face_mask == face_mask)
        return SimplicialComplex(self.n, sub, closed=True)

    def face_counts(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for f in self.faces:
            s = popcount(f)
            counts[s] = counts.get(s, 0) + 1
        return counts

    def euler_characteristic_reduced(self) -> int:
        """Alternating sum over faces including the empty face: sum (-1)^dim."""
        return sum((-1) ** (popcount(f) - 1) for f in self.faces)


# -- exact rank computations ---------------------------------------------


def rank_gf(M: np.ndarray, p: int) -> int:
    """Rank of an integer matrix over GF(p) by row reduction."""
    if M.size == 0:
        return 0
    A = np.mod(M.astype(np.int64), p)
    rows, cols = A.shape
    rank = 0
    r = 0
    for c in range(cols):
        pivots = np.nonzero(A[r:, c])[0]
        if pivots.size == 0:
            continue
        piv = r + int(pivots[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        A[r] = (A[r] * inv) % p
        hit = np.nonzero(A[:, c])[0]
        for i in hit:
            if i != r:
                A[i] = (A[i] - A[i, c] * A[r]) % p
        r += 1
        rank += 1
        if r == rows:
            break
    return rank


def rank_exact(M: np.ndarray) -> int:
    """Rank over the rationals via fraction-free (Bareiss) elimination.

    Entries are converted to python integers, so there is no overflow.
    """
    if M.size == 0:
        return 0
    A = [[int(x) for x in row] for row in M]
    rows, cols = len(A), len(A[0])
    rank = 0
    r = 0
    prev = 1
    for c in range(cols):
        piv = next((i for i in range(r, rows) if A[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            A[r], A[piv] = A[piv], A[r]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                A[i][j] = (A[i][j] * A[r][c] - A[i][c] * A[r][j]) // prev
            A[i][c] = 0
        prev = A[r][c]
        r += 1
        rank += 1
        if r == rows:
            break
    return rank


def _is_probable_prime(p: int) -> bool:
    if p < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if p % q == 0:
            return p == q
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


def validate_characteristic(char: int) -> int:
    char = int(char)
    if char == 0:
        return 0
    if not _is_probable_prime(char):
        raise ValueError(f"characteristic must be 0 or a prime, got {char}")
    return char


# -- reduced homology ------------------------------------------------------

_hom_cache: dict[tuple, dict[int, int]] = {}


def clear_homology_cache():
    _hom_cache.clear()


def _canonical_masks(faces: Iterable[int]) -> tuple[tuple[int, ...], int]:
    """Relabel used vertices consecutively; canonical sorted mask tuple."""
    faces = list(faces)
    used = 0
    for f in faces:
        used |= f
    verts = mask_members(used)
    relab = {v: i for i, v in enumerate(verts)}
    out = []
    for f in faces:
        m = 0
        for v in mask_members(f):
            m |= 1 << relab[v]
        out.append(m)
    return tuple(sorted(out)), len(verts)


def _nonzero_homology(faces: Iterable[int], char: int) -> dict[int, int]:
    """Map i -> dim of nonzero reduced homology groups of the face family."""
    key_masks, nverts = _canonical_masks(faces)
    if not key_masks:
        return {}
    key = (key_masks, char)
    hit = _hom_cache.get(key)
    if hit is not None:
        return hit
    face_set = set(key_masks)
    # cone shortcut: a vertex lying in every facet kills all reduced homology
    facets: list[int] = []
    for f in sorted(face_set, key=lambda f: (-popcount(f), f)):
        if not any(f & ~g == 0 for g in facets):
            facets.append(f)
    common = facets[0] if facets else 0
    for f in facets[1:]:
        common &= f
    if common:
        _hom_cache[key] = {}
        return {}
    by_size: dict[int, list[int]] = {}
    for f in face_set:
        by_size.setdefault(popcount(f), []).append(f)
    for s in by_size:
        by_size[s].sort()
    maxsize = max(by_size)
    index = {s: {f: i for i, f in enumerate(fs)} for s, fs in by_size.items()}
    ranks: dict[int, int] = {}
    for s in range(1, maxsize + 1):
        cur, prev = by_size.get(s, []), by_size.get(s - 1, [])
        if not cur or not prev:
            ranks[s] = 0
            continue
        M = np.zeros((len(prev), len(cur)), dtype=np.int64)
        for col, f in enumerate(cur):
            sign = 1
            for v in mask_members(f):
                sub = f & ~(1 << v)
                M[index[s - 1][sub], col] = sign
                sign = -sign
        ranks[s] = rank_exact(M) if char == 0 else rank_gf(M, char)
    dims: dict[int, int] = {}
    for i in range(-1, maxsize):
        s = i + 1
        d = len(by_size.get(s, ())) - ranks.get(s, 0) - ranks.get(s + 1, 0)
        if d:
            dims[i] = d
    _hom_cache[key] = dims
    return dims


def homology_dims(C: SimplicialComplex, char: int = 0) -> dict[int, int]:
    """Reduced homology dimensions over the chosen field, i = -1 .. dim C.

    The void complex returns an empty map (all groups vanish); the
    irrelevant complex returns {-1: 1}.
    """
    char = validate_characteristic(char)
    if C.is_void:
        return {}
    nonzero = _nonzero_homology(C.faces, char)
    return {i: nonzero.get(i, 0) for i in range(-1, C.dim + 1)}


def nonzero_homology(C: SimplicialComplex, char: int = 0) -> dict[int, int]:
    char = validate_characteristic(char)
    if C.is_void:
        return {}
    return dict(_nonzero_homology(C.faces, char))

"""Exact monomial and monomial-ideal arithmetic.

A monomial is an exponent tuple over an ordered ambient variable list.
Ideals hold a canonical minimal generating set: divisibility-minimal and
sorted by (total degree, exponent tuple), so two equal ideals compare
equal structurally.  The rest of the package relies on that for caching,
serialization and cross-route checks.

Exponents are plain python integers; bulk operations drop into numpy
whenever every exponent fits comfortably in int64, and fall back to the
pure-python path otherwise, so arbitrary-precision inputs stay exact.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence

import numpy as np

Exponents = tuple[int, ...]

_NP_LIMIT = 2**31


def monomial_degree(m: Sequence[int]) -> int:
    return sum(m)


def monomial_divides(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a: Sequence[int], b: Sequence[int]) -> Exponents:
    return tuple(x if x >= y else y for x, y in zip(a, b))


def monomial_gcd(a: Sequence[int], b: Sequence[int]) -> Exponents:
    return tuple(x if x <= y else y for x, y in zip(a, b))


def monomial_mul(a: Sequence[int], b: Sequence[int]) -> Exponents:
    return tuple(x + y for x, y in zip(a, b))


def squarefree_part(m: Sequence[int]) -> Exponents:
    return tuple(1 if e else 0 for e in m)


def monomial_support(m: Sequence[int]) -> tuple[int, ...]:
    return tuple(j for j, e in enumerate(m) if e)


def monomial_str(m: Sequence[int], variables: Sequence[str]) -> str:
    if not any(m):
        return "1"
    parts = []
    for name, e in zip(variables, m):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def _np_safe(gens) -> bool:
    return all(e < _NP_LIMIT for g in gens for e in g)


def _minimal_rows(arr: np.ndarray) -> np.ndarray:
    """Divisibility-minimal rows of an int64 exponent array, canonically sorted."""
    if arr.shape[0] == 0:
        return arr
    arr = np.unique(arr, axis=0)
    n = arr.shape[1]
    degree = arr.sum(axis=1)
    order = np.lexsort(tuple(arr[:, j] for j in reversed(range(n))) + (degree,))
    arr = arr[order]
    buf = np.empty_like(arr)
    k = 0
    for row in arr:
        if k == 0 or not (buf[:k] <= row).all(axis=1).any():
            buf[k] = row
            k += 1
    return buf[:k].copy()


def _minimal_gens(gens: Iterable[Sequence[int]], n: int) -> tuple[Exponents, ...]:
    uniq = sorted({tuple(int(e) for e in g) for g in gens}, key=lambda g: (sum(g), g))
    for g in uniq:
        if len(g) != n:
            raise ValueError(f"exponent vector of length {len(g)}, expected {n}")
        if any(e < 0 for e in g):
            raise ValueError(f"negative exponent in {g}")
    if not uniq:
        return ()
    if len(uniq) > 48 and _np_safe(uniq):
        kept = _minimal_rows(np.asarray(uniq, dtype=np.int64))
        return tuple(tuple(row) for row in kept.tolist())
    kept: list[Exponents] = []
    for g in uniq:
        if not any(monomial_divides(h, g) for h in kept):
            kept.append(g)
    return tuple(kept)


class MonomialIdeal:
    """A monomial ideal in a fixed polynomial ring, in canonical form.

    Immutable; every operation returns a new ideal.  The zero ideal is the
    empty generator list, the unit ideal is the single generator 1.
    """

    __slots__ = ("variables", "gens", "_arr")

    def __init__(self, variables: Sequence[str], gens: Iterable[Sequence[int]],
                 *, _canonical: bool = False):
        object.__setattr__(self, "variables", tuple(variables))
        n = len(self.variables)
        if _canonical:
            object.__setattr__(self, "gens", tuple(tuple(g) for g in gens))
        else:
            object.__setattr__(self, "gens", _minimal_gens(gens, n))
        object.__setattr__(self, "_arr", None)

    def __setattr__(self, name, value):
        raise AttributeError("MonomialIdeal is immutable")

    # -- basic protocol ------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, MonomialIdeal)
                and self.variables == other.variables and self.gens == other.gens)

    def __hash__(self):
        return hash((self.variables, self.gens))

    def __repr__(self):
        return f"MonomialIdeal({self.variables!r}, {self.gens!r})"

    def __str__(self):
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(monomial_str(g, self.variables) for g in self.gens) + ")"

    def __len__(self):
        return len(self.gens)

    @property
    def n(self) -> int:
        return len(self.variables)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return bool(self.gens) and not any(self.gens[0])

    def array(self) -> np.ndarray:
        """Generators as an int64 matrix; cached. Raises on oversized exponents."""
        arr = self._arr
        if arr is None:
            if not _np_safe(self.gens):
                raise OverflowError("exponents exceed the int64 fast path")
            arr = np.asarray(self.gens, dtype=np.int64).reshape(len(self.gens), self.n)
            object.__setattr__(self, "_arr", arr)
        return arr

    def _check_ring(self, other: "MonomialIdeal"):
        if self.variables != other.variables:
            raise ValueError("ideals live in different ambient rings")

    def _check_len(self, m: Sequence[int]):
        if len(m) != self.n:
            raise ValueError(f"monomial has {len(m)} exponents, ring has {self.n}")

    def _var_indices(self, names: Iterable[str]) -> list[int]:
        pos = {v: j for j, v in enumerate(self.variables)}
        out = []
        for name in names:
            if name not in pos:
                raise ValueError(f"unknown variable {name!r}")
            out.append(pos[name])
        return out

    # -- membership ----------------------------------------------------

    def contains(self, m: Sequence[int]) -> bool:
        """True iff x^m lies in the ideal, i.e. some generator divides it."""
        self._check_len(m)
        return any(monomial_divides(g, m) for g in self.gens)

    def contains_all(self, candidates: np.ndarray) -> np.ndarray:
        """Vectorized membership for a (k, n) array of exponent rows."""
        if self.is_zero:
            return np.zeros(candidates.shape[0], dtype=bool)
        G = self.array()
        return (G[None, :, :] <= candidates[:, None, :]).all(axis=2).any(axis=1)

    # -- ring operations -----------------------------------------------

    def multiply(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check_ring(other)
        if self.is_zero or other.is_zero:
            return MonomialIdeal(self.variables, (), _canonical=True)
        if _np_safe(self.gens) and _np_safe(other.gens):
            prods = (self.array()[:, None, :] + other.array()[None, :, :]).reshape(-1, self.n)
            kept = _minimal_rows(prods)
            return MonomialIdeal(self.variables,
                                 tuple(tuple(r) for r in kept.tolist()), _canonical=True)
        prods = [monomial_mul(g, h) for g in self.gens for h in other.gens]
        return MonomialIdeal(self.variables, prods)

    def power(self, k: int) -> "MonomialIdeal":
        """Ordinary power I^k, k >= 1, minimalized after each product."""
        if k < 1:
            raise ValueError("power requires k >= 1")
        out = self
        for _ in range(k - 1):
            out = out.multiply(self)
        return out

    def colon(self, m: Sequence[int]) -> "MonomialIdeal":
        """(I : x^m), generated by the quotients g / gcd(g, x^m)."""
        self._check_len(m)
        quots = [tuple(max(e - c, 0) for e, c in zip(g, m)) for g in self.gens]
        return MonomialIdeal(self.variables, quots)

    def sqrt_colon(self, m: Sequence[int]) -> "MonomialIdeal":
        """Radical of (I : x^m); squarefree parts of the colon quotients."""
        self._check_len(m)
        quots = [tuple(1 if e > c else 0 for e, c in zip(g, m)) for g in self.gens]
        return MonomialIdeal(self.variables, quots)

    def radical(self) -> "MonomialIdeal":
        return MonomialIdeal(self.variables, [squarefree_part(g) for g in self.gens])

    def saturate(self, names: Iterable[str]) -> "MonomialIdeal":
        """Saturation by the product of the given variables.

        For a monomial ideal this is exponent-zeroing on those variables,
        which equals I : (prod of names)^infinity.
        """
        idx = set(self._var_indices(names))
        gens = [tuple(0 if j in idx else e for j, e in enumerate(g)) for g in self.gens]
        return MonomialIdeal(self.variables, gens)

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """Intersection via pairwise lcm of generators."""
        self._check_ring(other)
        if self.is_zero or other.is_zero:
            return MonomialIdeal(self.variables, (), _canonical=True)
        if _np_safe(self.gens) and _np_safe(other.gens):
            A, B = self.array(), other.array()
            lcms = np.maximum(A[:, None, :], B[None, :, :]).reshape(-1, self.n)
            kept = _minimal_rows(lcms)
            return MonomialIdeal(self.variables,
                                 tuple(tuple(r) for r in kept.tolist()), _canonical=True)
        lcms = [monomial_lcm(g, h) for g in self.gens for h in other.gens]
        return MonomialIdeal(self.variables, lcms)

    def restrict(self, names: Iterable[str]) -> "MonomialIdeal":
        """Generators supported inside the given variable set, same ambient ring."""
        keep = set(self._var_indices(names))
        gens = [g for g in self.gens
                if all(j in keep for j in range(self.n) if g[j])]
        return MonomialIdeal(self.variables, gens, _canonical=True)

    def phi(self, weights: Mapping[str, int]) -> "MonomialIdeal":
        """Weight substitution x_j -> x_j^{w(x_j)} applied generator-wise.

        Every variable actually used by a generator must carry a declared
        weight >= 1.
        """
        w = []
        for j, name in enumerate(self.variables):
            if any(g[j] for g in self.gens):
                if name not in weights:
                    raise ValueError(f"no weight declared for used variable {name!r}")
                if weights[name] < 1:
                    raise ValueError(f"weight for {name!r} must be >= 1")
                w.append(int(weights[name]))
            else:
                w.append(int(weights.get(name, 1)))
        gens = [tuple(e * wj for e, wj in zip(g, w)) for g in self.gens]
        return MonomialIdeal(self.variables, gens)

    def exponent_profile(self) -> Exponents:
        """Componentwise maximum exponent over the generators."""
        if self.is_zero:
            return (0,) * self.n
        return tuple(max(g[j] for g in self.gens) for j in range(self.n))

    # -- serialization ------------------------------------------------

    def to_json(self) -> dict:
        return {
            "schema": "woi/1",
            "variables": list(self.variables),
            "generators": [list(g) for g in self.gens],
        }

    @classmethod
    def from_json(cls, doc: Mapping) -> "MonomialIdeal":
        if not isinstance(doc, Mapping) or "variables" not in doc or "generators" not in doc:
            raise ValueError("ideal document needs 'variables' and 'generators'")
        variables = [str(v) for v in doc["variables"]]
        if len(set(variables)) != len(variables):
            raise ValueError("duplicate variable names in ideal document")
        return cls(variables, doc["generators"])


def minimalize(variables: Sequence[str], gens: Iterable[Sequence[int]]) -> MonomialIdeal:
    """Canonical minimal form of the ideal generated by ``gens``."""
    return MonomialIdeal(variables, gens)


def intersect_many(ideals: Sequence[MonomialIdeal]) -> MonomialIdeal:
    """Left fold of pairwise intersections, smallest generator sets first.

    The result is schedule-independent; the ordering only bounds the size
    of intermediate generator sets.
    """
    if not ideals:
        raise ValueError("intersect_many needs at least one ideal")
    ordered = sorted(ideals, key=lambda I: len(I.gens))
    out = ordered[0]
    for J in ordered[1:]:
        out = out.intersect(J)
    return out

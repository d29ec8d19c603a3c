"""Edge ideals and their symbolic powers, by two independent routes.

The defining route intersects, over the minimal primes of the edge ideal
(equivalently the minimal vertex covers of the underlying graph), the
contractions of I^k localized at each prime; for monomial ideals each
contraction is a saturation, i.e. exponent zeroing.  Embedded primes are
deliberately not used.

When every weighted vertex is a sink, a combinatorial shortcut exists for
k <= 3: the symbolic power of the underlying squarefree edge ideal is
I(G)^2 plus triangle cubics for k = 2, and I(G)^3 + I(G) * (triangles)
+ (4-clique quartics and 5-cycle quintics) for k = 3; the weight
substitution x_j -> x_j^(w_j) then transports it to the oriented ideal.
A chorded 5-cycle splits into a triangle plus a disjoint edge, so listing
non-induced 5-cycles alongside induced ones changes nothing.

`symbolic_power(..., method="auto")` runs the defining route and, whenever
the shortcut applies, cross-checks against it, raising on any mismatch.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import HypothesisError
from .graphs import WeightedOrientedGraph, cliques4, five_cycles, triangles
from .monomials import Exponents, MonomialIdeal, intersect_many

METHODS = ("primes", "sink-formula", "auto")


def edge_ideal(D: WeightedOrientedGraph) -> MonomialIdeal:
    """One generator x_t * x_h^(w_h) per directed edge (t, h)."""
    n = D.n
    gens = []
    for t, h in D.edges:
        g = [0] * n
        g[t] += 1
        g[h] += D.vertices[h].weight
        gens.append(tuple(g))
    return MonomialIdeal(D.names, gens)


def underlying_edge_ideal(D: WeightedOrientedGraph) -> MonomialIdeal:
    """Squarefree edge ideal of the underlying simple graph."""
    n = D.n
    gens = []
    for i, j in D.underlying_edges():
        g = [0] * n
        g[i] = 1
        g[j] = 1
        gens.append(tuple(g))
    return MonomialIdeal(D.names, gens)


def minimal_primes(D: WeightedOrientedGraph) -> tuple[tuple[str, ...], ...]:
    """Minimal vertex covers of the underlying graph, in a fixed order.

    Branch-and-bound on the first uncovered edge; the final inclusion
    filter removes non-minimal covers produced by branching.
    """
    edges = D.underlying_edges()
    if not edges:
        return ()
    covers: set[frozenset[int]] = set()

    def branch(cover: frozenset[int], pos: int):
        while pos < len(edges):
            a, b = edges[pos]
            if a in cover or b in cover:
                pos += 1
                continue
            branch(cover | {a}, pos + 1)
            branch(cover | {b}, pos + 1)
            return
        covers.add(cover)

    branch(frozenset(), 0)
    minimal = [c for c in covers if not any(d < c for d in covers)]
    ordered = sorted(minimal, key=lambda c: (len(c), sorted(c)))
    return tuple(tuple(D.vertices[j].name for j in sorted(c)) for c in ordered)


def _symbolic_by_primes(D: WeightedOrientedGraph, k: int) -> MonomialIdeal:
    I = edge_ideal(D)
    Ik = I.power(k) if not I.is_zero else I
    covers = minimal_primes(D)
    if not covers:
        return Ik
    allnames = set(D.names)
    saturations = [Ik.saturate(sorted(allnames - set(cover))) for cover in covers]
    return intersect_many(saturations)


def _symbolic_sink_formula(D: WeightedOrientedGraph, k: int) -> MonomialIdeal:
    cls = D.classify()
    if not cls.v_plus_all_sinks:
        raise HypothesisError(
            "sink-formula route needs every weighted vertex to be a sink")
    if k not in (1, 2, 3):
        raise HypothesisError("sink-formula route only covers k = 1, 2, 3")
    IG = underlying_edge_ideal(D)
    if IG.is_zero:
        return IG
    n = D.n
    index = {name: j for j, name in enumerate(D.names)}

    def sf(names) -> Exponents:
        g = [0] * n
        for x in names:
            g[index[x]] = 1
        return tuple(g)

    if k == 1:
        base = IG
    elif k == 2:
        gens = list(IG.power(2).gens)
        gens.extend(sf(T) for T in triangles(D))
        base = MonomialIdeal(D.names, gens)
    else:
        tri = [sf(T) for T in triangles(D)]
        gens = list(IG.power(3).gens)
        J1 = MonomialIdeal(D.names, tri)
        if not J1.is_zero:
            gens.extend(IG.multiply(J1).gens)
        gens.extend(sf(Q) for Q in cliques4(D))
        gens.extend(sf(C) for C in five_cycles(D))
        base = MonomialIdeal(D.names, gens)
    return base.phi(D.weight_map)


def symbolic_power(D: WeightedOrientedGraph, k: int,
                   method: str = "auto") -> MonomialIdeal:
    """k-th symbolic power of the edge ideal of D, k >= 1."""
    if k < 1:
        raise ValueError("symbolic power requires k >= 1")
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}")
    if method == "primes":
        return _symbolic_by_primes(D, k)
    if method == "sink-formula":
        return _symbolic_sink_formula(D, k)
    result = _symbolic_by_primes(D, k)
    if k <= 3 and D.classify().v_plus_all_sinks:
        shortcut = _symbolic_sink_formula(D, k)
        if shortcut != result:
            from .errors import ConsistencyError
            raise ConsistencyError(
                f"symbolic power routes disagree for k={k}: "
                f"primes {result} vs sink-formula {shortcut}")
    return result


def ideals_equal(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """Structural equality of canonical forms (same ambient ring required)."""
    if I.variables != J.variables:
        raise ValueError("ideals live in different ambient rings")
    return I == J


@dataclass(frozen=True)
class WitnessReport:
    monomial: Exponents
    in_symbolic: bool
    in_ordinary: bool


def lemma35_witness(D: WeightedOrientedGraph, triple: tuple[str, str, str],
                    k: int) -> WitnessReport:
    """Membership verdicts for the separating monomial of a setting path.

    For a directed path (xi, xj), (xj, xr) with w(xj) >= 2 and k >= 2 the
    monomial xi * xj^(w_j + k - 2) * xr^(w_r (k-1)) lies in the k-th
    symbolic power but not in the ordinary k-th power.
    """
    xi, xj, xr = triple
    i, j, r = D.index(xi), D.index(xj), D.index(xr)
    if (i, j) not in D.edges or (j, r) not in D.edges:
        raise HypothesisError(
            f"({xi},{xj}) and ({xj},{xr}) must both be directed edges")
    wj, wr = D.vertices[j].weight, D.vertices[r].weight
    if wj < 2:
        raise HypothesisError(f"middle vertex {xj!r} must have weight >= 2")
    if k < 2:
        raise HypothesisError("witness monomials are defined for k >= 2")
    m = [0] * D.n
    m[i] += 1
    m[j] += wj + k - 2
    m[r] += wr * (k - 1)
    witness = tuple(m)
    sym = symbolic_power(D, k, method="primes")
    ordn = edge_ideal(D).power(k)
    return WitnessReport(monomial=witness,
                         in_symbolic=sym.contains(witness),
                         in_ordinary=ordn.contains(witness))

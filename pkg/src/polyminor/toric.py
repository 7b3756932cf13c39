"""Primality certification for difference-of-monomial ideals.

Such an ideal is prime over fields where it behaves torically exactly
when two separate facts hold: the exponent lattice of its generators is
saturated in the ambient integer lattice (no torsion quotient), and the
ideal already equals its saturation with respect to the product of all
variables.  Both checks are exact integer computations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .binomials import LEX, ONE, Binomial, Monomial, Var, aux_var
from .groebner import (
    DEFAULT_DEGREE_CAP,
    Deadline,
    GroebnerBasis,
    buchberger,
    elimination_order,
    ideal_membership,
)

__all__ = [
    "IntegerMatrix",
    "TorsionWitness",
    "PrimalityCertificate",
    "MonomialMap",
    "exponent_lattice",
    "elementary_divisors",
    "is_saturated_lattice",
    "saturate",
    "is_prime",
    "toric_ideal_of_map",
]

SATURATION_MARKER = aux_var("m", 0)


@dataclass(frozen=True)
class IntegerMatrix:
    """Rows span the exponent lattice; columns are labeled by variables."""

    columns: tuple[Var, ...]
    rows: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return sum(1 for d in elementary_divisors(self) if d != 0)


def exponent_lattice(gens: Iterable[Binomial]) -> IntegerMatrix:
    """Matrix whose rows are the exponent vectors plus - minus of the generators.

    Columns are the variables occurring anywhere in the generators, in
    ascending variable order; duplicate and zero rows are dropped.
    """
    gens = list(gens)
    columns = sorted({v for g in gens for v in g.vars()})
    index = {v: k for k, v in enumerate(columns)}
    rows = []
    seen = set()
    for g in gens:
        row = [0] * len(columns)
        for v, e in g.plus.exps:
            row[index[v]] += e
        for v, e in g.minus.exps:
            row[index[v]] -= e
        tup = tuple(row)
        if any(tup) and tup not in seen:
            seen.add(tup)
            rows.append(tup)
    return IntegerMatrix(tuple(columns), tuple(rows))


def _smith(rows: list[list[int]], n: int) -> tuple[list[int], list[list[int]]]:
    """Diagonalize by unimodular row/column operations.

    Returns the elementary divisors (nonnegative, each dividing the next)
    and the matrix T_inv with row space relation: the original row space
    equals the span of d_t * row_t(T_inv) over the nonzero divisors.
    Column operations on the work matrix are mirrored as inverse row
    operations on T_inv.
    """
    a = [list(r) for r in rows]
    m = len(a)
    t_inv = [[1 if r == c else 0 for c in range(n)] for r in range(n)]

    def swap_cols(c1: int, c2: int) -> None:
        for r in range(m):
            a[r][c1], a[r][c2] = a[r][c2], a[r][c1]
        t_inv[c1], t_inv[c2] = t_inv[c2], t_inv[c1]

    def add_col(dst: int, src: int, q: int) -> None:
        # work matrix: col_dst += q * col_src; inverse on t_inv rows
        for r in range(m):
            a[r][dst] += q * a[r][src]
        for c in range(n):
            t_inv[src][c] -= q * t_inv[dst][c]

    divisors: list[int] = []
    t = 0
    while t < m and t < n:
        pivot = None
        for r in range(t, m):
            for c in range(t, n):
                if a[r][c] and (pivot is None or abs(a[r][c]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (r, c)
        if pivot is None:
            break
        r0, c0 = pivot
        a[t], a[r0] = a[r0], a[t]
        if c0 != t:
            swap_cols(t, c0)
        while True:
            # clear column t below/above the pivot
            dirty = False
            for r in range(m):
                if r != t and a[r][t]:
                    q = a[r][t] // a[t][t]
                    for c in range(t, n):
                        a[r][c] -= q * a[t][c]
                    if a[r][t]:
                        a[t], a[r] = a[r], a[t]
                        dirty = True
            for c in range(n):
                if c != t and a[t][c]:
                    q = a[t][c] // a[t][t]
                    add_col(c, t, -q)
                    if a[t][c]:
                        swap_cols(t, c)
                        dirty = True
            if not dirty:
                break
        # enforce divisibility of every remaining entry by the pivot
        fixed = True
        for r in range(t + 1, m):
            for c in range(t + 1, n):
                if a[r][c] % a[t][t]:
                    add_col(t, c, 1)
                    fixed = False
                    break
            if not fixed:
                break
        if not fixed:
            continue
        if a[t][t] < 0:
            for c in range(t, n):
                a[t][c] = -a[t][c]
        divisors.append(a[t][t])
        t += 1
    return divisors, t_inv


def elementary_divisors(matrix: IntegerMatrix) -> tuple[int, ...]:
    """Nonzero elementary divisors of the matrix, each dividing the next."""
    if not matrix.rows:
        return ()
    divisors, _ = _smith([list(r) for r in matrix.rows], len(matrix.columns))
    return tuple(divisors)


class TorsionWitness(NamedTuple):
    """A vector outside the lattice whose divisor multiple lies inside."""

    divisor: int
    binomial: Binomial


def _vector_binomial(vector: Iterable[int], columns: tuple[Var, ...]) -> Binomial:
    pos = Monomial((v, e) for v, e in zip(columns, vector) if e > 0)
    neg = Monomial((v, -e) for v, e in zip(columns, vector) if e < 0)
    f = Binomial.make(pos, neg, LEX)
    assert f is not None
    return f


def is_saturated_lattice(matrix: IntegerMatrix) -> tuple[bool, TorsionWitness | None]:
    """Whether the row lattice is saturated in the ambient integer lattice.

    Saturation means every elementary divisor equals one.  On failure the
    witness carries the smallest offending divisor d together with the
    lattice-external vector whose d-th multiple lies in the lattice.
    """
    if not matrix.rows:
        return True, None
    divisors, t_inv = _smith([list(r) for r in matrix.rows], len(matrix.columns))
    for idx, d in enumerate(divisors):
        if d != 1:
            witness = TorsionWitness(d, _vector_binomial(t_inv[idx], matrix.columns))
            return False, witness
    return True, None


def saturate(
    gens: Iterable[Binomial],
    *,
    degree_cap: int = DEFAULT_DEGREE_CAP,
    deadline: Deadline | None = None,
) -> tuple[Binomial, ...]:
    """Generators of the saturation of the ideal by the product of all variables.

    One variable at a time: adjoin the relation marker * variable = 1,
    compute an elimination basis, and keep the marker-free part.  Because
    saturating by one variable preserves saturation by those already
    processed, a single pass over the variables is stable.
    """
    order = elimination_order()
    current = [g.oriented(order) for g in gens]
    support = sorted({v for g in current for v in g.vars()})
    marker_mon = Monomial(((SATURATION_MARKER, 1),))
    for v in support:
        adjoined = current + [
            Binomial(marker_mon.mul(Monomial(((v, 1),))), ONE)
        ]
        basis = buchberger(adjoined, order, degree_cap=degree_cap, deadline=deadline)
        current = [g for g in basis if SATURATION_MARKER not in g.vars()]
    return tuple(sorted(current, key=lambda g: g.sort_key(LEX)))


@dataclass(frozen=True)
class PrimalityCertificate:
    """Outcome of the two-part primality test with supporting evidence."""

    verdict: str  # "prime" | "not_prime"
    lattice_saturated: bool
    saturation_equal: bool
    witness: Binomial | TorsionWitness | None

    @property
    def is_prime(self) -> bool:
        return self.verdict == "prime"


def is_prime(
    gens: Iterable[Binomial],
    *,
    degree_cap: int = DEFAULT_DEGREE_CAP,
    deadline: Deadline | None = None,
) -> PrimalityCertificate:
    """Certify primality of the ideal generated by differences of monomials.

    Prime exactly when the exponent lattice is saturated and the ideal
    equals its saturation by the product of all variables; the witness on
    failure is a torsion vector or a saturation element outside the ideal.
    """
    gens = list(gens)
    if not gens:
        return PrimalityCertificate("prime", True, True, None)
    lattice_ok, torsion = is_saturated_lattice(exponent_lattice(gens))
    saturated = saturate(gens, degree_cap=degree_cap, deadline=deadline)
    basis = buchberger(gens, LEX, degree_cap=degree_cap, deadline=deadline)
    gap: Binomial | None = None
    for f in saturated:
        if not ideal_membership(f, basis):
            gap = f
            break
    saturation_equal = gap is None
    if lattice_ok and saturation_equal:
        return PrimalityCertificate("prime", True, True, None)
    witness: Binomial | TorsionWitness | None = torsion if not lattice_ok else gap
    return PrimalityCertificate("not_prime", lattice_ok, saturation_equal, witness)


@dataclass(frozen=True)
class MonomialMap:
    """Assignment of each source variable to a monomial in target variables."""

    assignment: tuple[tuple[Var, Monomial], ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "assignment", tuple(sorted(self.assignment, key=lambda p: p[0]))
        )

    @classmethod
    def of(cls, mapping: dict[Var, Monomial]) -> "MonomialMap":
        return cls(tuple(mapping.items()))

    def sources(self) -> tuple[Var, ...]:
        return tuple(v for v, _ in self.assignment)


def toric_ideal_of_map(
    mapping: MonomialMap,
    *,
    degree_cap: int = DEFAULT_DEGREE_CAP,
    deadline: Deadline | None = None,
) -> tuple[Binomial, ...]:
    """Kernel of the monomial map, as a reduced basis in the source variables.

    Eliminates the target variables from the relations source = image.
    Target variables must rank above source variables, which holds for
    auxiliary targets over point sources.
    """
    order = elimination_order()
    relations = []
    for v, image in mapping.assignment:
        source_mon = Monomial(((v, 1),))
        if any(t <= v for t in image.vars()):
            raise ValueError(f"target monomial {image} does not dominate source {v}")
        f = Binomial.make(image, source_mon, order)
        if f is None:
            raise ValueError("image equals source variable")
        relations.append(f)
    targets = {t for _, image in mapping.assignment for t in image.vars()}
    basis = buchberger(relations, order, degree_cap=degree_cap, deadline=deadline)
    kernel = [g for g in basis if not (frozenset(g.vars()) & targets)]
    return tuple(sorted(kernel, key=lambda g: g.sort_key(LEX)))

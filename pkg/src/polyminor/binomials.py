"""Variables indexed by lattice points, monomials, and binomial generators.

Every polynomial handled downstream is a difference of two monomials with
coefficients +1 and -1.  Arithmetic therefore never leaves the monomial
level, and all results are independent of the coefficient field.
"""

from __future__ import annotations

from typing import Callable, Iterable, NamedTuple

from .geometry import CellCollection, Interval, Point, inner_intervals

__all__ = [
    "Var",
    "point_var",
    "aux_var",
    "compare_vars",
    "Monomial",
    "ONE",
    "MonomialOrder",
    "LEX",
    "Binomial",
    "inner_minor",
    "generators",
    "initial_term",
]

POINT_RANK = 0
AUX_RANK = 1


class Var(NamedTuple):
    """Polynomial variable.

    rank 0 variables are indexed by lattice points and ordered by (i, j)
    tuple comparison, so x_(i,j) > x_(k,l) iff i > k, or i = k and j > l.
    rank 1 variables are auxiliary (elimination targets, saturation
    markers) and sit above every rank 0 variable.
    """

    rank: int
    key: tuple

    @property
    def point(self) -> Point:
        if self.rank != POINT_RANK:
            raise ValueError(f"{self} is not a point variable")
        return Point(*self.key)

    def __repr__(self) -> str:
        if self.rank == POINT_RANK:
            i, j = self.key
            return f"x({i},{j})"
        label, index = self.key
        return f"{label}{index}"


def point_var(p: Point | tuple[int, int]) -> Var:
    i, j = p
    return Var(POINT_RANK, (i, j))


def aux_var(label: str, index: int) -> Var:
    return Var(AUX_RANK, (label, index))


def compare_vars(a: Var, b: Var) -> int:
    """Three-way comparison in the variable order; positive when a > b."""
    if a == b:
        return 0
    return 1 if a > b else -1


class Monomial:
    """Immutable power product.

    Exponents are stored as a tuple of (Var, exponent) pairs sorted by
    descending variable, which makes the stored tuple directly usable as
    a lexicographic sort key.
    """

    __slots__ = ("exps", "_hash")

    exps: tuple[tuple[Var, int], ...]

    def __init__(self, exps: Iterable[tuple[Var, int]]) -> None:
        merged: dict[Var, int] = {}
        for v, e in exps:
            if e < 0:
                raise ValueError(f"negative exponent on {v}")
            if e:
                merged[v] = merged.get(v, 0) + e
        object.__setattr__(
            self,
            "exps",
            tuple(sorted(merged.items(), key=lambda ve: ve[0], reverse=True)),
        )
        object.__setattr__(self, "_hash", hash(self.exps))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Monomial is immutable")

    @classmethod
    def from_vars(cls, vars_: Iterable[Var]) -> "Monomial":
        return cls((v, 1) for v in vars_)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return self.exps == other.exps

    def __hash__(self) -> int:
        return self._hash

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exps)

    def is_one(self) -> bool:
        return not self.exps

    def vars(self) -> tuple[Var, ...]:
        return tuple(v for v, _ in self.exps)

    def exponent(self, v: Var) -> int:
        for w, e in self.exps:
            if w == v:
                return e
        return 0

    def mul(self, other: "Monomial") -> "Monomial":
        return Monomial(self.exps + other.exps)

    def divides(self, other: "Monomial") -> bool:
        it = iter(other.exps)
        for v, e in self.exps:
            for w, f in it:
                if w == v:
                    if f < e:
                        return False
                    break
                if w < v:  # descending order: v cannot appear later
                    return False
            else:
                return False
        return True

    def div(self, other: "Monomial") -> "Monomial":
        """Exact division; raises when other does not divide self."""
        quotient = dict(self.exps)
        for v, e in other.exps:
            have = quotient.get(v, 0)
            if have < e:
                raise ValueError(f"{other} does not divide {self}")
            quotient[v] = have - e
        return Monomial(quotient.items())

    def gcd(self, other: "Monomial") -> "Monomial":
        theirs = dict(other.exps)
        return Monomial((v, min(e, theirs[v])) for v, e in self.exps if v in theirs)

    def lcm(self, other: "Monomial") -> "Monomial":
        merged = dict(self.exps)
        for v, e in other.exps:
            if merged.get(v, 0) < e:
                merged[v] = e
        return Monomial(merged.items())

    def __repr__(self) -> str:
        if not self.exps:
            return "1"
        parts = []
        for v, e in self.exps:
            parts.append(f"{v!r}" if e == 1 else f"{v!r}^{e}")
        return "*".join(parts)


ONE = Monomial(())


class MonomialOrder:
    """Lexicographic monomial order induced by a total key on variables.

    The default key is the variable itself, so auxiliary variables are
    eliminated first and point variables compare by (i, j); this single
    order serves both as the base lex order and as an elimination order
    for the auxiliary block.
    """

    __slots__ = ("tag", "_var_key")

    def __init__(self, tag: str, var_key: Callable[[Var], tuple] | None = None) -> None:
        self.tag = tag
        self._var_key = var_key

    def __setattr__(self, name: str, value: object) -> None:
        if name in ("tag", "_var_key") and not hasattr(self, name):
            object.__setattr__(self, name, value)
        else:
            raise AttributeError("MonomialOrder is immutable")

    def key(self, m: Monomial) -> tuple:
        """Tuple whose lexicographic comparison realizes the monomial order."""
        if self._var_key is None:
            return m.exps
        vk = self._var_key
        return tuple(
            sorted(((vk(v), e) for v, e in m.exps), key=lambda p: p[0], reverse=True)
        )

    def cmp(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.key(a), self.key(b)
        if ka == kb:
            return 0
        return 1 if ka > kb else -1

    def __repr__(self) -> str:
        return f"MonomialOrder({self.tag})"


LEX = MonomialOrder("lex")


class Binomial:
    """Difference of two distinct monomials, plus - minus.

    A Binomial does not know which side is the initial term until it has
    been oriented under an order; constructors that take an order store
    the larger side in `plus`.
    """

    __slots__ = ("plus", "minus", "_hash")

    plus: Monomial
    minus: Monomial

    def __init__(self, plus: Monomial, minus: Monomial) -> None:
        if plus == minus:
            raise ValueError("the two sides of a binomial must differ")
        object.__setattr__(self, "plus", plus)
        object.__setattr__(self, "minus", minus)
        object.__setattr__(self, "_hash", hash((plus, minus)))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Binomial is immutable")

    @classmethod
    def make(
        cls, a: Monomial, b: Monomial, order: MonomialOrder = LEX
    ) -> "Binomial | None":
        """Oriented binomial a - b, or None when the difference is zero."""
        c = order.cmp(a, b)
        if c == 0:
            return None
        return cls(a, b) if c > 0 else cls(b, a)

    def oriented(self, order: MonomialOrder = LEX) -> "Binomial":
        if order.cmp(self.plus, self.minus) >= 0:
            return self
        return Binomial(self.minus, self.plus)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Binomial):
            return NotImplemented
        return self.plus == other.plus and self.minus == other.minus

    def __hash__(self) -> int:
        return self._hash

    @property
    def degree(self) -> int:
        return max(self.plus.degree, self.minus.degree)

    def vars(self) -> frozenset[Var]:
        return frozenset(self.plus.vars()) | frozenset(self.minus.vars())

    def sort_key(self, order: MonomialOrder = LEX) -> tuple:
        return (order.key(self.plus), order.key(self.minus))

    def __repr__(self) -> str:
        return f"{self.plus!r} - {self.minus!r}"


def inner_minor(interval: Interval) -> Binomial:
    """The 2-minor of an interval: diagonal product minus anti-diagonal product.

    Oriented under LEX; the diagonal product is always the larger side
    because the upper-right corner dominates both anti-diagonal corners.
    """
    a, b = interval.lower_left, interval.upper_right
    c, d = interval.anti_diagonal_corners
    diag = Monomial.from_vars((point_var(a), point_var(b)))
    anti = Monomial.from_vars((point_var(c), point_var(d)))
    f = Binomial.make(diag, anti, LEX)
    assert f is not None and f.plus == diag
    return f


def generators(collection: CellCollection) -> tuple[Binomial, ...]:
    """Inner 2-minors of the collection in canonical interval order."""
    return tuple(inner_minor(iv) for iv in inner_intervals(collection))


def initial_term(f: Binomial, order: MonomialOrder = LEX) -> Monomial:
    """The order-larger side of the binomial."""
    return f.oriented(order).plus

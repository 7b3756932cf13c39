"""Independent reference implementations used to freeze expected test values.

Everything here is deliberately naive: different algorithms from the package,
shared with it only through the public data types. Slow is fine; these run on
desk-scale inputs.
"""

from __future__ import annotations

import itertools

from polyminor.geometry import Cell, Interval, Point, Polyomino


def naive_connected(cells: frozenset[tuple[int, int]]) -> bool:
    if not cells:
        return False
    seen = {next(iter(sorted(cells)))}
    frontier = list(seen)
    while frontier:
        i, j = frontier.pop()
        for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                frontier.append(nb)
    return seen == cells


def naive_fixed_polyominoes(n: int) -> set[frozenset[tuple[int, int]]]:
    """All fixed polyominoes with n cells, by brute subset scan.

    Enumerates n-subsets of the n x n box containing (0,0), keeps connected
    ones, and translates so min coordinates are zero. Only usable for n <= 5.
    """
    box = [(i, j) for i in range(n) for j in range(n)]
    out: set[frozenset[tuple[int, int]]] = set()
    for combo in itertools.combinations(box, n):
        cells = frozenset(combo)
        if not naive_connected(cells):
            continue
        mi = min(i for i, _ in cells)
        mj = min(j for _, j in cells)
        out.add(frozenset((i - mi, j - mj) for i, j in cells))
    return out


def naive_inner_intervals(shape: Polyomino) -> set[tuple[Point, Point]]:
    """Intervals whose every cell lies in the shape, by scanning corner pairs."""
    cells = {(c.i, c.j) for c in shape}
    lo_i = min(i for i, _ in cells)
    lo_j = min(j for _, j in cells)
    hi_i = max(i for i, _ in cells) + 1
    hi_j = max(j for _, j in cells) + 1
    found = set()
    for a_i in range(lo_i, hi_i):
        for a_j in range(lo_j, hi_j):
            for b_i in range(a_i + 1, hi_i + 1):
                for b_j in range(a_j + 1, hi_j + 1):
                    inside = all(
                        (i, j) in cells
                        for i in range(a_i, b_i)
                        for j in range(a_j, b_j)
                    )
                    if inside:
                        found.add((Point(a_i, a_j), Point(b_i, b_j)))
    return found


def naive_free_edges(shape: Polyomino) -> int:
    counts: dict[tuple[tuple[int, int], tuple[int, int]], int] = {}
    for cell in shape:
        for edge in cell.edges:
            counts[edge] = counts.get(edge, 0) + 1
    return sum(1 for v in counts.values() if v == 1)


def rewrite_monomial(exps: dict, rules: list[tuple[dict, dict]]) -> set[tuple]:
    """All normal forms of a monomial under one-directional rewrite rules.

    A rule (lhs, rhs) applies when lhs divides the monomial; the result replaces
    lhs by rhs. Explores every rewriting order; the returned set has one element
    exactly when the system is confluent on this input.
    """

    def key(m: dict) -> tuple:
        return tuple(sorted((v, e) for v, e in m.items() if e))

    def divides(lhs: dict, m: dict) -> bool:
        return all(m.get(v, 0) >= e for v, e in lhs.items())

    def apply(m: dict, lhs: dict, rhs: dict) -> dict:
        out = dict(m)
        for v, e in lhs.items():
            out[v] = out[v] - e
        for v, e in rhs.items():
            out[v] = out.get(v, 0) + e
        return {v: e for v, e in out.items() if e}

    normals: set[tuple] = set()
    stack = [exps]
    seen = set()
    while stack:
        m = stack.pop()
        k = key(m)
        if k in seen:
            continue
        seen.add(k)
        stepped = False
        for lhs, rhs in rules:
            if divides(lhs, m):
                stepped = True
                stack.append(apply(m, lhs, rhs))
        if not stepped:
            normals.add(k)
    return normals


def sympy_smith_divisors(rows: list[list[int]]) -> list[int]:
    from sympy import Matrix, ZZ
    from sympy.matrices.normalforms import smith_normal_form

    m = Matrix(rows)
    snf = smith_normal_form(m, domain=ZZ)
    divs = [abs(snf[k, k]) for k in range(min(snf.shape))]
    return [d for d in divs if d != 0]


def sympy_rank(rows: list[list[int]]) -> int:
    from sympy import Matrix

    return Matrix(rows).rank()


def interval_brute_cells(a: Point, b: Point) -> set[tuple[int, int]]:
    return {
        (i, j) for i in range(a.i, b.i) for j in range(a.j, b.j)
    }


def frame_shape() -> Polyomino:
    """3x3 block of cells minus the center: the running nonsimple example."""
    cells = [
        (i, j)
        for i in range(3)
        for j in range(3)
        if (i, j) != (1, 1)
    ]
    return Polyomino(cells)


def big_frame_shape() -> Polyomino:
    """4x4 block minus the middle 2x2."""
    cells = [
        (i, j)
        for i in range(4)
        for j in range(4)
        if not (1 <= i <= 2 and 1 <= j <= 2)
    ]
    return Polyomino(cells)

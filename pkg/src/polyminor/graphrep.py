"""Deciding whether a cell collection's ideal is the edge ideal of a graph.

A labeling assigns to every lattice point of the collection an edge of an
abstract simple graph, distinct points to distinct edges.  The ideal is
graph-representable when some labeling makes the kernel of the induced
monomial map (variable -> product of its two endpoint variables) equal to
the ideal of inner minors.  Each inner minor forces the multiset of the
four endpoint vertices on its diagonal to equal the multiset on its
anti-diagonal, which turns the search into a finite constraint problem:
unit propagation assigns forced edges, branching enumerates the few edge
candidates a partially assigned constraint leaves open, and fresh
vertices are introduced one representative at a time.  Complete
labelings are accepted only after the kernel ideal is verified to equal
the minor ideal exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .binomials import LEX, Binomial, Monomial, Var, aux_var, generators, point_var
from .geometry import CellCollection, inner_intervals
from .groebner import (
    DEFAULT_DEGREE_CAP,
    Deadline,
    GroebnerBasis,
    buchberger,
    ideal_equal,
    ideal_membership,
)
from .toric import MonomialMap, toric_ideal_of_map

__all__ = [
    "GEdge",
    "Constraint",
    "GraphLabeling",
    "TraceEvent",
    "RepVerdict",
    "relation_constraints",
    "bipartite_grid_labeling",
    "verify_representation",
    "search_labeling",
]

GEdge = tuple[int, int]


def _mkedge(u: int, v: int) -> GEdge:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class Constraint:
    """Multiset equation phi(l1) + phi(l2) = phi(r1) + phi(r2) on edge endpoints."""

    index: int
    left: tuple[Var, Var]
    right: tuple[Var, Var]

    @property
    def slots(self) -> tuple[Var, Var, Var, Var]:
        return (*self.left, *self.right)

    def side_of(self, v: Var) -> tuple[tuple[Var, Var], tuple[Var, Var]]:
        """(own side, other side) from v's point of view."""
        if v in self.left:
            return self.left, self.right
        return self.right, self.left


def relation_constraints(collection: CellCollection) -> tuple[Constraint, ...]:
    """One endpoint-multiset constraint per inner minor, in canonical order."""
    out = []
    for idx, iv in enumerate(inner_intervals(collection)):
        a, b = iv.lower_left, iv.upper_right
        c, d = iv.anti_diagonal_corners
        out.append(
            Constraint(idx, (point_var(a), point_var(b)), (point_var(c), point_var(d)))
        )
    return tuple(out)


@dataclass(frozen=True)
class GraphLabeling:
    """Injective, loop-free assignment of variables to graph edges."""

    edges: tuple[tuple[Var, GEdge], ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "edges", tuple(sorted(self.edges, key=lambda p: p[0]))
        )
        seen: set[GEdge] = set()
        for v, e in self.edges:
            if e[0] == e[1]:
                raise ValueError(f"loop edge on {v}")
            if e in seen:
                raise ValueError(f"edge {e} assigned twice")
            seen.add(e)

    @property
    def assignment(self) -> dict[Var, GEdge]:
        return dict(self.edges)

    @property
    def vertex_count(self) -> int:
        return len({u for _, e in self.edges for u in e})

    def monomial_map(self) -> MonomialMap:
        return MonomialMap.of(
            {
                v: Monomial.from_vars((aux_var("t", e[0]), aux_var("t", e[1])))
                for v, e in self.edges
            }
        )


def bipartite_grid_labeling(collection: CellCollection) -> GraphLabeling:
    """The row/column labeling: point (i, j) gets the edge {col_i, row_j}.

    Always injective and loop-free; for simple collections it is the
    canonical witness of representability.
    """
    vars_ = sorted(point_var(p) for p in collection.vertex_set)
    cols = sorted({v.key[0] for v in vars_})
    rows = sorted({v.key[1] for v in vars_})
    col_id = {i: k for k, i in enumerate(cols)}
    row_id = {j: len(cols) + k for k, j in enumerate(rows)}
    return GraphLabeling(
        tuple((v, _mkedge(col_id[v.key[0]], row_id[v.key[1]])) for v in vars_)
    )


def verify_representation(
    collection: CellCollection,
    labeling: GraphLabeling,
    *,
    degree_cap: int = DEFAULT_DEGREE_CAP,
    deadline: Deadline | None = None,
) -> bool:
    """Whether the labeling's kernel ideal equals the collection's minor ideal."""
    assigned = {v for v, _ in labeling.edges}
    needed = {point_var(p) for p in collection.vertex_set}
    if not needed <= assigned:
        raise ValueError("labeling does not cover every lattice point")
    kernel = toric_ideal_of_map(
        labeling.monomial_map(), degree_cap=degree_cap, deadline=deadline
    )
    return ideal_equal(
        kernel, generators(collection), LEX, degree_cap=degree_cap, deadline=deadline
    )


@dataclass(frozen=True)
class TraceEvent:
    """One step of the search; conflicts and rejections carry snapshots."""

    kind: str  # seed|assign|force|conflict|reject_labeling|accept|exhausted
    detail: str
    depth: int
    var: Var | None = None
    edge: GEdge | None = None
    assignment: tuple[tuple[Var, GEdge], ...] | None = None
    witness: Binomial | None = None


@dataclass(frozen=True)
class RepVerdict:
    status: str  # "representable" | "not_representable"
    labeling: GraphLabeling | None
    trace: tuple[TraceEvent, ...]

    @property
    def representable(self) -> bool:
        return self.status == "representable"


def _multiset(e1: GEdge, e2: GEdge) -> tuple[int, ...]:
    return tuple(sorted(e1 + e2))


def _subtract(total: Iterable[int], part: Iterable[int]) -> list[int] | None:
    """Exact multiset subtraction; None when part is not contained in total."""
    rest = list(total)
    for x in part:
        if x in rest:
            rest.remove(x)
        else:
            return None
    return rest


def _difference(total: Iterable[int], part: Iterable[int]) -> list[int]:
    """Multiset difference, silently dropping elements missing from total."""
    rest = list(total)
    for x in part:
        if x in rest:
            rest.remove(x)
    return rest


class _Search:
    """Mutable search state; cloned at branch points, shared trace."""

    def __init__(
        self,
        variables: tuple[Var, ...],
        constraints: tuple[Constraint, ...],
        max_vertices: int,
        ideal_basis: GroebnerBasis,
        deadline: Deadline,
        degree_cap: int,
    ) -> None:
        self.variables = variables
        self.constraints = constraints
        self.by_var: dict[Var, tuple[Constraint, ...]] = {
            v: tuple(c for c in constraints if v in c.slots) for v in variables
        }
        self.max_vertices = max_vertices
        self.ideal_basis = ideal_basis
        self.deadline = deadline
        self.degree_cap = degree_cap
        self.trace: list[TraceEvent] = []

    def snapshot(self, assignment: dict[Var, GEdge]) -> tuple[tuple[Var, GEdge], ...]:
        return tuple(sorted(assignment.items()))

    def log(self, kind: str, detail: str, depth: int, **kw) -> None:
        self.trace.append(TraceEvent(kind, detail, depth, **kw))

    # ---- propagation -------------------------------------------------

    def propagate(
        self, assignment: dict[Var, GEdge], used: dict[GEdge, Var], depth: int
    ) -> bool:
        changed = True
        while changed:
            changed = False
            for con in self.constraints:
                vals = [assignment.get(s) for s in con.slots]
                missing = [k for k, val in enumerate(vals) if val is None]
                if len(missing) > 1:
                    continue
                if not missing:
                    if _multiset(vals[0], vals[1]) != _multiset(vals[2], vals[3]):
                        self.log(
                            "conflict",
                            f"minor {con.index} violated",
                            depth,
                            assignment=self.snapshot(assignment),
                        )
                        return False
                    continue
                k = missing[0]
                hole_var = con.slots[k]
                if k < 2:
                    total = _multiset(vals[2], vals[3])
                    partner = vals[1 - k]
                else:
                    total = _multiset(vals[0], vals[1])
                    partner = vals[5 - k]
                rest = _subtract(total, partner)
                if rest is None:
                    self.log(
                        "conflict",
                        f"minor {con.index} admits no completion",
                        depth,
                        var=hole_var,
                        assignment=self.snapshot(assignment),
                    )
                    return False
                edge = _mkedge(rest[0], rest[1])
                if edge[0] == edge[1]:
                    self.log(
                        "conflict",
                        f"minor {con.index} forces a loop on {hole_var}",
                        depth,
                        var=hole_var,
                        assignment=self.snapshot(assignment),
                    )
                    return False
                if edge in used:
                    self.log(
                        "conflict",
                        f"minor {con.index} forces {hole_var} onto the edge of {used[edge]}",
                        depth,
                        var=hole_var,
                        edge=edge,
                        assignment=self.snapshot(assignment),
                    )
                    return False
                assignment[hole_var] = edge
                used[edge] = hole_var
                self.log("force", f"forced by minor {con.index}", depth,
                         var=hole_var, edge=edge)
                changed = True
        return True

    # ---- candidate generation ----------------------------------------

    def _viable(
        self, v: Var, e: GEdge, assignment: dict[Var, GEdge], used: dict[GEdge, Var]
    ) -> bool:
        for con in self.by_var[v]:
            vals = {s: assignment.get(s) for s in con.slots}
            vals[v] = e
            missing = [s for s in con.slots if vals[s] is None]
            if len(missing) > 1:
                continue
            l1, l2 = con.left
            r1, r2 = con.right
            if not missing:
                if _multiset(vals[l1], vals[l2]) != _multiset(vals[r1], vals[r2]):
                    return False
                continue
            hole = missing[0]
            own, other = con.side_of(hole)
            partner = own[0] if own[1] == hole else own[1]
            total = _multiset(vals[other[0]], vals[other[1]])
            rest = _subtract(total, vals[partner])
            if rest is None:
                return False
            forced = _mkedge(rest[0], rest[1])
            if forced[0] == forced[1]:
                return False
            if forced == e or (forced in used and used[forced] != hole):
                return False
        return True

    def _constraint_candidates(
        self,
        v: Var,
        con: Constraint,
        assignment: dict[Var, GEdge],
        next_vertex: int,
    ) -> list[GEdge] | None:
        """Finite superset of edges v may take under this constraint, or None."""
        own, other = con.side_of(v)
        partner = own[0] if own[1] == v else own[1]
        pe = assignment.get(partner)
        o1, o2 = assignment.get(other[0]), assignment.get(other[1])
        if o1 is not None and o2 is not None:
            total = _multiset(o1, o2)
            if pe is not None:
                rest = _subtract(total, pe)
                if rest is None:
                    return []
                e = _mkedge(rest[0], rest[1])
                return [] if e[0] == e[1] else [e]
            out = set()
            for a in range(4):
                for b in range(a + 1, 4):
                    e = _mkedge(total[a], total[b])
                    rest = [total[k] for k in range(4) if k not in (a, b)]
                    mate = _mkedge(rest[0], rest[1])
                    if e[0] == e[1] or mate[0] == mate[1] or e == mate:
                        continue
                    out.add(e)
            return sorted(out)
        if pe is not None and (o1 is not None) != (o2 is not None):
            oe = o1 if o1 is not None else o2
            # elements of the assigned opposite edge not covered by the partner
            need = _difference(oe, pe)
            if len(need) == 2:
                e = _mkedge(need[0], need[1])
                return [] if e[0] == e[1] else [e]
            if len(need) == 1:
                d = need[0]
                out = {
                    _mkedge(d, z)
                    for z in range(min(next_vertex + 1, self.max_vertices))
                    if z != d
                }
                return sorted(out)
        return None

    def branch_candidates(
        self,
        assignment: dict[Var, GEdge],
        used: dict[GEdge, Var],
        next_vertex: int,
    ) -> tuple[Var, list[GEdge]] | None:
        unassigned = [v for v in self.variables if v not in assignment]
        if not unassigned:
            return None
        best: tuple[int, Var, list[GEdge]] | None = None
        for v in unassigned:
            domain: list[GEdge] | None = None
            for con in self.by_var[v]:
                cand = self._constraint_candidates(v, con, assignment, next_vertex)
                if cand is not None and (domain is None or len(cand) < len(domain)):
                    domain = cand
            if domain is not None:
                if best is None or len(domain) < best[0]:
                    best = (len(domain), v, domain)
        if best is None:
            # no constraint pins anything down; enumerate for the first
            # unassigned variable touching an assigned one
            pick = None
            for v in unassigned:
                if any(assignment.get(s) is not None for c in self.by_var[v] for s in c.slots):
                    pick = v
                    break
            if pick is None:
                pick = unassigned[0]
            hi = min(next_vertex + 2, self.max_vertices)
            domain = [
                _mkedge(u, w) for u in range(hi) for w in range(u + 1, hi)
            ]
            best = (len(domain), pick, domain)
        _, v, domain = best
        filtered = [
            e
            for e in domain
            if e not in used
            and e[1] < self.max_vertices
            and self._viable(v, e, assignment, used)
        ]
        return v, filtered

    # ---- full labeling verification ----------------------------------

    def _quadratic_witness(self, assignment: dict[Var, GEdge]) -> Binomial | None:
        groups: dict[tuple[int, ...], list[Monomial]] = {}
        for a_idx, a in enumerate(self.variables):
            for b in self.variables[a_idx:]:
                key = _multiset(assignment[a], assignment[b])
                groups.setdefault(key, []).append(Monomial.from_vars((a, b)))
        for key in sorted(groups):
            mons = groups[key]
            first = mons[0]
            for m in mons[1:]:
                f = Binomial.make(first, m, LEX)
                if f is not None and not ideal_membership(f, self.ideal_basis):
                    return f
        return None

    def verify_full(
        self, assignment: dict[Var, GEdge], depth: int
    ) -> GraphLabeling | None:
        witness = self._quadratic_witness(assignment)
        if witness is not None:
            self.log(
                "reject_labeling",
                "labeling kernel contains a quadric outside the ideal",
                depth,
                assignment=self.snapshot(assignment),
                witness=witness,
            )
            return None
        labeling = GraphLabeling(tuple(assignment.items()))
        kernel = toric_ideal_of_map(
            labeling.monomial_map(),
            degree_cap=self.degree_cap,
            deadline=self.deadline,
        )
        for f in kernel:
            if not ideal_membership(f, self.ideal_basis):
                self.log(
                    "reject_labeling",
                    "labeling kernel strictly contains the ideal",
                    depth,
                    assignment=self.snapshot(assignment),
                    witness=f,
                )
                return None
        self.log("accept", "kernel equals the ideal", depth,
                 assignment=self.snapshot(assignment))
        return labeling

    # ---- depth-first search ------------------------------------------

    def dfs(
        self,
        assignment: dict[Var, GEdge],
        used: dict[GEdge, Var],
        next_vertex: int,
        depth: int,
    ) -> GraphLabeling | None:
        self.deadline.check("graph labeling search")
        if not self.propagate(assignment, used, depth):
            return None
        next_vertex = max(
            [next_vertex] + [e[1] + 1 for e in assignment.values()]
        )
        picked = self.branch_candidates(assignment, used, next_vertex)
        if picked is None:
            return self.verify_full(assignment, depth)
        v, candidates = picked
        if not candidates:
            self.log(
                "conflict",
                f"no viable edge for {v}",
                depth,
                var=v,
                assignment=self.snapshot(assignment),
            )
            return None
        for e in candidates:
            child_assignment = dict(assignment)
            child_used = dict(used)
            child_assignment[v] = e
            child_used[e] = v
            self.log("assign", "branch", depth + 1, var=v, edge=e)
            found = self.dfs(
                child_assignment, child_used, max(next_vertex, e[1] + 1), depth + 1
            )
            if found is not None:
                return found
        return None


_SEED_CASES = (
    ((0, 1), (2, 3), (0, 2), (1, 3)),
    ((0, 1), (2, 3), (0, 3), (1, 2)),
    ((0, 1), (2, 3), (1, 2), (0, 3)),
    ((0, 1), (2, 3), (1, 3), (0, 2)),
)


def search_labeling(
    collection: CellCollection,
    *,
    max_vertices: int | None = None,
    deadline: Deadline | None = None,
    degree_cap: int = DEFAULT_DEGREE_CAP,
) -> RepVerdict:
    """Exhaustive search for a representing edge labeling.

    The first minor constraint is seeded with the four ways of matching
    its diagonal edges against its anti-diagonal edges; the remaining
    three are relabelings of the first, so they are explored only when
    case one is refuted.  Fresh vertices enter one representative at a
    time and never exceed max_vertices, which defaults to twice the
    number of lattice points, enough for any representable instance; an
    exhausted search is therefore a proof of non-representability.
    """
    deadline = deadline or Deadline.unlimited()
    variables = tuple(sorted(point_var(p) for p in collection.vertex_set))
    constraints = relation_constraints(collection)
    if not constraints:
        raise ValueError("collection has no inner minors to represent")
    if max_vertices is None:
        max_vertices = 2 * len(variables)
    if max_vertices < 4:
        raise ValueError("at least four abstract vertices are required")
    ideal_basis = buchberger(
        generators(collection), LEX, degree_cap=degree_cap, deadline=deadline
    )
    participation = {
        v: len(cons)
        for v, cons in (
            (v, [c for c in constraints if v in c.slots]) for v in variables
        )
    }
    seed = max(
        constraints, key=lambda c: (sum(participation[s] for s in c.slots), -c.index)
    )
    state = _Search(
        variables, constraints, max_vertices, ideal_basis, deadline, degree_cap
    )
    for case_index, case in enumerate(_SEED_CASES):
        assignment: dict[Var, GEdge] = {}
        used: dict[GEdge, Var] = {}
        for slot, e in zip(seed.slots, case):
            assignment[slot] = e
            used[e] = slot
        state.log(
            "seed",
            f"minor {seed.index}, case {case_index + 1} of 4",
            0,
            assignment=state.snapshot(assignment),
        )
        labeling = state.dfs(assignment, used, 4, 0)
        if labeling is not None:
            return RepVerdict("representable", labeling, tuple(state.trace))
    state.log("exhausted", "all seed cases refuted", 0)
    return RepVerdict("not_representable", None, tuple(state.trace))

"""Finite differential graded Lie algebras and their Maurer-Cartan systems.

A bracket is stored as a tensor per degree pair: ``bracket[(p, q)][i][j]``
is the coordinate vector of [b_i, b_j] in degree p+q.  The axiom checker
verifies graded antisymmetry, the graded Jacobi identity in its derivation
form [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]], and the Leibniz rule
of the differential, all on basis tuples and all exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .complexes import CochainComplex, GradedVectorSpace
from .matrix import ExactMatrix, Row
from .scalars import GaussianRational, HALF, ONE, ZERO, as_scalar

BracketTensor = Dict[Tuple[int, int], List[List[Row]]]


def _zero_vec(n: int) -> Row:
    return [ZERO] * n


def _vec_add(a: Row, b: Row) -> Row:
    return [x + y for x, y in zip(a, b)]


def _vec_scale(c, a: Row) -> Row:
    c = as_scalar(c)
    return [c * x for x in a]


class DGLAModel:
    """Graded space + differential + bracket tensor."""

    def __init__(
        self,
        spaces: GradedVectorSpace,
        differential: Dict[int, ExactMatrix],
        bracket: BracketTensor,
    ):
        self.spaces = spaces
        self.complex = CochainComplex(spaces, differential)
        self.bracket_tensor: BracketTensor = {}
        for (p, q), table in bracket.items():
            np_, nq = spaces.dim(p), spaces.dim(q)
            if np_ == 0 or nq == 0:
                continue
            if len(table) != np_ or any(len(row) != nq for row in table):
                raise ValueError(f"bracket table for degrees ({p},{q}) has wrong shape")
            n_out = spaces.dim(p + q)
            for row in table:
                for vec in row:
                    if len(vec) != n_out:
                        raise ValueError(
                            f"bracket value in degrees ({p},{q}) has wrong length"
                        )
            self.bracket_tensor[(p, q)] = [
                [[as_scalar(x) for x in vec] for vec in row] for row in table
            ]

    def dim(self, k: int) -> int:
        return self.spaces.dim(k)

    def degrees(self) -> List[int]:
        return self.spaces.degrees()

    def differential(self, k: int) -> ExactMatrix:
        return self.complex.differential(k)

    def bracket_basis(self, p: int, i: int, q: int, j: int) -> Row:
        table = self.bracket_tensor.get((p, q))
        if table is None:
            return _zero_vec(self.dim(p + q))
        return list(table[i][j])

    def bracket(self, p: int, x: Sequence, q: int, y: Sequence) -> Row:
        """[x, y] for x in degree p, y in degree q (coordinate vectors)."""
        out = _zero_vec(self.dim(p + q))
        table = self.bracket_tensor.get((p, q))
        if table is None:
            return out
        for i, xi in enumerate(x):
            xi = as_scalar(xi)
            if xi.is_zero():
                continue
            for j, yj in enumerate(y):
                yj = as_scalar(yj)
                if yj.is_zero():
                    continue
                out = _vec_add(out, _vec_scale(xi * yj, table[i][j]))
        return out


@dataclass
class DGLAReport:
    """Result of the axiom check; ``violations`` holds the first witnesses."""

    antisymmetry_ok: bool = True
    jacobi_ok: bool = True
    leibniz_ok: bool = True
    violations: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.antisymmetry_ok and self.jacobi_ok and self.leibniz_ok


def check_dgla(g: DGLAModel) -> DGLAReport:
    report = DGLAReport()
    degs = g.degrees()
    sign = lambda k: ONE if k % 2 == 0 else -ONE

    for p in degs:
        for q in degs:
            for i in range(g.dim(p)):
                for j in range(g.dim(q)):
                    lhs = g.bracket_basis(p, i, q, j)
                    rhs = _vec_scale(-sign(p * q), g.bracket_basis(q, j, p, i))
                    if lhs != rhs:
                        report.antisymmetry_ok = False
                        report.violations.append(
                            f"antisymmetry fails on degrees ({p},{q}) basis ({i},{j})"
                        )
                        break
                else:
                    continue
                break

    unit = lambda n, i: [ONE if t == i else ZERO for t in range(n)]
    for p in degs:
        for q in degs:
            for r in degs:
                for i in range(g.dim(p)):
                    x = unit(g.dim(p), i)
                    for j in range(g.dim(q)):
                        y = unit(g.dim(q), j)
                        for k in range(g.dim(r)):
                            z = unit(g.dim(r), k)
                            lhs = g.bracket(p, x, q + r, g.bracket(q, y, r, z))
                            rhs = _vec_add(
                                g.bracket(p + q, g.bracket(p, x, q, y), r, z),
                                _vec_scale(
                                    sign(p * q),
                                    g.bracket(q, y, p + r, g.bracket(p, x, r, z)),
                                ),
                            )
                            if lhs != rhs:
                                report.jacobi_ok = False
                                report.violations.append(
                                    f"Jacobi fails on degrees ({p},{q},{r})"
                                    f" basis ({i},{j},{k})"
                                )

    for p in degs:
        for q in degs:
            np_, nq = g.dim(p), g.dim(q)
            if np_ == 0 or nq == 0:
                continue
            dp, dq = g.differential(p), g.differential(q)
            dout = g.differential(p + q)
            for i in range(np_):
                x = unit(np_, i)
                dx = dp.col(i)
                for j in range(nq):
                    y = unit(nq, j)
                    dy = dq.col(j)
                    lhs = dout.apply(g.bracket_basis(p, i, q, j))
                    rhs = _vec_add(
                        g.bracket(p + 1, dx, q, y),
                        _vec_scale(sign(p), g.bracket(p, x, q + 1, dy)),
                    )
                    if lhs != rhs:
                        report.leibniz_ok = False
                        report.violations.append(
                            f"Leibniz fails on degrees ({p},{q}) basis ({i},{j})"
                        )
    return report


@dataclass
class MCConstraintSystem:
    """Degree-2 truncation of the Maurer-Cartan equation d(w) + [w,w]/2 = 0.

    ``linear`` is the degree-1 differential; ``quadratic[t]`` is the
    symmetric coefficient matrix of the t-th target coordinate, so the t-th
    equation reads  (linear @ w)[t] + w^T quadratic[t] w = 0.
    """

    variables: List[str]
    target_labels: List[str]
    linear: ExactMatrix
    quadratic: List[ExactMatrix]

    @property
    def n_variables(self) -> int:
        return len(self.variables)

    @property
    def n_equations(self) -> int:
        return len(self.target_labels)

    def evaluate(self, w: Sequence) -> Row:
        vec = [as_scalar(x) for x in w]
        lin = self.linear.apply(vec)
        out = []
        for t, q in enumerate(self.quadratic):
            acc = lin[t]
            for i, xi in enumerate(vec):
                if xi.is_zero():
                    continue
                for j, xj in enumerate(vec):
                    if xj.is_zero():
                        continue
                    acc = acc + xi * xj * q[i, j]
            out.append(acc)
        return out

    def is_solution(self, w: Sequence) -> bool:
        return all(v.is_zero() for v in self.evaluate(w))


def mc_system(
    g: DGLAModel,
    variable_labels: Optional[List[str]] = None,
    target_labels: Optional[List[str]] = None,
) -> MCConstraintSystem:
    """Symbolic Maurer-Cartan constraints on the degree-1 space of ``g``."""
    report = check_dgla(g)
    if not report.passed:
        raise ValueError("not a DGLA: " + "; ".join(report.violations[:3]))
    n1 = g.dim(1)
    n2 = g.dim(2)
    variables = variable_labels or [f"w{i}" for i in range(n1)]
    targets = target_labels or [f"c{t}" for t in range(n2)]
    linear = g.differential(1)
    quadratic = []
    for t in range(n2):
        entries = [
            [
                HALF * HALF * (g.bracket_basis(1, i, 1, j)[t] + g.bracket_basis(1, j, 1, i)[t])
                for j in range(n1)
            ]
            for i in range(n1)
        ]
        quadratic.append(ExactMatrix(n1, n1, entries))
    return MCConstraintSystem(variables, targets, linear, quadratic)

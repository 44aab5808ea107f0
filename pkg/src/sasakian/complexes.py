"""Graded vector spaces, cochain complexes and exact cohomology.

A complex stores one differential matrix per degree; degrees outside the
stored range are zero spaces.  Cohomology returns dimensions together with
representative cocycles and a projection onto cohomology coordinates, all
computed by exact elimination, so quasi-isomorphism tests are decidable on
the nose.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .matrix import ExactMatrix, Row
from .scalars import ONE, ZERO
from .subspace import Subspace, image, kernel


class GradedVectorSpace:
    """Finite family of dimensions indexed by integer degree."""

    def __init__(self, dims: Dict[int, int], labels: Optional[Dict[int, List[str]]] = None):
        self._dims = {k: d for k, d in dims.items() if d > 0}
        self.labels = labels or {}
        for k, names in self.labels.items():
            if len(names) != self.dim(k):
                raise ValueError(f"label count mismatch in degree {k}")

    def dim(self, k: int) -> int:
        return self._dims.get(k, 0)

    def degrees(self) -> List[int]:
        return sorted(self._dims)

    def total_dim(self) -> int:
        return sum(self._dims.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedVectorSpace):
            return NotImplemented
        return self._dims == other._dims

    def __repr__(self) -> str:
        body = ", ".join(f"{k}: {d}" for k, d in sorted(self._dims.items()))
        return f"GradedVectorSpace({{{body}}})"


class CochainComplex:
    """Spaces plus degree-raising differentials with d_{k+1} d_k = 0."""

    def __init__(self, spaces: GradedVectorSpace, differentials: Dict[int, ExactMatrix]):
        self.spaces = spaces
        self.differentials = {}
        for k, d in differentials.items():
            if d.cols != spaces.dim(k) or d.rows != spaces.dim(k + 1):
                raise ValueError(f"differential in degree {k} has wrong shape")
            if spaces.dim(k) and spaces.dim(k + 1):
                self.differentials[k] = d
        for k in spaces.degrees():
            prod = self.differential(k + 1) @ self.differential(k)
            if not prod.is_zero():
                raise ValueError(f"d^2 != 0 between degrees {k} and {k + 2}")

    def differential(self, k: int) -> ExactMatrix:
        d = self.differentials.get(k)
        if d is not None:
            return d
        return ExactMatrix.zero(self.spaces.dim(k + 1), self.spaces.dim(k))

    def degrees(self) -> List[int]:
        return self.spaces.degrees()

    def dim(self, k: int) -> int:
        return self.spaces.dim(k)

    def cohomology(self, k: int) -> "CohomologySpace":
        return cohomology(self, k)

    def cohomology_dims(self) -> Dict[int, int]:
        return {k: cohomology(self, k).dim for k in self.degrees()}


@dataclass
class CohomologySpace:
    """H^k of a complex: dimension, cocycle representatives, projection.

    ``projection`` maps ambient coordinates to H^k coordinates; it kills
    exactly the image of the incoming differential among cocycles, and it
    is extended by zero on a complement of the cocycle space so that it is
    defined everywhere.
    """

    degree: int
    dim: int
    representatives: List[Row]
    projection: ExactMatrix
    cocycles: Subspace
    coboundaries: Subspace

    def project(self, vector: Sequence) -> Row:
        return self.projection.apply(list(vector))


def cohomology(complex_: CochainComplex, k: int) -> CohomologySpace:
    n = complex_.dim(k)
    if n == 0:
        return CohomologySpace(k, 0, [], ExactMatrix.zero(0, 0), Subspace.zero(0), Subspace.zero(0))
    cocycles = kernel(complex_.differential(k))
    coboundaries = image(complex_.differential(k - 1))
    if not cocycles.contains_subspace(coboundaries):
        raise ValueError("im d is not contained in ker d; not a complex")
    reps = cocycles.quotient_basis(coboundaries)
    # Assemble a basis [coboundaries | reps | complement] of the ambient
    # space; projection reads off the rep coordinates and kills the rest.
    columns = coboundaries.vectors() + reps
    spanned = Subspace.from_vectors(n, columns)
    columns = columns + spanned.complement_in()
    basis = ExactMatrix.from_columns(columns) if columns else ExactMatrix.identity(n)
    inv = basis.inverse()
    nb = coboundaries.dim
    proj_rows = [inv.row(nb + i) for i in range(len(reps))]
    projection = (
        ExactMatrix.from_rows(proj_rows) if proj_rows else ExactMatrix.zero(0, n)
    )
    return CohomologySpace(k, len(reps), reps, projection, cocycles, coboundaries)


class CochainMap:
    """Degreewise linear map commuting exactly with the differentials."""

    def __init__(
        self,
        source: CochainComplex,
        target: CochainComplex,
        components: Dict[int, ExactMatrix],
        name: str = "",
    ):
        self.source = source
        self.target = target
        self.name = name
        self.components = {}
        for k in sorted(set(source.degrees()) | set(target.degrees())):
            f = components.get(k, ExactMatrix.zero(target.dim(k), source.dim(k)))
            if f.cols != source.dim(k) or f.rows != target.dim(k):
                raise ValueError(f"component in degree {k} has wrong shape")
            self.components[k] = f
        for k in self.components:
            lhs = self.component(k + 1) @ source.differential(k)
            rhs = target.differential(k) @ self.component(k)
            if lhs != rhs:
                raise ValueError(f"map does not commute with d in degree {k}")

    def component(self, k: int) -> ExactMatrix:
        f = self.components.get(k)
        if f is not None:
            return f
        return ExactMatrix.zero(self.target.dim(k), self.source.dim(k))

    def induced_on_cohomology(self, k: int) -> ExactMatrix:
        hs = cohomology(self.source, k)
        ht = cohomology(self.target, k)
        cols = [ht.project(self.component(k).apply(rep)) for rep in hs.representatives]
        if not cols:
            return ExactMatrix.zero(ht.dim, 0)
        return ExactMatrix.from_columns(cols)


@dataclass
class QuasiIsoReport:
    """Per-degree verdicts for a cochain map inducing isos on cohomology."""

    map_name: str
    degrees: Dict[int, bool] = field(default_factory=dict)
    dims: Dict[int, Tuple[int, int]] = field(default_factory=dict)

    @property
    def is_quasi_isomorphism(self) -> bool:
        return all(self.degrees.values())


def is_quasi_isomorphism(f: CochainMap) -> QuasiIsoReport:
    report = QuasiIsoReport(map_name=f.name)
    degrees = sorted(set(f.source.degrees()) | set(f.target.degrees()))
    for k in degrees:
        hs = cohomology(f.source, k)
        ht = cohomology(f.target, k)
        induced = f.induced_on_cohomology(k)
        ok = hs.dim == ht.dim and induced.rank() == hs.dim
        report.degrees[k] = ok
        report.dims[k] = (hs.dim, ht.dim)
    return report


def mapping_cone_model(
    base: CochainComplex, operator: Dict[int, ExactMatrix]
) -> Tuple[CochainComplex, Dict[str, Tuple[int, int]]]:
    """Two-step extension B^k + B^{k-1} with d(x, y) = (dx + (-1)^{|y|} Ly, dy).

    ``operator`` gives for each degree k a degree-two map L: B^k -> B^{k+2}
    commuting with the base differential.  Returns the extended complex and
    an index table mapping ("x", k) / ("y", k) block names to coordinate
    slices, encoded as {"x:k"/"y:k": (offset, size)}.
    """

    def op(k: int) -> ExactMatrix:
        L = operator.get(k)
        if L is not None:
            return L
        return ExactMatrix.zero(base.dim(k + 2), base.dim(k))

    for k in base.degrees():
        lhs = op(k + 1) @ base.differential(k)
        rhs = base.differential(k + 2) @ op(k)
        if lhs != rhs:
            raise ValueError(f"operator does not commute with d in degree {k}")

    degs = base.degrees()
    dims: Dict[int, int] = {}
    layout: Dict[str, Tuple[int, int]] = {}
    all_degrees = sorted(set(degs) | {k + 1 for k in degs})
    for k in all_degrees:
        nx, ny = base.dim(k), base.dim(k - 1)
        layout[f"x:{k}"] = (0, nx)
        layout[f"y:{k}"] = (nx, ny)
        dims[k] = nx + ny
    diffs: Dict[int, ExactMatrix] = {}
    for k in all_degrees:
        nx, ny = base.dim(k), base.dim(k - 1)
        mx, my = base.dim(k + 1), base.dim(k)
        if nx + ny == 0 or mx + my == 0:
            continue
        rows = []
        dx = base.differential(k)
        dy = base.differential(k - 1)
        sign = ONE if (k - 1) % 2 == 0 else -ONE
        L = op(k - 1).scale(sign)
        for i in range(mx):
            rows.append(
                [dx[i, j] for j in range(nx)] + [L[i, j] for j in range(ny)]
            )
        for i in range(my):
            rows.append([ZERO] * nx + [dy[i, j] for j in range(ny)])
        diffs[k] = ExactMatrix(mx + my, nx + ny, rows)
    return CochainComplex(GradedVectorSpace(dims), diffs), layout


def cone_inject_x(base: CochainComplex, cone: CochainComplex) -> CochainMap:
    """The chain inclusion x -> (x, 0) of the base into a cone extension."""
    comps = {}
    for k in base.degrees():
        nx = base.dim(k)
        total = cone.dim(k)
        rows = [[ONE if i == j else ZERO for j in range(nx)] for i in range(total)]
        comps[k] = ExactMatrix(total, nx, rows)
    return CochainMap(base, cone, comps, name="base into cone")

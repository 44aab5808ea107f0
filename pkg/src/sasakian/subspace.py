"""Subspaces of Q(i)^n as column spans with a canonical basis.

Bases are canonicalised to reduced column echelon form, so two subspaces
are equal exactly when their basis matrices coincide entry by entry.
"""

from __future__ import annotations

from typing import List, Optional, Sequence

from .matrix import ExactMatrix, Row
from .scalars import ZERO


class Subspace:
    """A linear subspace of Q(i)^ambient_dim, basis stored as matrix columns."""

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, basis: ExactMatrix):
        if basis.rows != ambient_dim:
            raise ValueError("basis height must match ambient dimension")
        self.ambient_dim = ambient_dim
        self.basis = _column_echelon(basis)

    # -- constructors ---------------------------------------------------------

    @classmethod
    def from_vectors(cls, ambient_dim: int, vectors: Sequence[Row]) -> "Subspace":
        if not vectors:
            return cls(ambient_dim, ExactMatrix.zero(ambient_dim, 0))
        return cls(ambient_dim, ExactMatrix.from_columns(list(vectors)))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, ExactMatrix.zero(ambient_dim, 0))

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, ExactMatrix.identity(ambient_dim))

    # -- basic queries ----------------------------------------------------------

    @property
    def dim(self) -> int:
        return self.basis.cols

    def vectors(self) -> List[Row]:
        return self.basis.column_vectors()

    def contains(self, vector: Sequence) -> bool:
        col = ExactMatrix.column(list(vector))
        if col.rows != self.ambient_dim:
            raise ValueError("vector has wrong length")
        return self.basis.solve(col) is not None

    def coordinates(self, vector: Sequence) -> Optional[Row]:
        """Coordinates of ``vector`` in the canonical basis, or None."""
        sol = self.basis.solve(ExactMatrix.column(list(vector)))
        if sol is None:
            return None
        return sol.col(0)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.vectors())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim {self.dim} of Q(i)^{self.ambient_dim})"

    # -- lattice operations -------------------------------------------------------

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient_dim)
        stacked = self.basis.hstack(other.basis.scale(-1))
        vectors = []
        for coeffs in stacked.kernel_basis():
            vectors.append(self.basis.apply(coeffs[: self.dim]))
        return Subspace.from_vectors(self.ambient_dim, vectors)

    def add(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        return Subspace(self.ambient_dim, self.basis.hstack(other.basis))

    def quotient_basis(self, sub: "Subspace") -> List[Row]:
        """Vectors of self completing a basis of ``sub`` to one of self.

        The returned representatives span a complement of ``sub`` inside
        self, i.e. a basis of self/sub.  Raises when sub is not contained
        in self.
        """
        self._check_ambient(sub)
        if not self.contains_subspace(sub):
            raise ValueError("quotient by a non-subspace")
        work = sub.basis
        reps: List[Row] = []
        rank = work.rank()
        for v in self.vectors():
            candidate = work.hstack(ExactMatrix.column(v))
            if candidate.rank() > rank:
                work = candidate
                rank += 1
                reps.append(v)
        return reps

    def complement_in(self, ambient_basis: Optional["Subspace"] = None) -> List[Row]:
        """Representatives completing self to the given space (default: full)."""
        total = ambient_basis if ambient_basis is not None else Subspace.full(self.ambient_dim)
        return total.quotient_basis(self)

    def _check_ambient(self, other: "Subspace") -> None:
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimensions differ")


def _column_echelon(m: ExactMatrix) -> ExactMatrix:
    """Reduced column echelon form with zero columns dropped."""
    red, pivots = m.transpose().rref()
    rows = [red.row(k) for k in range(len(pivots))]
    if not rows:
        return ExactMatrix.zero(m.rows, 0)
    return ExactMatrix.from_rows(rows).transpose()


def kernel(m: ExactMatrix) -> Subspace:
    """ker(m) as a subspace of the domain Q(i)^cols."""
    return Subspace.from_vectors(m.cols, m.kernel_basis())


def image(m: ExactMatrix) -> Subspace:
    """Column span of m as a subspace of the codomain Q(i)^rows."""
    return Subspace.from_vectors(m.rows, m.column_space_basis())

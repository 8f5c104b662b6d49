"""Exact dense linear algebra over the Gaussian rationals.

Matrices are immutable; subspaces are kept in reduced row echelon form with
pivots normalized to one, so subspace equality is structural equality of the
basis.  Everything runs over the exact field; there is no floating point
anywhere in this module.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from . import kernel
from .errors import DimensionMismatch, NotContained, ParseError, SingularMatrix
from .scalar import GaussScalar, coerce

Vector = tuple[GaussScalar, ...]


def as_vector(entries: Sequence, dim: int | None = None) -> Vector:
    v = tuple(coerce(e) for e in entries)
    if any(e is NotImplemented for e in v):
        raise ParseError("vector entries must be scalars")
    if dim is not None and len(v) != dim:
        raise DimensionMismatch(f"expected a vector of length {dim}, got {len(v)}")
    return v


def _unwrap_rows(rows: Iterable[Sequence[GaussScalar]]) -> list[list[tuple]]:
    return [[e.triple for e in row] for row in rows]


class Matrix:
    """Immutable dense matrix of Gaussian rationals."""

    __slots__ = ("_nrows", "_ncols", "_t")

    def __init__(self, rows: Sequence[Sequence], ncols: int | None = None):
        data = []
        for row in rows:
            data.append(tuple(coerce(e).triple for e in row))
        if data:
            ncols = len(data[0]) if ncols is None else ncols
            if any(len(r) != ncols for r in data):
                raise DimensionMismatch("ragged rows")
        elif ncols is None:
            ncols = 0
        self._nrows = len(data)
        self._ncols = ncols
        self._t = tuple(data)

    @classmethod
    def _from_triples(cls, triples: Sequence[Sequence[tuple]], ncols: int) -> Matrix:
        m = object.__new__(cls)
        m._t = tuple(tuple(row) for row in triples)
        m._nrows = len(m._t)
        m._ncols = ncols
        return m

    @classmethod
    def identity(cls, n: int) -> Matrix:
        rows = [[kernel.ONE if i == j else kernel.ZERO for j in range(n)] for i in range(n)]
        return cls._from_triples(rows, n)

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> Matrix:
        return cls._from_triples([[kernel.ZERO] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def diagonal(cls, entries: Sequence) -> Matrix:
        n = len(entries)
        rows = [[kernel.ZERO] * n for _ in range(n)]
        for i, e in enumerate(entries):
            rows[i][i] = coerce(e).triple
        return cls._from_triples(rows, n)

    @property
    def nrows(self) -> int:
        return self._nrows

    @property
    def ncols(self) -> int:
        return self._ncols

    @property
    def shape(self) -> tuple[int, int]:
        return self._nrows, self._ncols

    def __getitem__(self, key: tuple[int, int]) -> GaussScalar:
        i, j = key
        return GaussScalar._wrap(self._t[i][j])

    def row(self, i: int) -> Vector:
        return tuple(GaussScalar._wrap(t) for t in self._t[i])

    def rows(self) -> list[Vector]:
        return [self.row(i) for i in range(self._nrows)]

    def column(self, j: int) -> Vector:
        return tuple(GaussScalar._wrap(self._t[i][j]) for i in range(self._nrows))

    def triples(self) -> list[list[tuple]]:
        return [list(r) for r in self._t]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._t == other._t

    def __hash__(self):
        return hash((self._nrows, self._ncols, self._t))

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(GaussScalar._wrap(e)) for e in row) for row in self._t)
        return f"Matrix[{self._nrows}x{self._ncols}: {body}]"

    def __add__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise DimensionMismatch("matrix addition needs equal shapes")
        rows = [
            [kernel.qadd(a, b) for a, b in zip(ra, rb)]
            for ra, rb in zip(self._t, other._t)
        ]
        return Matrix._from_triples(rows, self._ncols)

    def __sub__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise DimensionMismatch("matrix subtraction needs equal shapes")
        rows = [
            [kernel.qsub(a, b) for a, b in zip(ra, rb)]
            for ra, rb in zip(self._t, other._t)
        ]
        return Matrix._from_triples(rows, self._ncols)

    def __neg__(self) -> Matrix:
        rows = [[kernel.qneg(e) for e in row] for row in self._t]
        return Matrix._from_triples(rows, self._ncols)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self._ncols != other._nrows:
                raise DimensionMismatch("inner dimensions disagree")
            prod = kernel.mat_mul(self.triples(), other.triples())
            return Matrix._from_triples(prod, other._ncols)
        s = coerce(other)
        if s is NotImplemented:
            return NotImplemented
        rows = [[kernel.qmul(e, s.triple) for e in row] for row in self._t]
        return Matrix._from_triples(rows, self._ncols)

    def __rmul__(self, other):
        s = coerce(other)
        if s is NotImplemented:
            return NotImplemented
        rows = [[kernel.qmul(s.triple, e) for e in row] for row in self._t]
        return Matrix._from_triples(rows, self._ncols)

    def transpose(self) -> Matrix:
        rows = [[self._t[i][j] for i in range(self._nrows)] for j in range(self._ncols)]
        return Matrix._from_triples(rows, self._nrows)

    def conjugate(self) -> Matrix:
        rows = [[kernel.qconj(e) for e in row] for row in self._t]
        return Matrix._from_triples(rows, self._ncols)

    def stack(self, other: Matrix) -> Matrix:
        if self._ncols != other._ncols:
            raise DimensionMismatch("stack needs equal column counts")
        return Matrix._from_triples(list(self._t) + list(other._t), self._ncols)

    def apply(self, v: Sequence) -> Vector:
        """Matrix times column vector."""
        vec = as_vector(v, self._ncols)
        out = []
        for row in self._t:
            acc = kernel.ZERO
            for e, x in zip(row, vec):
                if not kernel.qis0(e) and x:
                    acc = kernel.qadd(acc, kernel.qmul(e, x.triple))
            out.append(GaussScalar._wrap(acc))
        return tuple(out)

    def is_real(self) -> bool:
        return all(e[1] == 0 for row in self._t for e in row)

    def is_zero(self) -> bool:
        return all(kernel.qis0(e) for row in self._t for e in row)

    def rref(self) -> tuple[Matrix, int]:
        """Reduced row echelon form and rank."""
        reduced, pivots = kernel.rref(self.triples(), self._ncols)
        return Matrix._from_triples(reduced, self._ncols), len(pivots)

    def rank(self) -> int:
        _, pivots = kernel.rref(self.triples(), self._ncols)
        return len(pivots)

    def det(self) -> GaussScalar:
        if self._nrows != self._ncols:
            raise DimensionMismatch("determinant needs a square matrix")
        return GaussScalar._wrap(kernel.det(self.triples()))

    def inverse(self) -> Matrix:
        if self._nrows != self._ncols:
            raise DimensionMismatch("inverse needs a square matrix")
        inv = kernel.mat_inv(self.triples())
        if inv is None:
            raise SingularMatrix("matrix is singular")
        return Matrix._from_triples(inv, self._ncols)

    def nullspace(self) -> Matrix:
        """Rows form a basis of {x : self @ x = 0}."""
        basis = kernel.nullspace(self.triples(), self._ncols)
        return Matrix._from_triples(basis, self._ncols)

    def to_strings(self) -> list[list[str]]:
        return [[str(GaussScalar._wrap(e)) for e in row] for row in self._t]

    @classmethod
    def from_strings(cls, rows: Sequence[Sequence[str]]) -> Matrix:
        return cls([[GaussScalar.parse(e) for e in row] for row in rows])


class Subspace:
    """A subspace of an ambient coordinate space, in canonical echelon form.

    The zero subspace is an empty basis with the ambient dimension recorded,
    so the dimension identities hold degenerately.
    """

    __slots__ = ("_ambient", "_basis", "_pivots")

    def __init__(self, ambient_dim: int, basis: Matrix, pivots: tuple[int, ...] | None = None):
        # callers go through span(); this constructor trusts canonical input
        self._ambient = ambient_dim
        self._basis = basis
        if pivots is None:
            pivots = tuple(_pivot_columns(basis))
        self._pivots = pivots

    @classmethod
    def zero(cls, ambient_dim: int) -> Subspace:
        return cls(ambient_dim, Matrix([], ncols=ambient_dim), ())

    @property
    def ambient_dim(self) -> int:
        return self._ambient

    @property
    def dim(self) -> int:
        return self._basis.nrows

    @property
    def basis(self) -> Matrix:
        return self._basis

    def basis_rows(self) -> list[Vector]:
        return self._basis.rows()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self._ambient == other._ambient and self._basis == other._basis

    def __hash__(self):
        return hash((self._ambient, self._basis))

    def __repr__(self) -> str:
        rows = "; ".join(
            ", ".join(str(GaussScalar._wrap(e)) for e in row) for row in self._basis._t
        )
        return f"Subspace[dim {self.dim} of C^{self._ambient}: {rows}]"

    def reduce(self, v: Sequence) -> Vector:
        """Residual of v after elimination against the echelon basis."""
        vec = list(as_vector(v, self._ambient))
        for k, pc in enumerate(self._pivots):
            f = vec[pc]
            if not f:
                continue
            row = self._basis.row(k)
            for j in range(pc, self._ambient):
                if row[j]:
                    vec[j] = vec[j] - f * row[j]
        return tuple(vec)

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def contains_subspace(self, other: Subspace) -> bool:
        if other._ambient != self._ambient:
            raise DimensionMismatch("ambient dimensions disagree")
        return all(self.contains(row) for row in other.basis_rows())

    def conjugate(self) -> Subspace:
        return span(self._basis.conjugate(), self._ambient)

    def sum(self, other: Subspace) -> Subspace:
        if other._ambient != self._ambient:
            raise DimensionMismatch("ambient dimensions disagree")
        return span(self._basis.stack(other._basis), self._ambient)

    def __add__(self, other: Subspace) -> Subspace:
        return self.sum(other)

    def intersect(self, other: Subspace) -> Subspace:
        if other._ambient != self._ambient:
            raise DimensionMismatch("ambient dimensions disagree")
        k1, k2 = self.dim, other.dim
        if k1 == 0 or k2 == 0:
            return Subspace.zero(self._ambient)
        # columns of the stacked system are basis vectors of self and -other;
        # kernel elements give coefficient pairs of equal combinations
        a = self._basis.triples()
        b = other._basis.triples()
        system = [
            [a[i][c] for i in range(k1)] + [kernel.qneg(b[j][c]) for j in range(k2)]
            for c in range(self._ambient)
        ]
        combos = kernel.nullspace(system, k1 + k2)
        vectors = []
        for z in combos:
            vec = [kernel.ZERO] * self._ambient
            for i in range(k1):
                f = z[i]
                if kernel.qis0(f):
                    continue
                for c in range(self._ambient):
                    if not kernel.qis0(a[i][c]):
                        vec[c] = kernel.qadd(vec[c], kernel.qmul(f, a[i][c]))
            vectors.append(vec)
        return span(Matrix._from_triples(vectors, self._ambient), self._ambient)

    def quotient_basis(self, w: Subspace) -> Matrix:
        """Representatives completing a basis of w to a basis of self."""
        if not self.contains_subspace(w):
            raise NotContained("quotient requires the given subspace to be contained")
        reps: list[Vector] = []
        current = w
        for row in self.basis_rows():
            if not current.contains(row):
                reps.append(row)
                current = current.sum(span(Matrix([row]), self._ambient))
        return Matrix(reps, ncols=self._ambient)

    def is_real(self) -> bool:
        return self._basis.is_real()

    def to_json(self) -> dict:
        return {"ambient_dim": self._ambient, "basis": self._basis.to_strings()}

    @classmethod
    def from_json(cls, doc: dict) -> Subspace:
        try:
            ambient = int(doc["ambient_dim"])
            rows = doc["basis"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad subspace document: {exc}") from exc
        matrix = Matrix.from_strings(rows) if rows else Matrix([], ncols=ambient)
        if rows and matrix.ncols != ambient:
            raise ParseError("basis row length disagrees with ambient_dim")
        return span(matrix, ambient)


def _pivot_columns(basis: Matrix) -> list[int]:
    cols = []
    for row in basis._t:
        for j, e in enumerate(row):
            if not kernel.qis0(e):
                cols.append(j)
                break
    return cols


def span(vectors: Matrix | Sequence[Sequence], ambient_dim: int | None = None) -> Subspace:
    """Canonical subspace spanned by the given row vectors."""
    matrix = vectors if isinstance(vectors, Matrix) else Matrix(vectors, ncols=ambient_dim)
    if ambient_dim is None:
        ambient_dim = matrix.ncols
    if matrix.nrows and matrix.ncols != ambient_dim:
        raise DimensionMismatch(
            f"vectors live in dimension {matrix.ncols}, ambient is {ambient_dim}"
        )
    reduced, pivots = kernel.rref(matrix.triples(), ambient_dim)
    basis = Matrix._from_triples(reduced[: len(pivots)], ambient_dim)
    return Subspace(ambient_dim, basis, tuple(pivots))

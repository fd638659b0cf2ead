"""Sparse exact matrices over a cyclotomic field.

Column-major storage: a matrix is a dict mapping column index to a dict of
row index -> CycNum.  Columns are the natural unit here because operators
are assembled column-by-column from their action on basis vectors.
"""


class SparseMat:
    __slots__ = ("nrows", "ncols", "cols")

    def __init__(self, nrows, ncols, cols=None):
        self.nrows = nrows
        self.ncols = ncols
        self.cols = cols if cols is not None else {}

    @classmethod
    def identity(cls, n, ctx):
        return cls(n, n, {i: {i: ctx.one} for i in range(n)})

    @classmethod
    def diagonal(cls, values):
        cols = {i: {i: v} for i, v in enumerate(values) if not v.is_zero()}
        return cls(len(values), len(values), cols)

    def set(self, r, c, v):
        if v.is_zero():
            col = self.cols.get(c)
            if col is not None:
                col.pop(r, None)
                if not col:
                    del self.cols[c]
        else:
            self.cols.setdefault(c, {})[r] = v

    def get(self, r, c, zero):
        return self.cols.get(c, {}).get(r, zero)

    def apply(self, vec):
        """Matrix * vector for a sparse vector {row: CycNum}."""
        out = {}
        for r, v in vec.items():
            col = self.cols.get(r)
            if col is None:
                continue
            for r2, m in col.items():
                c = out[r2] + m * v if r2 in out else m * v
                if c.is_zero():
                    out.pop(r2, None)
                else:
                    out[r2] = c
        return out

    def __mul__(self, other):
        if not isinstance(other, SparseMat):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        cols = {}
        for c, col in other.cols.items():
            new = self.apply(col)
            if new:
                cols[c] = new
        return SparseMat(self.nrows, other.ncols, cols)

    def scale(self, s):
        if s.is_zero():
            return SparseMat(self.nrows, self.ncols, {})
        cols = {c: {r: s * v for r, v in col.items()} for c, col in self.cols.items()}
        return SparseMat(self.nrows, self.ncols, cols)

    def __add__(self, other):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise ValueError("shape mismatch")
        cols = {c: dict(col) for c, col in self.cols.items()}
        for c, col in other.cols.items():
            mine = cols.setdefault(c, {})
            for r, v in col.items():
                s = mine[r] + v if r in mine else v
                if s.is_zero():
                    mine.pop(r, None)
                else:
                    mine[r] = s
            if not mine:
                del cols[c]
        return SparseMat(self.nrows, self.ncols, cols)

    def __neg__(self):
        return SparseMat(
            self.nrows,
            self.ncols,
            {c: {r: -v for r, v in col.items()} for c, col in self.cols.items()},
        )

    def __sub__(self, other):
        return self + (-other)

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative matrix power not supported")
        if self.nrows != self.ncols:
            raise ValueError("power of a non-square matrix")
        result = None
        for _ in range(k):
            result = self if result is None else result * self
        if result is None:
            raise ValueError("use identity() for the 0th power")
        return result

    def transpose(self):
        cols = {}
        for c, col in self.cols.items():
            for r, v in col.items():
                cols.setdefault(r, {})[c] = v
        return SparseMat(self.ncols, self.nrows, cols)

    def conj_transpose(self):
        """Hermitean adjoint: transpose with entry-wise zeta -> zeta^{-1}."""
        cols = {}
        for c, col in self.cols.items():
            for r, v in col.items():
                cols.setdefault(r, {})[c] = v.conj()
        return SparseMat(self.ncols, self.nrows, cols)

    def kron(self, other):
        """Tensor product; row/col index = self_index * other_dim + other_index."""
        cols = {}
        for c1, col1 in self.cols.items():
            for c2, col2 in other.cols.items():
                col = {}
                for r1, v1 in col1.items():
                    for r2, v2 in col2.items():
                        col[r1 * other.nrows + r2] = v1 * v2
                if col:
                    cols[c1 * other.ncols + c2] = col
        return SparseMat(self.nrows * other.nrows, self.ncols * other.ncols, cols)

    def is_zero(self):
        return all(not col for col in self.cols.values())

    def __eq__(self, other):
        if not isinstance(other, SparseMat):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        raise TypeError("SparseMat is not hashable")

    def nnz(self):
        return sum(len(col) for col in self.cols.values())

    def first_nonzero(self):
        """(row, col, value) of some nonzero entry, or None."""
        for c in sorted(self.cols):
            col = self.cols[c]
            for r in sorted(col):
                return (r, c, col[r])
        return None

    def to_triplets(self):
        out = []
        for c in sorted(self.cols):
            for r in sorted(self.cols[c]):
                out.append([r, c, str(self.cols[c][r])])
        return out

    def numeric(self):
        """Dense list-of-lists of complex entries (for float cross-checks)."""
        out = [[0j] * self.ncols for _ in range(self.nrows)]
        for c, col in self.cols.items():
            for r, v in col.items():
                out[r][c] = v.numeric()
        return out


def commutator(a, b):
    return a * b - b * a

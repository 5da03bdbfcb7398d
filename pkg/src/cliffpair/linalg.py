"""Dense exact linear algebra over the field contexts.

Vectors are tuples of field elements; matrices act on column vectors.
Subspaces are kept in reduced row echelon form, so equal subspaces have
identical representations.  Over binary extensions the heavy routines run
on bitplane-packed rows (one int per coefficient bit per row), which is
what makes 128-dim Clifford computations cheap; function fields take the
generic path.
"""

from __future__ import annotations

from .fields import BinaryField, Poly


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_scale(c, u):
    return tuple(c * a for a in u)


def vec_dot(u, v):
    it = iter(zip(u, v))
    a, b = next(it)
    s = a * b
    for a, b in it:
        s = s + a * b
    return s


def vec_is_zero(u):
    return all(a.is_zero() for a in u)


# ---------------------------------------------------------------------------
# packed kernel for binary fields: a row of n entries over GF(2^k) is a list
# of k ints, plane b holding bit b of every entry.

def _pack_row(field, row):
    k = field.k
    planes = [0] * k
    for j, e in enumerate(row):
        v = e.v
        b = 0
        while v:
            if v & 1:
                planes[b] |= 1 << j
            v >>= 1
            b += 1
    return planes


def _unpack_row(field, planes, n):
    k = field.k
    out = []
    for j in range(n):
        v = 0
        for b in range(k):
            v |= ((planes[b] >> j) & 1) << b
        out.append(field.elt(v))
    return out


def _row_entry(planes, j):
    v = 0
    for b, p in enumerate(planes):
        v |= ((p >> j) & 1) << b
    return v


def _row_scale(field, planes, c):
    if c == 1:
        return list(planes)
    masks = field.scalar_masks(c)
    k = field.k
    out = [0] * k
    for i in range(k):
        m = masks[i]
        acc = 0
        j = 0
        while m:
            if m & 1:
                acc ^= planes[j]
            m >>= 1
            j += 1
        out[i] = acc
    return out


def _row_addmul(field, dst, src, c):
    # dst ^= c * src, in place
    if c == 0:
        return
    s = src if c == 1 else _row_scale(field, src, c)
    for b in range(field.k):
        dst[b] ^= s[b]


def _packed_rref(field, rows, ncols):
    """In-place reduced row echelon form; returns the pivot column list."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        sel = -1
        for i in range(r, nrows):
            if _row_entry(rows[i], c):
                sel = i
                break
        if sel < 0:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        pv = _row_entry(rows[r], c)
        if pv != 1:
            rows[r] = _row_scale(field, rows[r], field.inv_int(pv))
        for i in range(nrows):
            if i != r:
                a = _row_entry(rows[i], c)
                if a:
                    _row_addmul(field, rows[i], rows[r], a)
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


# generic fallback (function fields)

def _generic_rref(field, rows, ncols):
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        sel = -1
        for i in range(r, nrows):
            if not rows[i][c].is_zero():
                sel = i
                break
        if sel < 0:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        pv = rows[r][c]
        if pv != field.one:
            inv = pv.inv()
            rows[r] = [inv * e for e in rows[r]]
        for i in range(nrows):
            if i != r:
                a = rows[i][c]
                if not a.is_zero():
                    ri, rr = rows[i], rows[r]
                    rows[i] = [ri[j] + a * rr[j] for j in range(ncols)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


class Mat:
    """Dense matrix over one field context."""

    __slots__ = ("field", "m", "n", "rows")

    def __init__(self, field, rows):
        self.field = field
        self.rows = [list(r) for r in rows]
        self.m = len(self.rows)
        self.n = len(self.rows[0]) if self.rows else 0
        for r in self.rows:
            assert len(r) == self.n, "ragged rows"

    # -- constructors --------------------------------------------------------

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field, m, n):
        z = field.zero
        return cls(field, [[z] * n for _ in range(m)])

    @classmethod
    def from_cols(cls, field, cols):
        m = len(cols[0]) if cols else 0
        return cls(field, [[c[i] for c in cols] for i in range(m)])

    @classmethod
    def diag(cls, field, entries):
        z = field.zero
        n = len(entries)
        return cls(field, [[entries[i] if i == j else z for j in range(n)] for i in range(n)])

    def copy(self):
        return Mat(self.field, self.rows)

    # -- basics ---------------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row(self, i):
        return tuple(self.rows[i])

    def col(self, j):
        return tuple(r[j] for r in self.rows)

    def __eq__(self, other):
        return (isinstance(other, Mat) and other.field == self.field
                and other.rows == self.rows)

    def __hash__(self):
        return hash((self.field, tuple(tuple(r) for r in self.rows)))

    def __add__(self, other):
        assert self.m == other.m and self.n == other.n
        return Mat(self.field, [[a + b for a, b in zip(r1, r2)]
                                for r1, r2 in zip(self.rows, other.rows)])

    __sub__ = __add__

    def scale(self, c):
        return Mat(self.field, [[c * e for e in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, Mat):
            assert self.n == other.m, "shape mismatch"
            F = self.field
            if isinstance(F, BinaryField):
                brows = [_pack_row(F, r) for r in other.rows]
                k = F.k
                out = []
                for r in self.rows:
                    acc = [0] * k
                    for j, e in enumerate(r):
                        if e.v:
                            _row_addmul(F, acc, brows[j], e.v)
                    out.append(_unpack_row(F, acc, other.n))
                return Mat(F, out)
            z = F.zero
            out = [[z] * other.n for _ in range(self.m)]
            for i in range(self.m):
                ri = self.rows[i]
                oi = out[i]
                for j, e in enumerate(ri):
                    if e.is_zero():
                        continue
                    ro = other.rows[j]
                    for c in range(other.n):
                        if not ro[c].is_zero():
                            oi[c] = oi[c] + e * ro[c]
            return Mat(F, out)
        return self.scale(other)

    def __pow__(self, e):
        assert self.m == self.n
        r = Mat.identity(self.field, self.n)
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def apply(self, v):
        """Matrix times column vector."""
        assert len(v) == self.n
        out = []
        z = self.field.zero
        for r in self.rows:
            s = z
            for a, b in zip(r, v):
                if not (a.is_zero() or b.is_zero()):
                    s = s + a * b
            out.append(s)
        return tuple(out)

    def transpose(self):
        return Mat(self.field, [[self.rows[i][j] for i in range(self.m)]
                                for j in range(self.n)])

    def trace(self):
        assert self.m == self.n
        s = self.field.zero
        for i in range(self.m):
            s = s + self.rows[i][i]
        return s

    def is_zero(self):
        return all(e.is_zero() for r in self.rows for e in r)

    def hstack(self, other):
        assert self.m == other.m
        return Mat(self.field, [r1 + r2 for r1, r2 in zip(self.rows, other.rows)])

    def vstack(self, other):
        assert self.n == other.n
        return Mat(self.field, self.rows + other.rows)

    def kron(self, other):
        F = self.field
        out = []
        for i in range(self.m):
            for p in range(other.m):
                row = []
                for j in range(self.n):
                    a = self.rows[i][j]
                    if a.is_zero():
                        row.extend([F.zero] * other.n)
                    else:
                        row.extend([a * b for b in other.rows[p]])
                out.append(row)
        return Mat(F, out)

    # -- elimination ----------------------------------------------------------

    def rref(self):
        """(reduced row echelon Mat, pivot columns)."""
        F = self.field
        if isinstance(F, BinaryField):
            rows = [_pack_row(F, r) for r in self.rows]
            pivots = _packed_rref(F, rows, self.n)
            out = [_unpack_row(F, r, self.n) for r in rows]
        else:
            rows = [list(r) for r in self.rows]
            pivots = _generic_rref(F, rows, self.n)
            out = rows
        return Mat(F, out), pivots

    def rank(self):
        return len(self.rref()[1])

    def kernel(self):
        """Nullspace {x : A x = 0} as a Subspace of F^n."""
        R, pivots = self.rref()
        F = self.field
        pivset = set(pivots)
        free = [c for c in range(self.n) if c not in pivset]
        basis = []
        for f in free:
            v = [F.zero] * self.n
            v[f] = F.one
            for r, p in enumerate(pivots):
                v[p] = R.rows[r][f]      # char 2: -a = a
            basis.append(v)
        return Subspace.from_rows(F, self.n, basis)

    def solve(self, b):
        """One solution of A x = b, or None if inconsistent."""
        aug = self.hstack(Mat.from_cols(self.field, [list(b)]))
        R, pivots = aug.rref()
        if self.n in pivots:
            return None
        F = self.field
        x = [F.zero] * self.n
        for r, p in enumerate(pivots):
            x[p] = R.rows[r][self.n]
        return tuple(x)

    def inverse(self):
        assert self.m == self.n
        aug = self.hstack(Mat.identity(self.field, self.n))
        R, pivots = aug.rref()
        if len(pivots) != self.n or pivots != list(range(self.n)):
            raise ValueError("matrix is singular")
        return Mat(self.field, [r[self.n:] for r in R.rows])

    def is_invertible(self):
        return self.m == self.n and self.rank() == self.n

    def char_poly(self):
        """Characteristic polynomial, monic, via the Berkowitz division-free
        recursion (valid over any commutative ring, in particular char 2)."""
        n = self.m
        assert n == self.n
        F = self.field
        if n == 0:
            return Poly.one(F)
        A = self
        # transforms[j] is the Toeplitz matrix taking the char poly vector of
        # the leading (j+1)x(j+1) block to that of the (j+2)x(j+2) block
        transforms = []
        for size in range(n, 1, -1):
            k = size - 1
            R = [A.rows[k][j] for j in range(k)]
            C = [A.rows[i][k] for i in range(k)]
            a = A.rows[k][k]
            sub = Mat(F, [r[:k] for r in A.rows[:k]])
            items = [C]
            for _ in range(size - 2):
                items.append(sub.apply(items[-1]))
            firstcol = [F.one, -a] + [-vec_dot(R, B) for B in items]
            T = Mat.zeros(F, size + 1, size)
            for i in range(size):
                for ii in range(i, size + 1):
                    T.rows[ii][i] = firstcol[ii - i]
            transforms.append(T)
            A = sub
        poly = (F.one, -A.rows[0][0])
        for T in reversed(transforms):
            poly = T.apply(poly)
        # poly holds monic coefficients in descending degree
        return Poly(F, list(reversed(poly)))

    def __repr__(self):
        body = "; ".join(",".join(str(e) for e in r) for r in self.rows)
        return "Mat[%s]" % body


class Subspace:
    """Row space kept in RREF: the canonical representative of a subspace."""

    __slots__ = ("field", "ambient", "basis", "pivots")

    def __init__(self, field, ambient, basis, pivots):
        self.field = field
        self.ambient = ambient
        self.basis = basis
        self.pivots = tuple(pivots)

    @classmethod
    def from_rows(cls, field, ambient, rows):
        rows = [list(r) for r in rows if not vec_is_zero(r)]
        if not rows:
            return cls(field, ambient, Mat.zeros(field, 0, ambient), ())
        R, pivots = Mat(field, rows).rref()
        keep = [R.rows[i] for i in range(len(pivots))]
        return cls(field, ambient, Mat(field, keep), pivots)

    @classmethod
    def zero(cls, field, ambient):
        return cls.from_rows(field, ambient, [])

    @classmethod
    def full(cls, field, ambient):
        return cls.from_rows(field, ambient, Mat.identity(field, ambient).rows)

    @property
    def dim(self):
        return len(self.pivots)

    def coords(self, v):
        """Coordinates of v in the RREF basis, or None if v is outside."""
        v = list(v)
        cs = []
        for i, p in enumerate(self.pivots):
            c = v[p]
            cs.append(c)
            if not c.is_zero():
                row = self.basis.rows[i]
                v = [a + c * b for a, b in zip(v, row)]
        if not all(a.is_zero() for a in v):
            return None
        return tuple(cs)

    def contains(self, v):
        return self.coords(v) is not None

    def __le__(self, other):
        return all(other.contains(r) for r in self.basis.rows)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.field == other.field
                and self.ambient == other.ambient
                and self.pivots == other.pivots
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.field, self.ambient, self.pivots,
                     tuple(tuple(r) for r in self.basis.rows)))

    def __add__(self, other):
        assert self.ambient == other.ambient
        return Subspace.from_rows(self.field, self.ambient,
                                  self.basis.rows + other.basis.rows)

    def intersect(self, other):
        """Zassenhaus: row reduce [U|U; V|0], read the 0|W block."""
        assert self.ambient == other.ambient
        F, n = self.field, self.ambient
        rows = []
        for r in self.basis.rows:
            rows.append(list(r) + list(r))
        z = [F.zero] * n
        for r in other.basis.rows:
            rows.append(list(r) + z)
        if not rows:
            return Subspace.zero(F, n)
        R, pivots = Mat(F, rows).rref()
        out = []
        for i in range(len(pivots)):
            if pivots[i] >= n:
                out.append(R.rows[i][n:])
        return Subspace.from_rows(F, n, out)

    def __repr__(self):
        return "Subspace(dim=%d, ambient=%d)" % (self.dim, self.ambient)


# -- module-level operation names -------------------------------------------

def solve(A, b):
    return A.solve(b)


def kernel(A):
    return A.kernel()


def subspace_intersect(U, V):
    return U.intersect(V)


def char_poly(A):
    return A.char_poly()


def common_kernel(blocks, n, field):
    """Common nullspace of a family of matrices, refined block by block
    (cheap when the space collapses early)."""
    S = Mat.identity(field, n)          # rows span the current solution space
    for B in blocks:
        M = S * B.transpose()           # rows: candidate x times B^T
        Y = M.kernel()                  # combinations killing this block
        if Y.dim == M.m:
            continue
        if Y.dim == 0:
            return Subspace.zero(field, n)
        S = Y.basis * S
    return Subspace.from_rows(field, n, S.rows)


class CoordSolver:
    """Fixes a list of independent vectors and answers coordinate queries
    against that exact list (not its RREF)."""

    def __init__(self, field, rows):
        self.field = field
        self.m = len(rows)
        self.n = len(rows[0]) if rows else 0
        aug = Mat(field, [list(r) for r in rows]).hstack(Mat.identity(field, self.m))
        R, pivots = aug.rref()
        pivots = [p for p in pivots if p < self.n]
        if len(pivots) != self.m:
            raise ValueError("rows are dependent")
        self.pivots = pivots
        self.rref = Mat(field, [r[:self.n] for r in R.rows])
        self.E = Mat(field, [r[self.n:] for r in R.rows])   # E * rows = rref

    def coords(self, v):
        """c with sum_i c_i rows_i = v, or None."""
        v = list(v)
        ys = [self.field.zero] * self.m
        for i, p in enumerate(self.pivots):
            c = v[p]
            ys[i] = c
            if not c.is_zero():
                row = self.rref.rows[i]
                v = [a + c * b for a, b in zip(v, row)]
        if not all(a.is_zero() for a in v):
            return None
        # v = ys . rref = ys . E . rows
        out = [self.field.zero] * self.m
        for i, y in enumerate(ys):
            if not y.is_zero():
                er = self.E.rows[i]
                for j in range(self.m):
                    out[j] = out[j] + y * er[j]
        return tuple(out)

"""Nonsingular quadratic forms in characteristic 2.

A form on F^n is stored by its upper-triangular Gram matrix U, with
q(x) = x^T U x; the polar form U + U^T is alternating, and q is
nonsingular when the polar is invertible (even dimension forced).
"""

from __future__ import annotations

from .fields import ASClass, BinaryField, UndecidedError, artin_schreier_class, artin_schreier_solve
from .linalg import Mat, vec_add, vec_is_zero, vec_scale


class SingularFormError(ValueError):
    pass


class UnsupportedFieldError(ValueError):
    """Raised where isotropy / Witt decisions would be needed over a
    rational function field."""


class QForm:
    __slots__ = ("field", "dim", "gram", "_polar", "_sympl")

    def __init__(self, field, gram_rows, check=True):
        self.field = field
        rows = [list(r) for r in gram_rows]
        self.dim = len(rows)
        for i, r in enumerate(rows):
            assert len(r) == self.dim, "gram must be square"
            for j in range(i):
                assert r[j].is_zero(), "gram must be upper triangular"
        self.gram = Mat(field, rows) if rows else Mat(field, [])
        self._polar = None
        self._sympl = None
        if check and self.dim and not self.polar().is_invertible():
            raise SingularFormError("polar form is degenerate")

    # -- evaluation -----------------------------------------------------------

    def __call__(self, v):
        assert len(v) == self.dim
        s = self.field.zero
        for i in range(self.dim):
            a = v[i]
            if a.is_zero():
                continue
            row = self.gram.rows[i]
            for j in range(i, self.dim):
                b = v[j]
                if not (b.is_zero() or row[j].is_zero()):
                    s = s + a * b * row[j]
        return s

    def polar(self):
        if self._polar is None:
            self._polar = self.gram + self.gram.transpose()
        return self._polar

    def b(self, v, w):
        P = self.polar()
        s = self.field.zero
        for i, a in enumerate(v):
            if a.is_zero():
                continue
            row = P.rows[i]
            for j, c in enumerate(w):
                if not (c.is_zero() or row[j].is_zero()):
                    s = s + a * c * row[j]
        return s

    # -- constructions ----------------------------------------------------------

    def perp(self, other):
        self.field.check_same(other.field)
        F = self.field
        n1, n2 = self.dim, other.dim
        rows = []
        for i in range(n1):
            rows.append(list(self.gram.rows[i]) + [F.zero] * n2)
        for i in range(n2):
            rows.append([F.zero] * n1 + list(other.gram.rows[i]))
        return QForm(F, rows, check=False)

    def scale(self, c):
        if c.is_zero():
            raise ValueError("scale by 0")
        return QForm(self.field, [[c * e for e in r] for r in self.gram.rows], check=False)

    def transform(self, P):
        """The form x -> q(P x); P must be invertible."""
        assert P.is_invertible()
        M = P.transpose() * self.gram * P
        return QForm(self.field, _fold_upper(M).rows, check=False)

    def __eq__(self, other):
        return (isinstance(other, QForm) and other.field == self.field
                and other.gram == self.gram)

    def __repr__(self):
        return "QForm(dim=%d over %r)" % (self.dim, self.field)


def _fold_upper(M):
    """Upper-triangular representative of the quadratic form x^T M x."""
    F = M.field
    n = M.m
    rows = [[F.zero] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = M.rows[i][i]
        for j in range(i + 1, n):
            rows[i][j] = M.rows[i][j] + M.rows[j][i]
    return Mat(F, rows)


def binary_block(field, b1, b2):
    """[b1, b2]: the form b1 x^2 + x y + b2 y^2."""
    z, o = field.zero, field.one
    return QForm(field, [[b1, o], [z, b2]])


def blocks_form(field, pairs):
    q = QForm(field, [])
    for b1, b2 in pairs:
        q = q.perp(binary_block(field, field.elt(b1) if isinstance(b1, int) else b1,
                                field.elt(b2) if isinstance(b2, int) else b2))
    return q


def hyperbolic(field, m):
    return blocks_form(field, [(field.zero, field.zero)] * m)


def symplectic_basis(q):
    """Pairs (e_i, e_i') with b(e_i, e_i') = 1, blocks orthogonal to each
    other, and a_i = q(e_i) != 0 (always achievable for nonsingular q).

    Returns a list of (e, e', a, b) with vectors in the coordinates of q.
    Deterministic: lowest-index candidates win.
    """
    if q._sympl is not None:
        return q._sympl
    F = q.field
    n = q.dim
    if n % 2:
        raise SingularFormError("odd-dimensional forms are singular in char 2")
    basis = [tuple(Mat.identity(F, n).rows[i]) for i in range(n)]
    out = []
    while basis:
        # anisotropic vector among basis vectors and pairwise sums
        v = None
        for cand in basis:
            if not q(cand).is_zero():
                v = cand
                break
        if v is None:
            for i in range(len(basis)):
                for j in range(i + 1, len(basis)):
                    cand = vec_add(basis[i], basis[j])
                    if not q(cand).is_zero():
                        v = cand
                        break
                if v is not None:
                    break
        assert v is not None, "nonsingular form with no anisotropic vector"
        w = None
        for cand in basis:
            bv = q.b(v, cand)
            if not bv.is_zero():
                w = vec_scale(bv.inv(), cand)
                break
        assert w is not None, "polar degenerate on the complement"
        a, bb = q(v), q(w)
        out.append((v, w, a, bb))
        # polar-orthogonal complement of span(v, w)
        new_basis = []
        for u in basis:
            u2 = vec_add(u, vec_add(vec_scale(q.b(u, w), v), vec_scale(q.b(u, v), w)))
            if not vec_is_zero(u2):
                new_basis.append(u2)
        # keep an independent subset, lowest index first
        picked = []
        if new_basis:
            M = Mat(F, [list(r) for r in new_basis])
            _, pivots = M.transpose().rref()
            picked = [new_basis[i] for i in pivots]
        basis = picked
        assert len(basis) % 2 == 0
    # re-evaluate everything once as a guard
    for (e, ep, a, bb) in out:
        assert q(e) == a and q(ep) == bb and q.b(e, ep) == F.one
    for i in range(len(out)):
        for j in range(i + 1, len(out)):
            for x in out[i][:2]:
                for y in out[j][:2]:
                    assert q.b(x, y).is_zero()
    q._sympl = out
    return out


def arf(q):
    """The Arf class sum a_i b_i in F/wp(F); the raw representative is
    always available, the class bit only over binary extensions."""
    pairs = symplectic_basis(q)
    s = q.field.zero
    for (_, _, a, b) in pairs:
        s = s + a * b
    return ASClass(s)


class BilForm:
    """Symmetric bilinear form given by its full symmetric matrix."""

    __slots__ = ("field", "dim", "mat")

    def __init__(self, field, mat_rows):
        self.field = field
        self.mat = Mat(field, mat_rows)
        self.dim = self.mat.m
        assert self.mat == self.mat.transpose(), "bilinear form must be symmetric"

    @classmethod
    def diagonal(cls, field, entries):
        return cls(field, Mat.diag(field, list(entries)).rows)

    @classmethod
    def pfister(cls, field, bs):
        """<<b_1, ..., b_r>> = tensor of <1, b_i> (char 2: -b = b)."""
        out = cls.diagonal(field, [field.one])
        for b in bs:
            if b.is_zero():
                raise ValueError("Pfister slots must be nonzero")
            out = cls(field, out.mat.kron(Mat.diag(field, [field.one, b])).rows)
        return out

    def __call__(self, v, w):
        s = self.field.zero
        for i, a in enumerate(v):
            if a.is_zero():
                continue
            row = self.mat.rows[i]
            for j, c in enumerate(w):
                if not (c.is_zero() or row[j].is_zero()):
                    s = s + a * c * row[j]
        return s


def tensor_bil_quad(bil, q):
    """b tensor q on W tensor V, basis w_i tensor v_j ordered w-major.

    On pure tensors (b tensor q)(w tensor v) = b(w, w) q(v); the polar of
    the result is b tensor (polar of q).
    """
    bil.field.check_same(q.field)
    F = q.field
    r, n = bil.dim, q.dim
    N = r * n
    rows = [[F.zero] * N for _ in range(N)]
    Bq = q.polar()
    for i in range(r):
        for j in range(i, r):
            c = bil.mat.rows[i][j]
            if c.is_zero():
                continue
            for k in range(n):
                if i == j:
                    for l in range(k, n):
                        rows[i * n + k][j * n + l] = c * q.gram.rows[k][l]
                else:
                    for l in range(n):
                        rows[i * n + k][j * n + l] = c * Bq.rows[k][l]
    out = QForm(F, rows)
    return out


def pfister_quad(field, bs, c):
    """<<b_1, ..., b_{m-1}, c]] = <<b_1, ..., b_{m-1}>> tensor [1, c]."""
    base = binary_block(field, field.one, c)
    if not bs:
        return base
    return tensor_bil_quad(BilForm.pfister(field, list(bs)), base)


def quaternion_norm_form(field, a, b):
    """Reduced norm of the quaternion algebra [a, b) on the basis
    (1, u, v, w): [1, a] perp b*[1, a], which is <<b, a]]."""
    if b.is_zero():
        raise ValueError("quaternion slot b must be nonzero")
    z, o = field.zero, field.one
    return QForm(field, [
        [o, o, z, z],
        [z, a, z, z],
        [z, z, b, b],
        [z, z, z, a * b],
    ])


def _require_binary(q):
    if not isinstance(q.field, BinaryField):
        raise UnsupportedFieldError(
            "isotropy and Witt decisions are not attempted over %r" % q.field)


def is_isotropic(q):
    """Exhaustive check over small binary fields (projective candidates)."""
    _require_binary(q)
    if q.dim == 0:
        return False
    if q.field.order ** q.dim > 1 << 20:
        raise UnsupportedFieldError("search space too large for exhaustive isotropy")
    F = q.field
    els = F.elements()
    vec = [F.zero] * q.dim

    def rec(i):
        if i == q.dim:
            return (not vec_is_zero(vec)) and q(tuple(vec)).is_zero()
        for e in els:
            vec[i] = e
            if rec(i + 1):
                return True
        vec[i] = F.zero
        return False

    return rec(0)


def witt_decompose(q):
    """(witt index, anisotropic part).  Binary extensions only.

    Splits block by block: a block [a, b] is hyperbolic iff the class of
    a*b is trivial; two anisotropic blocks pair into a 4-dim form with
    trivial Arf, which over a finite field is hyperbolic.
    """
    _require_binary(q)
    pairs = symplectic_basis(q)
    F = q.field
    witt = 0
    aniso = []
    for (_, _, a, b) in pairs:
        if artin_schreier_class(a * b) == 0:
            witt += 1
        else:
            aniso.append((a, b))
    witt += 2 * (len(aniso) // 2)
    aniso = aniso[len(aniso) - len(aniso) % 2:]
    rest = blocks_form(F, aniso)
    if rest.dim:
        assert not is_isotropic(rest)
    return witt, rest


def random_nonsingular(field, dim, rng, arf_bit=None, isotropic=None):
    """Random nonsingular form of the given even dimension, optionally with
    prescribed Arf bit and (an)isotropy, produced as controlled blocks in a
    random basis."""
    assert dim % 2 == 0 and dim >= 2
    m = dim // 2
    while True:
        pairs = []
        for _ in range(m):
            a = field.random_elt(rng)
            b = field.random_elt(rng)
            pairs.append([a, b])
        if isotropic:
            a = field.random_elt(rng)
            pairs[0] = [a, field.zero]       # [a, 0] is hyperbolic
        if arf_bit is not None:
            s = field.zero
            for a, b in pairs[:-1]:
                s = s + a * b
            # choose the last block to land on the requested class
            a = pairs[-1][0]
            while a.is_zero():
                a = field.random_elt(rng)
            want = None
            for cand in field.elements():
                val = s + a * cand
                if artin_schreier_class(val) == arf_bit:
                    want = cand
                    break
            if want is None:
                continue
            pairs[-1] = [a, want]
        q = blocks_form(field, pairs)
        P = _random_invertible(field, dim, rng)
        q2 = q.transform(P)
        if arf_bit is not None and arf(q2).bit() != arf_bit:
            continue
        return q2


def _random_invertible(field, n, rng):
    while True:
        M = Mat(field, [[field.random_elt(rng) for _ in range(n)] for _ in range(n)])
        if M.is_invertible():
            return M

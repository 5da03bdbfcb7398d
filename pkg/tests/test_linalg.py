import itertools
import random

import pytest

from cliffpair.fields import GF, Poly, function_field
from cliffpair.linalg import (
    Mat, Subspace, solve, kernel, subspace_intersect, char_poly,
    common_kernel, CoordSolver, vec_is_zero,
)

F2 = GF(2)
F4 = GF(4)
F16 = GF(16)


def rand_mat(F, m, n, rng):
    return Mat(F, [[F.random_elt(rng) for _ in range(n)] for _ in range(m)])


def rand_invertible(F, n, rng):
    while True:
        A = rand_mat(F, n, n, rng)
        if A.is_invertible():
            return A


# -- oracle: char poly by Laplace expansion over the polynomial ring --------

def _poly_mat_det(rows, F):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    det = Poly.zero(F)
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        det = det + rows[0][j] * _poly_mat_det(minor, F)   # char 2: signs vanish
    return det


def char_poly_oracle(A):
    F = A.field
    x = Poly.x(F)
    rows = []
    for i in range(A.m):
        row = []
        for j in range(A.n):
            p = Poly.const(A[i, j])
            if i == j:
                p = p + x
            row.append(p)
        rows.append(row)
    return _poly_mat_det(rows, F)


def test_char_poly_spec_examples():
    I2 = Mat.identity(F2, 2)
    assert I2.char_poly() == Poly.from_ints(F2, [1, 0, 1])          # X^2+1
    Z2 = Mat.zeros(F2, 2, 2)
    assert Z2.char_poly() == Poly.from_ints(F2, [0, 0, 1])          # X^2
    A = Mat(F2, [[F2.zero, F2.one], [F2.one, F2.one]])
    assert A.char_poly() == Poly.from_ints(F2, [1, 1, 1])           # X^2+X+1


def test_char_poly_against_laplace_oracle():
    rng = random.Random(2)
    for F in (F2, F4, F16):
        for n in (1, 2, 3, 4):
            for _ in range(8):
                A = rand_mat(F, n, n, rng)
                assert A.char_poly() == char_poly_oracle(A)


def test_char_poly_companion_and_conjugation():
    rng = random.Random(9)
    for F in (F2, F4):
        # companion matrix of f has char poly f
        coeffs = [F.random_elt(rng) for _ in range(5)] + [F.one]
        f = Poly(F, coeffs)
        n = f.degree()
        C = Mat.zeros(F, n, n)
        for i in range(1, n):
            C.rows[i][i - 1] = F.one
        for i in range(n):
            C.rows[i][n - 1] = coeffs[i]      # char 2: -c = c
        assert C.char_poly() == f
        # invariance under conjugation
        A = rand_mat(F, 5, 5, rng)
        P = rand_invertible(F, 5, rng)
        assert (P * A * P.inverse()).char_poly() == A.char_poly()


def test_char_poly_multiplicative_on_blocks():
    rng = random.Random(4)
    A = rand_mat(F4, 3, 3, rng)
    B = rand_mat(F4, 2, 2, rng)
    blk = Mat.zeros(F4, 5, 5)
    for i in range(3):
        for j in range(3):
            blk.rows[i][j] = A[i, j]
    for i in range(2):
        for j in range(2):
            blk.rows[3 + i][3 + j] = B[i, j]
    assert blk.char_poly() == A.char_poly() * B.char_poly()


def test_rref_solve_kernel_exhaustive_small():
    # oracle: enumerate all x in GF(2)^4
    rng = random.Random(1)
    vecs = [tuple(map(F2.elt, bits)) for bits in itertools.product((0, 1), repeat=4)]
    for _ in range(20):
        A = rand_mat(F2, 3, 4, rng)
        ker = {v for v in vecs if vec_is_zero(A.apply(v))}
        K = kernel(A)
        assert 2 ** K.dim == len(ker)
        assert all(K.contains(v) for v in ker)
        b = A.apply(rng.choice(vecs))
        x = solve(A, b)
        assert x is not None and A.apply(x) == b
        # inconsistent systems are reported
        if K.dim > 0:
            target = [F2.one] * 3
            sols = [v for v in vecs if A.apply(v) == tuple(target)]
            assert (solve(A, tuple(target)) is not None) == bool(sols)


def test_rank_inverse_roundtrip():
    rng = random.Random(3)
    for F in (F2, F4, F16, function_field(F2)):
        n = 4
        A = rand_invertible(F, n, rng)
        assert (A * A.inverse()) == Mat.identity(F, n)
        assert A.rank() == n
        with pytest.raises(ValueError):
            Mat.zeros(F, n, n).inverse()


def test_matmul_packed_matches_generic():
    rng = random.Random(8)
    for F in (F4, F16):
        A = rand_mat(F, 5, 7, rng)
        B = rand_mat(F, 7, 3, rng)
        C = A * B
        for i in range(5):
            for j in range(3):
                s = F.zero
                for t in range(7):
                    s = s + A[i, t] * B[t, j]
                assert C[i, j] == s


def test_subspace_canonical_equality():
    rng = random.Random(5)
    for F in (F2, F4):
        rows = [[F.random_elt(rng) for _ in range(5)] for _ in range(3)]
        U = Subspace.from_rows(F, 5, rows)
        # shuffled, rescaled spanning set gives the identical object
        mixed = [list(r) for r in rows]
        c = F.one + (F.gen if F is F4 else F.zero)
        mixed.append([c * a + b for a, b in zip(rows[0], rows[1])])
        rng.shuffle(mixed)
        V = Subspace.from_rows(F, 5, mixed)
        assert U == V and hash(U) == hash(V)


def test_subspace_intersection_exhaustive_gf2():
    rng = random.Random(6)
    vecs = [tuple(map(F2.elt, bits)) for bits in itertools.product((0, 1), repeat=5)]
    for _ in range(15):
        U = Subspace.from_rows(F2, 5, [[F2.random_elt(rng) for _ in range(5)] for _ in range(2)])
        V = Subspace.from_rows(F2, 5, [[F2.random_elt(rng) for _ in range(5)] for _ in range(3)])
        W = subspace_intersect(U, V)
        pointwise = {v for v in vecs if U.contains(v) and V.contains(v)}
        assert 2 ** W.dim == len(pointwise)
        assert all(W.contains(v) for v in pointwise)
        # modular law sanity: (U cap V) + (U cap V) = U cap V etc.
        assert W + W == W
        assert (U + V).dim == U.dim + V.dim - W.dim


def test_dimension_formula_random_gf4():
    rng = random.Random(7)
    for _ in range(10):
        U = Subspace.from_rows(F4, 6, [[F4.random_elt(rng) for _ in range(6)] for _ in range(3)])
        V = Subspace.from_rows(F4, 6, [[F4.random_elt(rng) for _ in range(6)] for _ in range(3)])
        assert (U + V).dim + U.intersect(V).dim == U.dim + V.dim


def test_common_kernel_matches_stacked():
    rng = random.Random(11)
    for F in (F2, F4):
        blocks = [rand_mat(F, 3, 6, rng) for _ in range(4)]
        K = common_kernel(blocks, 6, F)
        stacked = Mat(F, [r for B in blocks for r in B.rows])
        assert K == stacked.kernel()


def test_coord_solver():
    rng = random.Random(12)
    rows = [[F4.random_elt(rng) for _ in range(6)] for _ in range(3)]
    while Mat(F4, rows).rank() < 3:
        rows = [[F4.random_elt(rng) for _ in range(6)] for _ in range(3)]
    cs = CoordSolver(F4, rows)
    for _ in range(10):
        coeffs = [F4.random_elt(rng) for _ in range(3)]
        v = [F4.zero] * 6
        for c, r in zip(coeffs, rows):
            v = [a + c * b for a, b in zip(v, r)]
        assert cs.coords(v) == tuple(coeffs)
    v = [F4.one] * 6
    inside = Mat(F4, rows).transpose().solve(v) is not None
    assert (cs.coords(v) is not None) == inside


def test_function_field_matrices():
    K = function_field(F2)
    t = K.t
    A = Mat(K, [[t, K.one], [K.one, t]])
    # det = t^2+1 = (t+1)^2 nonzero, so invertible
    Ainv = A.inverse()
    assert A * Ainv == Mat.identity(K, 2)
    cp = A.char_poly()
    # (X+t)^2 + 1 = X^2 + (t^2+1)  over char 2... expand: X^2 + 2tX + t^2 + 1
    assert cp[1] == K.zero and cp[2] == K.one and cp[0] == t * t + K.one

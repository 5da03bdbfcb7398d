"""Exact characteristic-2 scalars.

Two field kinds: binary extensions GF(2^k) presented by an irreducible
modulus over GF(2), and rational function fields GF(2^k)(t) whose elements
are gcd-reduced fractions with monic denominator.  Elements are immutable
and interned per field context; mixing elements of distinct contexts is an
error, never a coercion.
"""

from __future__ import annotations

import random


class FieldMismatchError(ValueError):
    """Arithmetic between elements of different field contexts."""


class UndecidedError(ValueError):
    """A class bit of F/wp(F) was requested over a field where membership
    in wp(F) = {x^2 + x} is not decided here (rational function fields)."""


# ---------------------------------------------------------------------------
# GF(2)[x] on int bitmasks, little-endian (bit i = coefficient of x^i)

def pdeg(a):
    return a.bit_length() - 1


def pmul(a, b):
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def pmod(a, m):
    dm = pdeg(m)
    da = pdeg(a)
    while da >= dm:
        a ^= m << (da - dm)
        da = pdeg(a)
    return a


def pmulmod(a, b, m):
    return pmod(pmul(a, b), m)


def pgcd(a, b):
    while b:
        a, b = b, pmod(a, b)
    return a


def ppowmod(a, e, m):
    r = 1
    a = pmod(a, m)
    while e:
        if e & 1:
            r = pmulmod(r, a, m)
        a = pmulmod(a, a, m)
        e >>= 1
    return r


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible_gf2(f):
    """Rabin test for f in GF(2)[x] given as an int bitmask."""
    k = pdeg(f)
    if k < 1:
        return False
    if k == 1:
        return True
    x = 0b10
    if ppowmod(x, 2 ** k, f) != pmod(x, f):
        return False
    for p in _prime_factors(k):
        h = ppowmod(x, 2 ** (k // p), f) ^ pmod(x, f)
        if pgcd(f, h) != 1:
            return False
    return True


# default moduli, all verified irreducible at construction time
DEFAULT_MODULUS = {
    1: 0b10,            # x
    2: 0b111,           # x^2+x+1
    3: 0b1011,          # x^3+x+1
    4: 0b10011,         # x^4+x+1
    5: 0b100101,        # x^5+x^2+1
    6: 0b1000011,       # x^6+x+1
    7: 0b10000011,      # x^7+x+1
    8: 0b100011101,     # x^8+x^4+x^3+x^2+1
}


class BinaryField:
    """GF(2^k) = GF(2)[g]/(modulus), elements stored as int bitmasks."""

    kind = "binary"
    char = 2

    def __init__(self, k, modulus=None):
        if k < 1:
            raise ValueError("k >= 1 required")
        if modulus is None:
            if k not in DEFAULT_MODULUS:
                raise ValueError("no default modulus for k=%d, pass one" % k)
            modulus = DEFAULT_MODULUS[k]
        if isinstance(modulus, (list, tuple)):
            modulus = _bits_to_int(modulus)
        if pdeg(modulus) != k:
            raise ValueError("modulus degree %d != k=%d" % (pdeg(modulus), k))
        if not is_irreducible_gf2(modulus):
            raise ValueError("modulus is reducible over GF(2)")
        self.k = k
        self.modulus = modulus
        self.order = 1 << k
        self._key = ("binary", k, modulus)
        self._cache = None
        if k <= 12:
            self._cache = [BinElement(self, v) for v in range(self.order)]
        self._exp = self._log = None
        if 2 <= k <= 12:
            self._build_log_tables()
        self._mulmasks = {}
        self._wp_solver = None

    # -- context identity ---------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, BinaryField) and other._key == self._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return "GF(%d)" % self.order

    def check_same(self, other):
        if other is not self and other != self:
            raise FieldMismatchError("mixed field contexts: %r vs %r" % (self, other))

    # -- int-level arithmetic (used by the packed linear algebra) -----------

    def _build_log_tables(self):
        n = self.order - 1
        primes = _prime_factors(n)
        gen = None
        for cand in range(2, self.order):
            if all(self._pow_raw(cand, n // p) != 1 for p in primes):
                gen = cand
                break
        assert gen is not None
        exp = [1] * (2 * n)
        log = [0] * self.order
        v = 1
        for i in range(n):
            exp[i] = v
            log[v] = i
            v = pmod(pmul(v, gen), self.modulus)
        for i in range(n, 2 * n):
            exp[i] = exp[i - n]
        self._exp, self._log = exp, log

    def _pow_raw(self, a, e):
        return ppowmod(a, e, self.modulus)

    def add_int(self, a, b):
        return a ^ b

    def mul_int(self, a, b):
        if a == 0 or b == 0:
            return 0
        if self.k == 1:
            return a & b
        e = self._exp
        if e is not None:
            return e[self._log[a] + self._log[b]]
        return pmod(pmul(a, b), self.modulus)

    def inv_int(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in %r" % self)
        if a == 1:
            return 1
        e = self._exp
        if e is not None:
            return e[self.order - 1 - self._log[a]]
        return self._pow_raw(a, self.order - 2)

    def trace_int(self, a):
        t = a
        x = a
        for _ in range(self.k - 1):
            x = self.mul_int(x, x)
            t ^= x
        assert t in (0, 1)
        return t

    def scalar_masks(self, v):
        """Bitplane action of multiplication by v: out_plane[i] = xor of
        in_plane[j] over the bits j of masks[i]."""
        m = self._mulmasks.get(v)
        if m is None:
            k = self.k
            m = [0] * k
            for j in range(k):
                w = self.mul_int(v, 1 << j)
                for i in range(k):
                    if (w >> i) & 1:
                        m[i] |= 1 << j
            self._mulmasks[v] = m
        return m

    # -- element construction ------------------------------------------------

    def elt(self, x):
        if isinstance(x, BinElement):
            self.check_same(x.field)
            return x
        if isinstance(x, int):
            if not 0 <= x < self.order:
                raise ValueError("int literal %d out of range for %r" % (x, self))
            v = x
        elif isinstance(x, (list, tuple)):
            v = _bits_to_int(x)
            if v >= self.order:
                raise ValueError("bit list too long for %r" % self)
        elif isinstance(x, str):
            v = self._parse(x)
        else:
            raise TypeError("cannot build element of %r from %r" % (self, x))
        if self._cache is not None:
            return self._cache[v]
        return BinElement(self, v)

    @property
    def zero(self):
        return self.elt(0)

    @property
    def one(self):
        return self.elt(1)

    @property
    def gen(self):
        if self.k < 2:
            raise ValueError("GF(2) has no proper generator over GF(2)")
        return self.elt(2)

    def elements(self):
        if self.k > 20:
            raise ValueError("refusing to enumerate %r" % self)
        return [self.elt(v) for v in range(self.order)]

    def nonzero_elements(self):
        return self.elements()[1:]

    def random_elt(self, rng):
        return self.elt(rng.randrange(self.order))

    def _parse(self, s):
        s = s.replace(" ", "")
        if not s:
            raise ValueError("empty element literal")
        if s.startswith("["):
            if not s.endswith("]"):
                raise ValueError("bad bit list %r" % s)
            body = s[1:-1]
            bits = [int(c) for c in body.split(",")] if body else []
            if any(b not in (0, 1) for b in bits):
                raise ValueError("bit list entries must be 0/1: %r" % s)
            return _bits_to_int(bits)
        v = 0
        for term in s.split("+"):
            if term == "0":
                continue
            elif term == "1":
                v ^= 1
            elif term == "g":
                v ^= 2
            elif term.startswith("g^"):
                e = int(term[2:])
                if e >= self.k:
                    raise ValueError("exponent %d out of range for %r" % (e, self))
                v ^= 1 << e
            else:
                raise ValueError("bad term %r in element literal" % term)
        return v

    def format_elt(self, a):
        return str(self.elt(a))


def _bits_to_int(bits):
    v = 0
    for i, b in enumerate(bits):
        if b not in (0, 1):
            raise ValueError("bits must be 0/1")
        v |= b << i
    return v


class BinElement:
    __slots__ = ("field", "v")

    def __init__(self, field, v):
        self.field = field
        self.v = v

    def _co(self, other):
        if isinstance(other, BinElement):
            self.field.check_same(other.field)
            return other
        if other == 0 or other == 1:
            return self.field.elt(other)
        return NotImplemented

    def __add__(self, other):
        o = self._co(other)
        if o is NotImplemented:
            return o
        return self.field.elt(self.v ^ o.v)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        o = self._co(other)
        if o is NotImplemented:
            return o
        return self.field.elt(self.field.mul_int(self.v, o.v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._co(other)
        if o is NotImplemented:
            return o
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._co(other)
        if o is NotImplemented:
            return o
        return o * self.inv()

    def inv(self):
        return self.field.elt(self.field.inv_int(self.v))

    def __pow__(self, e):
        if e < 0:
            return self.inv() ** (-e)
        r = self.field.one
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def is_zero(self):
        return self.v == 0

    def __eq__(self, other):
        if isinstance(other, BinElement):
            return self.field == other.field and self.v == other.v
        if other in (0, 1):
            return self.v == other
        return NotImplemented

    def __hash__(self):
        return hash((self.field._key, self.v))

    def bits(self):
        return [(self.v >> i) & 1 for i in range(self.field.k)]

    def trace(self):
        return self.field.trace_int(self.v)

    def __str__(self):
        if self.v == 0:
            return "0"
        terms = []
        for i in range(self.field.k - 1, -1, -1):
            if (self.v >> i) & 1:
                terms.append("1" if i == 0 else ("g" if i == 1 else "g^%d" % i))
        return "+".join(terms)

    __repr__ = __str__


# ---------------------------------------------------------------------------
# Artin-Schreier map wp(x) = x^2 + x

def _wp_solver(field):
    """Row-reduced augmented system for wp over the GF(2)-basis 1,g,..,g^(k-1).

    Returns (rows, pivots) with rows as ints over k+1 bits; solving appends
    the target as the top bit and eliminates.
    """
    if field._wp_solver is not None:
        return field._wp_solver
    k = field.k
    cols = []
    for j in range(k):
        b = 1 << j
        cols.append(field.mul_int(b, b) ^ b)
    # rows of the k x k matrix P with P[i][j] = bit i of wp(g^j)
    rows = []
    for i in range(k):
        r = 0
        for j in range(k):
            if (cols[j] >> i) & 1:
                r |= 1 << j
        rows.append(r)
    field._wp_solver = rows
    return rows


def artin_schreier_solve(a):
    """A root of x^2 + x = a in GF(2^k), or None when there is none.

    The other root is always x + 1.  Rejects rational-function inputs.
    """
    if not isinstance(a, BinElement):
        raise ValueError("artin_schreier_solve needs a binary-extension element")
    F = a.field
    k = F.k
    rows = list(_wp_solver(F))
    # augment each row with the matching bit of a, eliminate over GF(2)
    aug = [rows[i] | (((a.v >> i) & 1) << k) for i in range(k)]
    piv = []
    r = 0
    for c in range(k):
        sel = None
        for i in range(r, k):
            if (aug[i] >> c) & 1:
                sel = i
                break
        if sel is None:
            continue
        aug[r], aug[sel] = aug[sel], aug[r]
        for i in range(k):
            if i != r and (aug[i] >> c) & 1:
                aug[i] ^= aug[r]
        piv.append(c)
        r += 1
    for i in range(r, k):
        if aug[i] >> k:
            return None
    x = 0
    for i, c in enumerate(piv):
        if aug[i] >> k:
            x |= 1 << c
    root = F.elt(x)
    assert root * root + root == a
    return root


def artin_schreier_class(a):
    """Class bit of a in F/wp(F) over GF(2^k): the absolute trace."""
    if not isinstance(a, BinElement):
        raise ValueError("class bit is only decided over binary extensions")
    return a.trace()


class ASClass:
    """An element of F/wp(F).  Always carries a raw representative; the
    0/1 class bit is decided only over binary extensions."""

    def __init__(self, rep):
        self.rep = rep
        self.field = rep.field

    def bit(self):
        if not isinstance(self.rep, BinElement):
            raise UndecidedError("wp-class membership undecided over %r" % self.field)
        return artin_schreier_class(self.rep)

    def is_trivial(self):
        return self.bit() == 0

    def __eq__(self, other):
        if not isinstance(other, ASClass):
            return NotImplemented
        if self.field != other.field:
            return False
        return self.bit() == other.bit()

    def __add__(self, other):
        self.field.check_same(other.field)
        return ASClass(self.rep + other.rep)

    def __repr__(self):
        try:
            return "ASClass(%s, bit=%d)" % (self.rep, self.bit())
        except UndecidedError:
            return "ASClass(%s, undecided)" % (self.rep,)


# ---------------------------------------------------------------------------
# polynomials over a field context (little-endian coefficient tuples)

class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        while coeffs and coeffs[-1].is_zero():
            coeffs = coeffs[:-1]
        self.field = field
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_ints(cls, field, ints):
        return cls(field, [field.elt(i) for i in ints])

    @classmethod
    def zero(cls, field):
        return cls(field, [])

    @classmethod
    def one(cls, field):
        return cls(field, [field.one])

    @classmethod
    def x(cls, field):
        return cls(field, [field.zero, field.one])

    @classmethod
    def const(cls, c):
        return cls(c.field, [c])

    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def lc(self):
        if not self.coeffs:
            raise ValueError("leading coefficient of 0")
        return self.coeffs[-1]

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    def __eq__(self, other):
        return (isinstance(other, Poly) and other.field == self.field
                and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __add__(self, other):
        self.field.check_same(other.field)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.field, [self[i] + other[i] for i in range(n)])

    __sub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, Poly):
            self.field.check_same(other.field)
            if self.is_zero() or other.is_zero():
                return Poly.zero(self.field)
            out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a.is_zero():
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return Poly(self.field, out)
        return Poly(self.field, [other * c for c in self.coeffs])

    __rmul__ = __mul__

    def shift(self, n):
        if self.is_zero():
            return self
        return Poly(self.field, (self.field.zero,) * n + self.coeffs)

    def __pow__(self, e):
        r = Poly.one(self.field)
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by 0")
        self.field.check_same(other.field)
        r = list(self.coeffs)
        d = other.degree()
        ilc = other.lc().inv()
        q = [self.field.zero] * max(0, len(r) - d)
        while len(r) - 1 >= d and r:
            while r and r[-1].is_zero():
                r.pop()
            if len(r) - 1 < d:
                break
            f = r[-1] * ilc
            pos = len(r) - 1 - d
            q[pos] = f
            for i, c in enumerate(other.coeffs):
                r[pos + i] = r[pos + i] + f * c
            r.pop()
        return Poly(self.field, q), Poly(self.field, r)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self):
        if self.is_zero():
            return self
        return self * self.lc().inv()

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def eval(self, x):
        r = self.field.zero
        for c in reversed(self.coeffs):
            r = r * x + c
        return r

    def pow_mod(self, e, mod):
        r = Poly.one(self.field)
        b = self % mod
        while e:
            if e & 1:
                r = (r * b) % mod
            b = (b * b) % mod
            e >>= 1
        return r

    def derivative(self):
        out = []
        for i in range(1, len(self.coeffs)):
            c = self.coeffs[i] if i % 2 == 1 else self.field.zero
            out.append(c)
        return Poly(self.field, out)

    def sqrt(self):
        """Square root of a polynomial in F[x^2] (char 2, F perfect)."""
        out = []
        for i, c in enumerate(self.coeffs):
            if i % 2 == 1:
                if not c.is_zero():
                    raise ValueError("not a square")
            else:
                out.append(c ** (2 ** (self.field.k - 1)))
        return Poly(self.field, out)

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree(), -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            cs = str(c)
            if i == 0:
                terms.append(cs if ("+" not in cs) else "(%s)" % cs)
            else:
                xs = "t" if i == 1 else "t^%d" % i
                if cs == "1":
                    terms.append(xs)
                elif "+" in cs:
                    terms.append("(%s)*%s" % (cs, xs))
                else:
                    terms.append("%s*%s" % (cs, xs))
        return "+".join(terms)

    __repr__ = __str__


def _ddf(f):
    """Distinct-degree split of squarefree monic f over GF(2^k):
    list of (product-of-irreducibles-of-degree-d, d)."""
    F = f.field
    out = []
    x = Poly.x(F)
    h = x
    v = f
    d = 0
    while v.degree() > 0:
        d += 1
        if 2 * d > v.degree():
            out.append((v, v.degree()))
            break
        h = h.pow_mod(F.order, v)
        g = (h + x).gcd(v)
        if g.degree() > 0:
            out.append((g, d))
            v = v // g
            h = h % v
    return out


def _edf(f, d, rng):
    """Equal-degree factorization (char-2 Cantor-Zassenhaus via the
    GF(2)-trace polynomial)."""
    F = f.field
    if f.degree() == d:
        return [f]
    n = F.k * d
    while True:
        h = Poly(F, [F.random_elt(rng) for _ in range(f.degree())])
        if h.is_zero():
            continue
        t = Poly.zero(F)
        hh = h % f
        for _ in range(n):
            t = (t + hh) % f
            hh = (hh * hh) % f
        g = t.gcd(f)
        if 0 < g.degree() < f.degree():
            return _edf(g, d, rng) + _edf(f // g, d, rng)


def factor_poly(f, rng=None):
    """Complete factorization over GF(2^k): dict {monic irreducible: mult}."""
    if rng is None:
        rng = random.Random(0xC11F)
    if f.is_zero():
        raise ValueError("cannot factor 0")
    f = f.monic()
    out = {}

    def absorb(p, m):
        out[p] = out.get(p, 0) + m

    def rec(g, mult):
        if g.degree() <= 0:
            return
        d = g.gcd(g.derivative())
        if d.degree() == 0:
            for part, deg in _ddf(g):
                for p in _edf(part, deg, rng):
                    absorb(p, mult)
            return
        if d.degree() == g.degree():
            # derivative vanished: g = h(x)^2
            rec(g.sqrt(), 2 * mult)
            return
        rec(g // d, mult)
        rec(d, mult)

    rec(f, 1)
    # multiplicity bookkeeping above can overcount shared primes between
    # g/d and d only additively, which is exactly right: g = (g/d) * d.
    total = Poly.one(f.field)
    for p, m in out.items():
        for _ in range(m):
            total = total * p
    assert total == f, "factorization check failed"
    return out


def poly_is_irreducible(f):
    if f.degree() < 1:
        return False
    fac = factor_poly(f)
    return len(fac) == 1 and next(iter(fac.values())) == 1


# ---------------------------------------------------------------------------
# rational function field GF(2^k)(t)

class RatFuncField:
    kind = "function"
    char = 2

    def __init__(self, base):
        if not isinstance(base, BinaryField):
            raise TypeError("base must be a BinaryField")
        self.base = base
        self._key = ("function", base._key)

    def __eq__(self, other):
        return isinstance(other, RatFuncField) and other._key == self._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return "GF(%d)(t)" % self.base.order

    def check_same(self, other):
        if other is not self and other != self:
            raise FieldMismatchError("mixed field contexts: %r vs %r" % (self, other))

    def elt(self, num, den=None):
        if isinstance(num, FracElement):
            self.check_same(num.field)
            return num
        if isinstance(num, int):
            num = Poly.from_ints(self.base, [num])
        if isinstance(num, BinElement):
            num = Poly.const(num)
        if den is None:
            den = Poly.one(self.base)
        if isinstance(den, int):
            den = Poly.from_ints(self.base, [den])
        if isinstance(den, BinElement):
            den = Poly.const(den)
        return fraction_normalize(self, num, den)

    @property
    def zero(self):
        return self.elt(Poly.zero(self.base))

    @property
    def one(self):
        return self.elt(Poly.one(self.base))

    @property
    def t(self):
        return self.elt(Poly.x(self.base))

    def random_elt(self, rng, deg=2):
        num = Poly(self.base, [self.base.random_elt(rng) for _ in range(rng.randrange(deg + 1) + 1)])
        den = Poly.zero(self.base)
        while den.is_zero():
            den = Poly(self.base, [self.base.random_elt(rng) for _ in range(rng.randrange(deg) + 1)])
        return self.elt(num, den)


def fraction_normalize(field, num, den):
    """Reduced fraction with monic denominator; errors on zero denominator."""
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return FracElement(field, Poly.zero(field.base), Poly.one(field.base))
    g = num.gcd(den)
    num, den = num // g, den // g
    c = den.lc().inv()
    return FracElement(field, num * c, den * c)


class FracElement:
    __slots__ = ("field", "num", "den")

    def __init__(self, field, num, den):
        self.field = field
        self.num = num
        self.den = den

    def _co(self, other):
        if isinstance(other, FracElement):
            self.field.check_same(other.field)
            return other
        if other == 0 or other == 1:
            return self.field.elt(other)
        return NotImplemented

    def __add__(self, other):
        o = self._co(other)
        if o is NotImplemented:
            return o
        return fraction_normalize(self.field,
                                  self.num * o.den + o.num * self.den,
                                  self.den * o.den)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        o = self._co(other)
        if o is NotImplemented:
            return o
        return fraction_normalize(self.field, self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._co(other)
        if o is NotImplemented:
            return o
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._co(other)
        if o is NotImplemented:
            return o
        return o * self.inv()

    def inv(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of 0 in %r" % self.field)
        return fraction_normalize(self.field, self.den, self.num)

    def __pow__(self, e):
        if e < 0:
            return self.inv() ** (-e)
        r = self.field.one
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def is_zero(self):
        return self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, FracElement):
            return (self.field == other.field and self.num == other.num
                    and self.den == other.den)
        if other in (0, 1):
            return self == self.field.elt(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.num, self.den))

    def __str__(self):
        if self.den == Poly.one(self.field.base):
            return str(self.num)
        return "(%s)/(%s)" % (self.num, self.den)

    __repr__ = __str__


# convenient constructors

def GF(order, modulus=None):
    k = order.bit_length() - 1
    if 1 << k != order:
        raise ValueError("order must be a power of 2")
    return BinaryField(k, modulus)


def function_field(base):
    return RatFuncField(base)

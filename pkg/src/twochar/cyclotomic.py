"""Exact arithmetic in the cyclotomic field Q(zeta_N).

Values are vectors of rationals over the power basis 1, z, ..., z^(phi(N)-1)
reduced modulo the N-th cyclotomic polynomial, so equality is coefficient
equality at a common level.  Products of roots of unity keep a cached
monomial tag (a, k) meaning a * zeta^k, which makes the scalar algebra in
the representation-theoretic layers cheap without leaving exact arithmetic.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import LevelMismatchError, ParseError, ShapeError

_F0 = Fraction(0)
_F1 = Fraction(1)


# ----------------------------------------------------------------------
# integer polynomials, coefficient lists indexed by degree

def _trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _imul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _idiv_exact(a, b):
    """Divide a by monic-up-to-sign b; remainder must vanish."""
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    lead = b[-1]
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1]
        if c % lead:
            raise ArithmeticError("non-exact polynomial division")
        c //= lead
        q[i] = c
        if c:
            for j, y in enumerate(b):
                a[i + j] -= c * y
    if any(a[: len(b) - 1]):
        raise ArithmeticError("nonzero remainder in exact division")
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(N):
    """Integer coefficients of Phi_N, low degree first.

    Computed by dividing x^N - 1 by the product of Phi_d over proper
    divisors d of N.
    """
    if N < 1:
        raise ValueError("N must be positive")
    if N == 1:
        return (-1, 1)
    num = [0] * (N + 1)
    num[0], num[N] = -1, 1
    den = [1]
    for d in range(1, N):
        if N % d == 0:
            den = _imul(den, list(cyclotomic_polynomial(d)))
    return tuple(_idiv_exact(num, den))


@lru_cache(maxsize=None)
def euler_phi(N):
    return len(cyclotomic_polynomial(N)) - 1


class _LevelData:
    __slots__ = ("level", "phi", "minpoly", "red_rows", "pow_rows")

    def __init__(self, N):
        self.level = N
        self.minpoly = cyclotomic_polynomial(N)
        phi = self.phi = len(self.minpoly) - 1
        # x^phi == -(c_0 + ... + c_{phi-1} x^{phi-1}); rows for x^k, k up to 2*phi-2
        base = [-c for c in self.minpoly[:phi]]
        rows = [base]
        for _ in range(phi - 2):
            prev = rows[-1]
            row = [0] + prev[:-1]
            top = prev[-1]
            if top:
                row = [r + top * b for r, b in zip(row, base)]
            rows.append(row)
        self.red_rows = tuple(tuple(r) for r in rows)
        # x^k mod Phi_N for 0 <= k < N
        pw = []
        cur = [0] * phi
        cur[0] = 1
        for _ in range(N):
            pw.append(tuple(cur))
            nxt = [0] + cur[:-1]
            top = cur[-1]
            if top:
                nxt = [r + top * b for r, b in zip(nxt, base)]
            cur = nxt
        self.pow_rows = tuple(pw)


@lru_cache(maxsize=None)
def _level(N):
    if N < 1:
        raise ValueError("level must be positive")
    return _LevelData(N)


def _coerce(x, level):
    if isinstance(x, CycNumber):
        return x
    if isinstance(x, (int, Fraction)):
        return from_rational(x, level)
    return None


class CycNumber:
    """Element of Q(zeta_N), canonical over the reduced power basis."""

    __slots__ = ("level", "coeffs", "_mono")

    def __init__(self, level, coeffs, _mono=None):
        self.level = level
        self.coeffs = coeffs
        self._mono = _mono

    # -- predicates -----------------------------------------------------
    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def is_one(self):
        return self.coeffs[0] == 1 and all(c == 0 for c in self.coeffs[1:])

    def is_rational(self):
        return all(c == 0 for c in self.coeffs[1:])

    def as_rational(self):
        if not self.is_rational():
            raise ValueError("not a rational value: %s" % self)
        return self.coeffs[0]

    # -- ring operations -------------------------------------------------
    def _check(self, other):
        other = _coerce(other, self.level)
        if other is None:
            return None
        if other.level != self.level:
            raise LevelMismatchError(
                "levels %d and %d differ; embed first" % (self.level, other.level))
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        return CycNumber(self.level,
                         tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        m = self._mono
        return CycNumber(self.level, tuple(-a for a in self.coeffs),
                         None if m is None else (-m[0], m[1]))

    def __sub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        L = _level(self.level)
        ma, mb = self._mono, other._mono
        if ma is not None and mb is not None:
            a = ma[0] * mb[0]
            if a == 0:
                return zero(self.level)
            k = (ma[1] + mb[1]) % self.level
            row = L.pow_rows[k]
            return CycNumber(self.level,
                             tuple(a * c if c else _F0 for c in row), (a, k))
        phi = L.phi
        conv = [_F0] * (2 * phi - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    if y:
                        conv[i + j] += x * y
        out = conv[:phi]
        for k in range(phi, 2 * phi - 1):
            c = conv[k]
            if c:
                row = L.red_rows[k - phi]
                for i, r in enumerate(row):
                    if r:
                        out[i] += c * r
        return CycNumber(self.level, tuple(out))

    __rmul__ = __mul__

    def inv(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        m = self._mono
        if m is not None:
            a, k = m
            return _mono_value(self.level, 1 / a, (-k) % self.level)
        # extended Euclid of the representative against the minimal
        # polynomial, maintaining s_i*f == r_i (mod Phi_N)
        L = _level(self.level)
        f = _trim([Fraction(c) for c in self.coeffs])
        r0 = [Fraction(c) for c in L.minpoly]
        r1 = f
        s0, s1 = [_F0], [_F1]
        while _trim(r1):
            q, r = _fpoly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _fpoly_sub(s0, _fpoly_mul(q, s1))
        c = r0[0]  # constant gcd: Phi_N is irreducible over Q
        coeffs = [x / c for x in s0]
        coeffs += [_F0] * (L.phi - len(coeffs))
        return CycNumber(self.level, tuple(coeffs[: L.phi]))

    def __truediv__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inv() ** (-e)
        m = self._mono
        if m is not None:
            return _mono_value(self.level, m[0] ** e, (m[1] * e) % self.level)
        acc = one(self.level)
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base if e > 1 else base
            e >>= 1
        return acc

    # -- comparisons ------------------------------------------------------
    def __eq__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.level, self.coeffs))

    # -- level embedding ---------------------------------------------------
    def embed(self, M):
        """Image under zeta_N -> zeta_M^(M/N); requires N | M."""
        N = self.level
        if M == N:
            return self
        if M % N:
            raise LevelMismatchError("%d does not divide %d" % (N, M))
        step = M // N
        m = self._mono
        if m is not None:
            return _mono_value(M, m[0], (m[1] * step) % M)
        L = _level(M)
        out = [_F0] * L.phi
        for i, a in enumerate(self.coeffs):
            if a:
                row = L.pow_rows[(i * step) % M]
                for j, r in enumerate(row):
                    if r:
                        out[j] += a * r
        return CycNumber(M, tuple(out))

    # -- serialization -----------------------------------------------------
    def to_json(self):
        return {"level": self.level,
                "coeffs": [[str(c.numerator), str(c.denominator)] for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj):
        try:
            level = int(obj["level"])
            coeffs = tuple(Fraction(int(n), int(d)) for n, d in obj["coeffs"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError("bad cyclotomic JSON value: %s" % exc)
        if len(coeffs) != euler_phi(level):
            raise ParseError("coefficient vector has wrong length for level %d" % level)
        return cls(level, coeffs)

    def __str__(self):
        return format_cyc(self)

    def __repr__(self):
        return "Cyc(%s @ z%d)" % (format_cyc(self), self.level)


def _mono_value(level, a, k):
    if a == 0:
        return zero(level)
    row = _level(level).pow_rows[k % level]
    a = Fraction(a)
    return CycNumber(level, tuple(a * c if c else _F0 for c in row), (a, k % level))


def zero(level):
    return CycNumber(level, (_F0,) * euler_phi(level), (_F0, 0))


def one(level):
    return from_rational(1, level)


def from_rational(q, level):
    q = Fraction(q)
    coeffs = (q,) + (_F0,) * (euler_phi(level) - 1)
    return CycNumber(level, coeffs, (q, 0))


@lru_cache(maxsize=None)
def root_of_unity(N, k=1):
    """zeta_N^k in canonical form; k is reduced mod N."""
    return _mono_value(N, 1, k % N)


def common_level(values):
    """Embed a sequence of CycNumbers into the lcm of their levels."""
    values = list(values)
    M = 1
    for v in values:
        M = math.lcm(M, v.level)
    return [v.embed(M) for v in values]


# ----------------------------------------------------------------------
# rational-coefficient polynomial helpers (inverse computation only)

def _fpoly_divmod(a, b):
    a = list(a)
    db = len(_trim(list(b))) - 1
    q = [_F0] * max(len(a) - db, 1)
    inv_lead = 1 / b[db]
    for i in range(len(a) - db - 1, -1, -1):
        c = a[i + db] * inv_lead
        q[i] = c
        if c:
            for j in range(db + 1):
                a[i + j] -= c * b[j]
    return q, _trim(a[:db] if db else [_F0])


def _fpoly_mul(a, b):
    out = [_F0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _fpoly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [_F0] * (n - len(a))
    for i, y in enumerate(b):
        a[i] -= y
    return a


# ----------------------------------------------------------------------
# matrices as tuples of row tuples

def matrix_trace(m, *, level=None):
    """Sum of diagonal entries of a square CycNumber matrix."""
    rows = len(m)
    for r in m:
        if len(r) != rows:
            raise ShapeError("trace of a non-square matrix (%dx%d)" % (rows, len(r)))
    if rows == 0:
        if level is None:
            raise ShapeError("trace of an empty matrix needs an explicit level")
        return zero(level)
    acc = m[0][0]
    for i in range(1, rows):
        acc = acc + m[i][i]
    return acc


def mat_identity(n, level):
    o, z = one(level), zero(level)
    return tuple(tuple(o if i == j else z for j in range(n)) for i in range(n))


def mat_mul(a, b, *, level=None):
    ra, rb = len(a), len(b)
    ca = len(a[0]) if ra else 0
    cb = len(b[0]) if rb else 0
    if ca != rb:
        raise ShapeError("matrix product shape mismatch (%dx%d by %dx%d)" % (ra, ca, rb, cb))
    if ra and cb and not ca:
        if level is None:
            raise ShapeError("product through dimension 0 needs an explicit level")
        z = zero(level)
        return tuple(tuple(z for _ in range(cb)) for _ in range(ra))
    out = []
    for i in range(ra):
        row = []
        arow = a[i]
        for j in range(cb):
            acc = None
            for k in range(ca):
                x = arow[k]
                if x.is_zero():
                    continue
                y = b[k][j]
                if y.is_zero():
                    continue
                term = x * y
                acc = term if acc is None else acc + term
            if acc is None:
                acc = zero(a[i][0].level if ca else level)
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


# ----------------------------------------------------------------------
# literal grammar: flat sums of monomials over `zN^k`, integers and `a/b`

def format_cyc(x):
    terms = []
    for i, a in enumerate(x.coeffs):
        if a == 0:
            continue
        mag = abs(a)
        if i == 0:
            body = str(mag)
        else:
            zpart = "z%d^%d" % (x.level, i)
            body = zpart if mag == 1 else "%s*%s" % (mag, zpart)
        terms.append(("-" if a < 0 else "+", body))
    if not terms:
        return "0"
    sign, body = terms[0]
    out = ("-" + body) if sign == "-" else body
    for sign, body in terms[1:]:
        out += " %s %s" % (sign, body)
    return out


def _parse_monomial(tok, pos):
    coeff = _F1
    power = None  # (N, k)
    for part in tok.split("*"):
        part = part.strip()
        if not part:
            raise ParseError("empty factor in cyclotomic literal", pos)
        if part[0] == "z":
            if power is not None:
                raise ParseError("more than one root factor in a monomial", pos)
            body = part[1:]
            if "^" in body:
                nstr, _, kstr = body.partition("^")
            else:
                nstr, kstr = body, "1"
            try:
                N, k = int(nstr), int(kstr)
            except ValueError:
                raise ParseError("bad root factor %r" % part, pos)
            if N < 1:
                raise ParseError("root level must be positive", pos)
            power = (N, k)
        else:
            try:
                coeff *= Fraction(part)
            except (ValueError, ZeroDivisionError):
                raise ParseError("bad rational factor %r" % part, pos)
    return coeff, power


def parse_cyc(text, level=None):
    """Parse a cyclotomic literal.  Returns a value at the lcm of the root
    levels occurring in it (combined with `level` when given)."""
    s = text.strip()
    if not s:
        raise ParseError("empty cyclotomic literal")
    pieces = []  # (sign, token, pos)
    sign, start = 1, 0
    if s[0] in "+-":
        sign = -1 if s[0] == "-" else 1
        start = 1
    cur = start
    i = start
    while i <= len(s):
        if i == len(s) or s[i] in "+-":
            tok = s[cur:i].strip()
            if not tok:
                raise ParseError("misplaced sign in literal %r" % text, i)
            pieces.append((sign, tok, cur))
            if i < len(s):
                sign = -1 if s[i] == "-" else 1
                cur = i + 1
        i += 1
    monos = [(sg * c, pw) for sg, tok, pos in pieces
             for c, pw in [_parse_monomial(tok, pos)]]
    M = level or 1
    for _, pw in monos:
        if pw is not None:
            M = math.lcm(M, pw[0])
    acc = zero(M)
    for c, pw in monos:
        if pw is None:
            acc = acc + from_rational(c, M)
        else:
            N, k = pw
            acc = acc + _mono_value(M, c, (k * (M // N)) % M)
    return acc

"""Homogeneous binary forms in ``s, t`` and matrices of them.

A form of degree ``m`` is stored densely: ``coeffs[j]`` is the coefficient
of ``s^(m-j) t^j``.  Multiplying forms is then plain convolution of the
coefficient sequences, and dehomogenizing at ``s = 1`` reads the sequence as
an ascending polynomial in ``u = t/s``.
"""

from __future__ import annotations

from functools import reduce

from .errors import DegreeMismatchError, MustrataError
from .fields import Field


class BinaryForm:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs):
        coeffs = tuple(field(c) for c in coeffs)
        if not coeffs:
            raise MustrataError("a form needs degree+1 >= 1 coefficients")
        self.field = field
        self.coeffs = coeffs

    @classmethod
    def _raw(cls, field, coeffs):
        # coeffs already normalized field elements
        obj = cls.__new__(cls)
        obj.field = field
        obj.coeffs = tuple(coeffs)
        return obj

    @classmethod
    def zero(cls, field, degree):
        return cls._raw(field, (field.zero,) * (degree + 1))

    @classmethod
    def monomial(cls, field, degree, j, c=1):
        """``c * s^(degree-j) t^j``."""
        coeffs = [field.zero] * (degree + 1)
        coeffs[j] = field(c)
        return cls._raw(field, coeffs)

    @classmethod
    def s(cls, field):
        return cls.monomial(field, 1, 0)

    @classmethod
    def t(cls, field):
        return cls.monomial(field, 1, 1)

    @classmethod
    def random(cls, field, degree, rng, bound=20):
        return cls._raw(field, [field.random(rng, bound) for _ in range(degree + 1)])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def leading(self):
        """First nonzero coefficient in lex order s > t (``None`` for zero)."""
        for c in self.coeffs:
            if c:
                return c
        return None

    def _check(self, other):
        self.field.check_same(other.field)

    def __eq__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __add__(self, other):
        self._check(other)
        if other.degree != self.degree:
            raise DegreeMismatchError(f"cannot add forms of degrees {self.degree} and {other.degree}")
        F = self.field
        return BinaryForm._raw(F, [F.norm(a + b) for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        F = self.field
        return BinaryForm._raw(F, [F.norm(-a) for a in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        F = self.field
        c = F(c) if not isinstance(c, type(F.zero)) else c
        return BinaryForm._raw(F, [F.norm(c * a) for a in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, BinaryForm):
            return self.scale(other)
        self._check(other)
        F = self.field
        out = [0] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        if F.p is None:
            return BinaryForm._raw(F, [F(x) if isinstance(x, int) else x for x in out])
        return BinaryForm._raw(F, [x % F.p for x in out])

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = BinaryForm.monomial(self.field, 0, 0)
        for _ in range(e):
            result = result * self
        return result

    def times_monomial(self, i: int, j: int):
        """``s^i t^j * self``."""
        z = self.field.zero
        return BinaryForm._raw(self.field, (z,) * j + self.coeffs + (z,) * i)

    def __call__(self, s, t):
        F = self.field
        m = self.degree
        return F.norm(sum(c * s ** (m - j) * t**j for j, c in enumerate(self.coeffs) if c))

    def monic(self):
        lead = self.leading()
        if lead is None:
            raise MustrataError("the zero form has no monic normalization")
        return self.scale(self.field.inv(lead))

    def s_valuation(self) -> int:
        """Largest v with s^v dividing self (trailing zero coefficients)."""
        v = 0
        for c in reversed(self.coeffs):
            if c:
                return v
            v += 1
        return v

    def divide_exact(self, h: "BinaryForm") -> "BinaryForm":
        """Quotient ``self / h``; raises if ``h`` does not divide ``self``."""
        self._check(h)
        F = self.field
        if h.is_zero():
            raise ZeroDivisionError("division by the zero form")
        k = self.degree - h.degree
        if k < 0:
            raise MustrataError("divisor has larger degree")
        j0 = next(i for i, c in enumerate(h.coeffs) if c)
        hh = h.coeffs[j0:]
        f = self.coeffs
        if any(f[:j0]):
            raise MustrataError("form is not divisible")
        f = f[j0:]
        inv0 = F.inv(hh[0])
        q = []
        for i in range(k + 1):
            acc = f[i] - sum(hh[l] * q[i - l] for l in range(1, min(i, len(hh) - 1) + 1))
            q.append(F.norm(acc * inv0))
        quotient = BinaryForm._raw(F, q)
        if quotient * h != self:
            raise MustrataError("form is not divisible")
        return quotient

    def compose(self, alpha: "BinaryForm", beta: "BinaryForm") -> "BinaryForm":
        """``self(alpha(s,t), beta(s,t))``."""
        self._check(alpha)
        self._check(beta)
        if alpha.degree != beta.degree:
            raise DegreeMismatchError("alpha and beta must have equal degree")
        if alpha.degree < 1:
            raise DegreeMismatchError("substitution forms must have degree >= 1")
        F = self.field
        m, k = self.degree, alpha.degree
        one = BinaryForm.monomial(F, 0, 0)
        apow, bpow = [one], [one]
        for _ in range(m):
            apow.append(apow[-1] * alpha)
            bpow.append(bpow[-1] * beta)
        total = BinaryForm.zero(F, m * k)
        for j, c in enumerate(self.coeffs):
            if c:
                total = total + (apow[m - j] * bpow[j]).scale(c)
        return total

    def __repr__(self):
        return f"BinaryForm({self.field}, {self})"

    def __str__(self):
        if self.is_zero():
            return "0"
        m = self.degree
        terms = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "*".join(
                x for x in (_pow("s", m - j), _pow("t", j)) if x
            )
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif self.field.p is None and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")


def _pow(var, e):
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


# univariate helpers: ascending coefficient lists in u = t/s


def _trim(p):
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def _udivmod_rem(a, b, field):
    a = list(a)
    inv = field.inv(b[-1])
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        c = field.norm(a[-1] * inv)
        shift = len(a) - 1 - db
        for i, bc in enumerate(b):
            a[shift + i] = field.norm(a[shift + i] - c * bc)
        a = _trim(a)
    return a


def _ugcd(a, b, field):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _udivmod_rem(a, b, field)
    return a


def form_gcd(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Monic gcd (first nonzero coefficient 1)."""
    f._check(g)
    if f.is_zero() and g.is_zero():
        raise MustrataError("gcd of two zero forms is undefined")
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    F = f.field
    v = min(f.s_valuation(), g.s_valuation())
    u = _ugcd(f.coeffs, g.coeffs, F)
    return BinaryForm._raw(F, u + [F.zero] * v).monic()


def gcd_many(forms) -> BinaryForm:
    nonzero = [f for f in forms if not f.is_zero()]
    if not nonzero:
        raise MustrataError("gcd of zero forms is undefined")
    return reduce(form_gcd, nonzero[1:], nonzero[0].monic())


def resultant_nonzero(f: BinaryForm, g: BinaryForm) -> bool:
    """True iff f and g share no common factor (Sylvester matrix of full rank)."""
    from .linalg import rank

    m, k = f.degree, g.degree
    rows = []
    for i in range(k):
        rows.append([0] * i + list(f.coeffs) + [0] * (k - 1 - i))
    for i in range(m):
        rows.append([0] * i + list(g.coeffs) + [0] * (m - 1 - i))
    return rank(rows, m + k, f.field) == m + k


class FormMatrix:
    """Matrix of binary forms, stored as a tuple of columns."""

    def __init__(self, columns):
        columns = tuple(tuple(col) for col in columns)
        if not columns or not columns[0]:
            raise MustrataError("empty form matrix")
        nrows = len(columns[0])
        if any(len(c) != nrows for c in columns):
            raise MustrataError("ragged form matrix")
        field = columns[0][0].field
        for col in columns:
            degs = {e.degree for e in col}
            if len(degs) != 1:
                raise DegreeMismatchError("entries of a column must share a degree")
            for e in col:
                field.check_same(e.field)
        self.columns = columns
        self.field = field

    @classmethod
    def from_rows(cls, rows):
        return cls(list(zip(*rows)))

    @property
    def shape(self):
        return len(self.columns[0]), len(self.columns)

    @property
    def column_degrees(self):
        return tuple(col[0].degree for col in self.columns)

    def __getitem__(self, ij):
        i, j = ij
        return self.columns[j][i]

    def with_columns(self, order):
        return FormMatrix([self.columns[j] for j in order])

    def determinant(self, rows=None) -> BinaryForm:
        """Determinant of the square submatrix on ``rows`` (all rows if None)."""
        rows = tuple(range(self.shape[0])) if rows is None else tuple(rows)
        ncols = self.shape[1]
        if len(rows) != ncols:
            raise MustrataError("determinant needs a square selection")
        F = self.field
        cache = {}

        def expand(rs, col):
            # Laplace expansion down column ``col`` over the remaining rows
            if col == ncols:
                return BinaryForm.monomial(F, 0, 0)
            if rs in cache:
                return cache[rs]
            deg = sum(self.column_degrees[col:])
            total = BinaryForm.zero(F, deg)
            for pos, r in enumerate(rs):
                entry = self.columns[col][r]
                if entry.is_zero():
                    continue
                term = entry * expand(rs[:pos] + rs[pos + 1:], col + 1)
                total = total - term if pos % 2 else total + term
            cache[rs] = total
            return total

        return expand(rows, 0)

    def signed_minors(self):
        """``(-1)^i`` times the determinant with row ``i`` deleted."""
        nrows = self.shape[0]
        out = []
        for i in range(nrows):
            det = self.determinant([r for r in range(nrows) if r != i])
            out.append(-det if i % 2 else det)
        return out

    def __repr__(self):
        return f"FormMatrix(shape={self.shape}, column_degrees={self.column_degrees})"

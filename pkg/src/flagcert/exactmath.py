"""Exact arithmetic helpers: rational polynomials, Sturm chains, LDL^T.

Everything here is built on fractions.Fraction so results are exact.
Polynomials in one variable k are immutable coefficient tuples in
ascending order.  Sign questions on rays [k0, inf) are settled by Sturm
root counting on the squarefree part; symmetric matrices over Q are
classified PSD / not-PSD with a checkable witness either way.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rat = Union[int, Fraction]


def frac(x) -> Fraction:
    """Coerce ints, Fractions and exact decimal strings to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to Fraction exactly")


class KPolynomial:
    """Polynomial in k over Q; coefficients ascending, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("KPolynomial is immutable")

    @staticmethod
    def constant(c) -> "KPolynomial":
        return KPolynomial([frac(c)])

    @staticmethod
    def variable() -> "KPolynomial":
        return KPolynomial([0, 1])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __call__(self, x) -> Fraction:
        x = frac(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        other = _as_poly(other)
        return other is not None and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self) -> "KPolynomial":
        return KPolynomial([-c for c in self.coeffs])

    def __add__(self, other) -> "KPolynomial":
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return KPolynomial(
            [c + (b[i] if i < len(b) else 0) for i, c in enumerate(a)]
        )

    __radd__ = __add__

    def __sub__(self, other) -> "KPolynomial":
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "KPolynomial":
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "KPolynomial":
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return KPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return KPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "KPolynomial":
        if e < 0:
            raise ValueError("negative power")
        out = KPolynomial.constant(1)
        b = self
        while e:
            if e & 1:
                out = out * b
            b = b * b
            e >>= 1
        return out

    def __divmod__(self, other) -> tuple["KPolynomial", "KPolynomial"]:
        other = _require_poly(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(0, len(rem) - len(other.coeffs) + 1)
        d = other.degree
        lc = other.leading
        while len(rem) - 1 >= d and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < d:
                break
            shift = len(rem) - 1 - d
            f = rem[-1] / lc
            q[shift] = f
            for i, c in enumerate(other.coeffs):
                rem[shift + i] -= f * c
            rem.pop()
        return KPolynomial(q), KPolynomial(rem)

    def __floordiv__(self, other) -> "KPolynomial":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "KPolynomial":
        return divmod(self, other)[1]

    def exact_div(self, other) -> "KPolynomial":
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ValueError("division is not exact")
        return q

    def derivative(self) -> "KPolynomial":
        return KPolynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "KPolynomial":
        if self.is_zero:
            return self
        lc = self.leading
        return KPolynomial([c / lc for c in self.coeffs])

    def __repr__(self) -> str:
        return f"KPolynomial({[str(c) for c in self.coeffs]})"

    def pretty(self, var: str = "k") -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mag = abs(c)
            if i == 0:
                term = str(mag)
            else:
                term = "" if mag == 1 else f"{mag}*"
                term += var if i == 1 else f"{var}^{i}"
            parts.append(("-" if c < 0 else "+", term))
        sign, first = parts[0]
        out = ("-" if sign == "-" else "") + first
        for sign, term in parts[1:]:
            out += f" {sign} {term}"
        return out


def _as_poly(x):
    if isinstance(x, KPolynomial):
        return x
    if isinstance(x, (int, Fraction, str)):
        return KPolynomial.constant(x)
    return None


def _require_poly(x) -> KPolynomial:
    p = _as_poly(x)
    if p is None:
        raise TypeError(f"cannot treat {type(x).__name__} as a polynomial")
    return p


def poly_gcd(a: KPolynomial, b: KPolynomial) -> KPolynomial:
    """Monic gcd by the Euclidean algorithm."""
    a, b = a.monic() if not a.is_zero else a, b.monic() if not b.is_zero else b
    while not b.is_zero:
        a, b = b, (a % b)
        if not b.is_zero:
            b = b.monic()
    return a.monic() if not a.is_zero else a


def squarefree_part(p: KPolynomial) -> KPolynomial:
    """p with all multiplicities reduced to one (monic)."""
    if p.is_zero:
        return p
    if p.degree == 0:
        return KPolynomial.constant(1)
    return p.exact_div(poly_gcd(p, p.derivative())).monic()


def squarefree_decomposition(p: KPolynomial) -> list[tuple[int, KPolynomial]]:
    """Yun's algorithm: p = lc * prod f_i^i with the f_i squarefree, coprime.

    Returns the (i, f_i) pairs with deg f_i > 0.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    p = p.monic()
    if p.degree == 0:
        return []
    out = []
    g = poly_gcd(p, p.derivative())
    b = p.exact_div(g)
    c = p.derivative().exact_div(g)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((i, a))
            b = b.exact_div(a)
            d = d.exact_div(a)
        c = d
        d = c - b.derivative()
        i += 1
    return out


def _odd_multiplicity_part(p: KPolynomial) -> KPolynomial:
    out = KPolynomial.constant(1)
    for i, f in squarefree_decomposition(p):
        if i % 2:
            out = out * f
    return out


# ---------------------------------------------------------------------------
# Sturm chains and root location


def sturm_chain(p: KPolynomial) -> list[KPolynomial]:
    """Sturm chain of the squarefree part of p."""
    p = squarefree_part(p)
    chain = [p, p.derivative()]
    while not chain[-1].is_zero:
        chain.append(-(chain[-2] % chain[-1]))
    chain.pop()
    return chain


def _variations(signs: Iterable[int]) -> int:
    var = 0
    last = 0
    for s in signs:
        if s == 0:
            continue
        if last and s != last:
            var += 1
        last = s
    return var


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _variations_at(chain: Sequence[KPolynomial], x: Fraction) -> int:
    return _variations(_sign(q(x)) for q in chain)


def _variations_at_inf(chain: Sequence[KPolynomial], positive: bool) -> int:
    sgn = []
    for q in chain:
        if q.is_zero:
            sgn.append(0)
        elif positive:
            sgn.append(_sign(q.leading))
        else:
            sgn.append(_sign(q.leading) * (-1) ** (q.degree & 1))
    return _variations(sgn)


def count_real_roots(p: KPolynomial, lower=None, upper=None) -> int:
    """Distinct real roots in (lower, upper); None means unbounded.

    Endpoint roots are excluded: the polynomial is deflated at rational
    endpoints first, so the interval is genuinely open.
    """
    if p.is_zero:
        raise ValueError("zero polynomial has every point as a root")
    p = squarefree_part(p)
    for end in (lower, upper):
        if end is not None:
            end = frac(end)
            while not p.is_zero and p.degree > 0 and p(end) == 0:
                p = p.exact_div(KPolynomial([-end, 1]))
    if p.degree <= 0:
        return 0
    chain = sturm_chain(p)
    hi = (
        _variations_at_inf(chain, False)
        if lower is None
        else _variations_at(chain, frac(lower))
    )
    lo = (
        _variations_at_inf(chain, True)
        if upper is None
        else _variations_at(chain, frac(upper))
    )
    return hi - lo


def cauchy_bound(p: KPolynomial) -> Fraction:
    """B with every real root strictly inside (-B, B)."""
    if p.is_zero or p.degree == 0:
        return Fraction(1)
    lc = abs(p.leading)
    return 1 + max(abs(c) / lc for c in p.coeffs[:-1])


@dataclass(frozen=True)
class RootBracket:
    """Rational bracket (lower, upper] known to contain the root."""

    lower: Fraction
    upper: Fraction

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    @property
    def midpoint(self) -> Fraction:
        return (self.lower + self.upper) / 2


def isolate_largest_real_root(p: KPolynomial, precision) -> RootBracket:
    """Bracket the largest real root to within the given rational width.

    Raises ValueError when p has no real root.
    """
    precision = frac(precision)
    if precision <= 0:
        raise ValueError("precision must be positive")
    if p.is_zero or p.degree == 0:
        raise ValueError("no real root")
    bound = cauchy_bound(p)
    lo, hi = -bound, bound
    if count_real_roots(p, lower=lo) == 0:
        raise ValueError("no real root")
    while hi - lo > precision:
        mid = (lo + hi) / 2
        if count_real_roots(p, lower=mid) >= 1:
            lo = mid
        else:
            hi = mid
    return RootBracket(lo, hi)


def nonneg_on_ray(p: KPolynomial, k0) -> bool:
    """Exact test: p(k) >= 0 for every real k >= k0.

    Characterization: p(k0) >= 0, the leading coefficient is positive
    (nonconstant case), and p has no odd-multiplicity root beyond k0.
    Even-order touch points above k0 are allowed.
    """
    k0 = frac(k0)
    if p.is_zero:
        return True
    if p.degree == 0:
        return p.coeffs[0] >= 0
    if p.leading < 0 or p(k0) < 0:
        return False
    odd = _odd_multiplicity_part(p)
    if odd.degree <= 0:
        return True
    return count_real_roots(odd, lower=k0) == 0


def positive_on_ray(p: KPolynomial, k0) -> bool:
    """Exact test: p(k) > 0 for every real k >= k0."""
    k0 = frac(k0)
    if p.is_zero:
        return False
    if p.degree == 0:
        return p.coeffs[0] > 0
    if p(k0) <= 0 or p.leading < 0:
        return False
    return count_real_roots(p, lower=k0) == 0


# ---------------------------------------------------------------------------
# rational functions


class RationalFunction:
    """Quotient of KPolynomials, normalized: monic denominator, gcd 1."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = _require_poly(num)
        den = _require_poly(den)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            den = KPolynomial.constant(1)
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
            lc = den.leading
            if lc != 1:
                num = num * KPolynomial.constant(1 / lc)
                den = den.monic()
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("RationalFunction is immutable")

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def as_polynomial(self) -> KPolynomial:
        if not self.is_polynomial:
            raise ValueError(f"not a polynomial: denominator {self.den.pretty()}")
        return self.num

    def __call__(self, x) -> Fraction:
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return self.num(x) / d

    def __eq__(self, other) -> bool:
        other = _as_rf(other)
        return (
            other is not None
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __add__(self, other):
        other = _require_rf(other)
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_require_rf(other))

    def __rsub__(self, other):
        return _require_rf(other) + (-self)

    def __mul__(self, other):
        other = _require_rf(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _require_rf(other)
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _require_rf(other) / self

    def __repr__(self):
        if self.is_polynomial:
            return f"RF({self.num.pretty()})"
        return f"RF(({self.num.pretty()}) / ({self.den.pretty()}))"


def _as_rf(x):
    if isinstance(x, RationalFunction):
        return x
    p = _as_poly(x)
    return None if p is None else RationalFunction(p)


def _require_rf(x) -> RationalFunction:
    r = _as_rf(x)
    if r is None:
        raise TypeError(f"cannot treat {type(x).__name__} as rational function")
    return r


def rf_nonneg_on_ray(r: RationalFunction, k0) -> bool:
    """Nonnegativity of num/den on [k0, inf); denominator must keep a sign.

    Raises ValueError if the denominator vanishes somewhere on the ray.
    """
    den = r.den
    if den.degree > 0 and count_real_roots(den, lower=k0) > 0 or den(k0) == 0:
        raise ValueError(
            f"denominator {den.pretty()} changes sign or vanishes on the ray"
        )
    num = r.num if den(k0) > 0 else -r.num
    return nonneg_on_ray(num, k0)


# ---------------------------------------------------------------------------
# exact symmetric PSD check


@dataclass(frozen=True)
class SymMatrix:
    """Symmetric matrix over Q (entries validated on construction)."""

    entries: tuple[tuple[Fraction, ...], ...]

    @staticmethod
    def from_rows(rows) -> "SymMatrix":
        ent = tuple(tuple(frac(x) for x in row) for row in rows)
        n = len(ent)
        if any(len(row) != n for row in ent):
            raise ValueError("matrix is not square")
        for i in range(n):
            for j in range(i):
                if ent[i][j] != ent[j][i]:
                    raise ValueError(f"not symmetric at ({i},{j})")
        return SymMatrix(ent)

    @property
    def order(self) -> int:
        return len(self.entries)

    def quadratic_form(self, v: Sequence) -> Fraction:
        v = [frac(x) for x in v]
        return sum(
            self.entries[i][j] * v[i] * v[j]
            for i in range(self.order)
            for j in range(self.order)
        )


@dataclass(frozen=True)
class PSDResult:
    """Outcome of an exact LDL^T factorization attempt.

    PSD case: perm, unit lower-triangular factor and nonnegative pivots
    with P M P^T = L D L^T.  Failure case: rational witness vector with
    witness^T M witness < 0.
    """

    psd: bool
    perm: tuple[int, ...] | None = None
    lower: tuple[tuple[Fraction, ...], ...] | None = None
    diag: tuple[Fraction, ...] | None = None
    witness: tuple[Fraction, ...] | None = None

    def verify(self, m: SymMatrix) -> bool:
        """Re-check the stored evidence against the matrix."""
        n = m.order
        if not self.psd:
            return m.quadratic_form(self.witness) < 0
        if any(d < 0 for d in self.diag):
            return False
        p, lo = self.perm, self.lower
        for i in range(n):
            if lo[i][i] != 1 or any(lo[i][j] != 0 for j in range(i + 1, n)):
                return False
        for i in range(n):
            for j in range(n):
                val = sum(lo[i][t] * self.diag[t] * lo[j][t] for t in range(n))
                if val != m.entries[p[i]][p[j]]:
                    return False
        return True


def psd_check(m: SymMatrix) -> PSDResult:
    """Exact PSD decision by pivoted LDL^T over Q."""
    n = m.order
    a = [[m.entries[i][j] for j in range(n)] for i in range(n)]
    order = list(range(n))  # order[t] = original index at pivot slot t
    lower = [[Fraction(0)] * n for _ in range(n)]
    diag = [Fraction(0)] * n
    for t in range(n):
        lower[t][t] = Fraction(1)

    for t in range(n):
        piv = next((j for j in range(t, n) if a[j][j] > 0), None)
        if piv is None:
            neg = next((j for j in range(t, n) if a[j][j] < 0), None)
            if neg is not None:
                return _lift_witness(n, t, {neg: Fraction(1)}, lower, order)
            off = next(
                (
                    (i, j)
                    for i in range(t, n)
                    for j in range(i + 1, n)
                    if a[i][j] != 0
                ),
                None,
            )
            if off is None:
                break  # residual block is zero: PSD
            i, j = off
            return _lift_witness(
                n,
                t,
                {i: Fraction(-1, 2) / a[i][j], j: Fraction(1)},
                lower,
                order,
            )
        if piv != t:
            a[piv], a[t] = a[t], a[piv]
            for row in a:
                row[piv], row[t] = row[t], row[piv]
            order[piv], order[t] = order[t], order[piv]
            for c in range(t):  # identity part stays put
                lower[piv][c], lower[t][c] = lower[t][c], lower[piv][c]
        d = a[t][t]
        diag[t] = d
        for i in range(t + 1, n):
            f = a[i][t] / d
            lower[i][t] = f
            if f:
                for j in range(t + 1, n):
                    a[i][j] -= f * a[t][j]
    return PSDResult(
        psd=True,
        perm=tuple(order),
        lower=tuple(tuple(row) for row in lower),
        diag=tuple(diag),
    )


def _lift_witness(n, t, slot_values, lower, order) -> PSDResult:
    """Turn a residual-block witness into one for the original matrix.

    The elimination so far is P M P^T = L [D 0; 0 S] L^T with S the
    residual block at slot t.  A vector w with w^T S w < 0 lifts to
    y = (L^T)^{-1} [0; w]: then y^T (P M P^T) y = w^T S w.
    """
    y = [Fraction(0)] * n
    for slot, val in slot_values.items():
        y[slot] = val
    # solve L^T x = [0; w]: back substitution over the first t columns
    for s in range(t - 1, -1, -1):
        y[s] = -sum(lower[i][s] * y[i] for i in range(s + 1, n))
    vec = [Fraction(0)] * n
    for slot in range(n):
        vec[order[slot]] = y[slot]
    return PSDResult(psd=False, witness=tuple(vec))

"""Rational functions and quadratic function-field elements.

RationalFunction keeps num/den unreduced by default: the certificate
computations chain hundreds of products and a gcd per operation would swamp
everything.  Zero tests and equality work by cross-multiplication; ``reduce``
produces the canonical form (monic denominator, gcd cleared) when a stored
object needs it.

Genus-one solutions live in K(s)[u]/(u^2 - q(s)); CurveElement implements that
extension, including d/ds with the chain rule through u' = q' u / (2 q).
"""

from __future__ import annotations

from fractions import Fraction

from .nfield import frac
from .poly import Poly, PolyError


class PoleError(ArithmeticError):
    def __init__(self, point, order):
        self.point = point
        self.order = order
        super().__init__(f"pole of order {order} at {point}")


class FunctionField:
    """Ring handle for rational functions over a coefficient ring."""

    def __init__(self, coeff_ring, var: str = "s"):
        self.coeff_ring = coeff_ring
        self.var = var
        self.zero = RationalFunction(Poly(coeff_ring, [], var),
                                     Poly(coeff_ring, [coeff_ring.one], var))
        self.one = RationalFunction(Poly(coeff_ring, [coeff_ring.one], var),
                                    Poly(coeff_ring, [coeff_ring.one], var))
        self.x = RationalFunction(Poly.x(coeff_ring, var),
                                  Poly(coeff_ring, [coeff_ring.one], var))

    def coerce(self, v) -> "RationalFunction":
        if isinstance(v, RationalFunction):
            if v.num.ring is self.coeff_ring and v.num.var == self.var:
                return v
            # a rational function over the coefficient ring itself: a constant
            c = self.coeff_ring.coerce(v)
            return RationalFunction(Poly(self.coeff_ring, [c], self.var),
                                    Poly(self.coeff_ring, [self.coeff_ring.one], self.var))
        if isinstance(v, Poly):
            if v.ring is self.coeff_ring and v.var == self.var:
                return RationalFunction(v, Poly(self.coeff_ring, [self.coeff_ring.one],
                                                self.var))
            c = self.coeff_ring.coerce(v)
            return RationalFunction(Poly(self.coeff_ring, [c], self.var),
                                    Poly(self.coeff_ring, [self.coeff_ring.one], self.var))
        c = self.coeff_ring.coerce(v)
        return RationalFunction(Poly(self.coeff_ring, [c], self.var),
                                Poly(self.coeff_ring, [self.coeff_ring.one], self.var))

    def from_polys(self, num: Poly, den: Poly) -> "RationalFunction":
        return RationalFunction(num, den)


class RationalFunction:
    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num = num
        self.den = den

    # -- ring ops ------------------------------------------------------------
    def _co(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Poly):
            return RationalFunction(other, _one_poly(self))
        return RationalFunction(Poly(self.num.ring, [self.num.ring.coerce(other)],
                                     self.num.var), _one_poly(self))

    def __add__(self, other):
        o = self._co(other)
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._co(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._co(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._co(other)
        if o.num.is_zero():
            raise ZeroDivisionError("division by the zero function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._co(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return (self.inverse()) ** (-k)
        return RationalFunction(self.num ** k, self.den ** k)

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError
        return RationalFunction(self.den, self.num)

    # -- predicates ------------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, (RationalFunction, Poly, int, Fraction)) or _is_scalar(other, self):
            o = self._co(other)
            return (self.num * o.den - o.num * self.den).is_zero()
        return NotImplemented

    def __hash__(self):
        r = self.reduce()
        return hash((r.num.coeffs, r.den.coeffs))

    # -- calculus / evaluation ---------------------------------------------------
    def deriv(self) -> "RationalFunction":
        return RationalFunction(self.num.deriv() * self.den - self.num * self.den.deriv(),
                                self.den * self.den)

    def eval(self, x):
        """Exact evaluation; raises PoleError (with the pole order) at poles."""
        dv = self.den.eval(x)
        nv = self.num.eval(x)
        if not dv:
            r = self.reduce()
            dv = r.den.eval(x)
            nv = r.num.eval(x)
            if not dv:
                order = _vanishing_order(r.den, x)
                raise PoleError(x, order)
            return nv / dv
        return nv / dv

    def eval_complex(self, z: complex) -> complex:
        nv = _eval_poly_complex(self.num, z)
        dv = _eval_poly_complex(self.den, z)
        return nv / dv

    # -- normal form ----------------------------------------------------------------
    def reduce(self) -> "RationalFunction":
        """Canonical form: gcd cleared, denominator monic."""
        if self.num.is_zero():
            one = _one_poly(self)
            return RationalFunction(Poly(self.num.ring, [], self.num.var), one)
        g = self.num.gcd(self.den)
        num, den = self.num, self.den
        if g.degree > 0:
            num = num.exact_div(g)
            den = den.exact_div(g)
        lead = den.lc()
        inv = num.ring.one / lead
        num = num * inv
        den = den * inv
        return RationalFunction(num, den)

    @property
    def degree(self) -> int:
        """Degree as a map P1 -> P1 (after reduction)."""
        r = self.reduce()
        return max(r.num.degree, r.den.degree)

    def __repr__(self):
        if self.den.degree == 0 and self.den.lc() == self.den.ring.one:
            return repr(self.num)
        return f"({self.num!r})/({self.den!r})"


def _one_poly(rf: RationalFunction) -> Poly:
    return Poly(rf.num.ring, [rf.num.ring.one], rf.num.var)


def _is_scalar(other, rf) -> bool:
    try:
        rf.num.ring.coerce(other)
        return True
    except Exception:
        return False


# -- nested rational functions (coefficients are themselves rational functions)

def _redc(c):
    return c.reduce() if isinstance(c, RationalFunction) else c


def nested_divmod(a: Poly, b: Poly):
    """Polynomial division that reduces the (rational-function) coefficients
    after every elimination step; plain divmod explodes on nested fields."""
    if b.is_zero():
        raise ZeroDivisionError
    rem = [_redc(c) for c in a.coeffs]
    lead = b.lc()
    dq = b.degree
    ring = a.ring
    quot = [ring.zero] * max(0, len(rem) - dq)
    while len(rem) - 1 >= dq and rem:
        c = _redc(rem[-1] / lead)
        k = len(rem) - 1 - dq
        quot[k] = c
        for i in range(dq + 1):
            rem[k + i] = _redc(rem[k + i] - c * b.coeffs[i])
        while rem and not rem[-1]:
            rem.pop()
    return Poly(a.ring, quot, a.var), Poly(a.ring, rem, a.var)


def nested_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        _, r = nested_divmod(a, b)
        if not r.is_zero():
            inv = _redc(r.lc().inverse() if hasattr(r.lc(), "inverse")
                        else 1 / r.lc())
            r = r.map_coeffs(lambda c: _redc(c * inv))
        a, b = b, r
    if a.is_zero():
        return a
    inv = _redc(a.lc().inverse() if hasattr(a.lc(), "inverse") else 1 / a.lc())
    return a.map_coeffs(lambda c: _redc(c * inv))


def nested_reduce(rf: RationalFunction) -> RationalFunction:
    """Canonical form of a rational function over a function-field base."""
    num = rf.num.map_coeffs(_redc)
    den = rf.den.map_coeffs(_redc)
    if num.is_zero():
        return RationalFunction(num, Poly(den.ring, [den.ring.one], den.var))
    g = nested_gcd(num, den)
    if g.degree > 0:
        num, _ = nested_divmod(num, g)
        den, _ = nested_divmod(den, g)
    lead = den.lc()
    inv = _redc(lead.inverse() if hasattr(lead, "inverse") else 1 / lead)
    num = num.map_coeffs(lambda c: _redc(c * inv))
    den = den.map_coeffs(lambda c: _redc(c * inv))
    return RationalFunction(num, den)


def _vanishing_order(p: Poly, x) -> int:
    order = 0
    while not p.eval(x):
        order += 1
        p = p.deriv()
        if p.is_zero():
            break
    return order


def _eval_poly_complex(p: Poly, z: complex) -> complex:
    acc = 0j
    for c in reversed(p.coeffs):
        acc = acc * z + _to_complex(c)
    return acc


def _to_complex(c) -> complex:
    if isinstance(c, (int, float, complex)):
        return complex(c)
    if isinstance(c, Fraction):
        return complex(c)
    emb = getattr(c, "embed", None)
    if emb is not None:
        return complex(emb())
    raise TypeError(f"cannot embed {c!r}")


# ---------------------------------------------------------------------------


class CurveField:
    """K(s)[u] / (u^2 - q(s)): the function field of a hyperelliptic-type curve."""

    def __init__(self, base: FunctionField, q: Poly):
        if q.is_zero():
            raise PolyError("branch polynomial must be nonzero")
        self.base = base
        self.q = q
        self.zero = CurveElement(self, base.zero, base.zero)
        self.one = CurveElement(self, base.one, base.zero)
        self.u = CurveElement(self, base.zero, base.one)
        self.x = CurveElement(self, base.x, base.zero)

    def coerce(self, v) -> "CurveElement":
        if isinstance(v, CurveElement):
            return v
        return CurveElement(self, self.base.coerce(v), self.base.zero)

    def from_parts(self, a, b) -> "CurveElement":
        return CurveElement(self, self.base.coerce(a), self.base.coerce(b))


class CurveElement:
    """a(s) + b(s)*u with u^2 = q(s)."""

    __slots__ = ("curve", "a", "b")

    def __init__(self, curve: CurveField, a: RationalFunction, b: RationalFunction):
        self.curve = curve
        self.a = a
        self.b = b

    def _co(self, other) -> "CurveElement":
        if isinstance(other, CurveElement):
            return other
        return self.curve.coerce(other)

    def __add__(self, other):
        o = self._co(other)
        return CurveElement(self.curve, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return CurveElement(self.curve, -self.a, -self.b)

    def __sub__(self, other):
        o = self._co(other)
        return CurveElement(self.curve, self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._co(other)
        q = self.curve.base.coerce(self.curve.q)
        return CurveElement(self.curve,
                            self.a * o.a + self.b * o.b * q,
                            self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def conj(self):
        return CurveElement(self.curve, self.a, -self.b)

    def norm(self) -> RationalFunction:
        q = self.curve.base.coerce(self.curve.q)
        return self.a * self.a - self.b * self.b * q

    def inverse(self):
        n = self.norm()
        if n.is_zero():
            raise ZeroDivisionError("norm-zero curve element")
        return CurveElement(self.curve, self.a / n, -self.b / n)

    def __truediv__(self, other):
        return self * self._co(other).inverse()

    def __rtruediv__(self, other):
        return self._co(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.curve.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        o = self._co(other)
        return (self.a - o.a).is_zero() and (self.b - o.b).is_zero()

    def deriv(self) -> "CurveElement":
        """d/ds on the curve: (a + b u)' = a' + (b' + b q'/(2q)) u."""
        q = self.curve.base.coerce(self.curve.q)
        qp = self.curve.base.coerce(self.curve.q.deriv())
        two = self.curve.base.coerce(2)
        return CurveElement(self.curve,
                            self.a.deriv(),
                            self.b.deriv() + self.b * qp / (two * q))

    def eval(self, s0, u0):
        """Exact value at a curve point (s0, u0); caller warrants u0^2 = q(s0)."""
        return self.a.eval(s0) + self.b.eval(s0) * u0

    def eval_complex(self, s0: complex, u0: complex) -> complex:
        return self.a.eval_complex(s0) + self.b.eval_complex(s0) * u0

    def __repr__(self):
        return f"({self.a!r}) + ({self.b!r})*u"

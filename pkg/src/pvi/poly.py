"""Dense univariate polynomials over an arbitrary exact coefficient ring.

The coefficient ring is any object exposing ``zero``, ``one`` and
``coerce`` (NumberField, RelativeExtension, FunctionField, or the QQ
singleton); coefficients themselves only need field arithmetic.  Reduction,
gcd, resultants and squarefree decomposition are the classical dense
algorithms -- degrees stay small enough here that anything fancier would be
noise.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm, gcd as int_gcd

from .nfield import QQ, FieldElement, frac


class PolyError(ValueError):
    pass


class Poly:
    __slots__ = ("ring", "coeffs", "var")

    def __init__(self, ring, coeffs, var: str = "s"):
        cs = [ring.coerce(c) if not _same_ring_elt(c, ring) else c for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.ring = ring
        self.coeffs = tuple(cs)
        self.var = var

    # -- constructors ----------------------------------------------------------
    @staticmethod
    def x(ring, var: str = "s") -> "Poly":
        return Poly(ring, [ring.zero, ring.one], var)

    @staticmethod
    def const(ring, c, var: str = "s") -> "Poly":
        return Poly(ring, [c], var)

    # -- basic introspection ----------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def lc(self):
        if not self.coeffs:
            return self.ring.zero
        return self.coeffs[-1]

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.ring.zero

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        other = self.ring.coerce(other)
        return self == Poly(self.ring, [other], self.var)

    def __hash__(self):
        return hash(self.coeffs)

    # -- arithmetic --------------------------------------------------------------
    def _copol(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        return Poly(self.ring, [self.ring.coerce(other)], self.var)

    def __add__(self, other):
        o = self._copol(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly(self.ring,
                    [self[i] + o[i] for i in range(n)], self.var)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, [-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        return self + (-self._copol(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._copol(other)
        if not self.coeffs or not o.coeffs:
            return Poly(self.ring, [], self.var)
        out = [self.ring.zero] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return Poly(self.ring, out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise PolyError("negative polynomial power")
        out = Poly(self.ring, [self.ring.one], self.var)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def divmod(self, other: "Poly"):
        o = self._copol(other)
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        lead = o.lc()
        dq = o.degree
        quot = [self.ring.zero] * max(0, len(rem) - dq)
        while len(rem) - 1 >= dq and rem:
            c = rem[-1] / lead
            k = len(rem) - 1 - dq
            quot[k] = c
            for i in range(dq + 1):
                rem[k + i] = rem[k + i] - c * o.coeffs[i]
            while rem and not rem[-1]:
                rem.pop()
        return Poly(self.ring, quot, self.var), Poly(self.ring, rem, self.var)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise PolyError("division is not exact")
        return q

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        inv = self.ring.one / self.lc()
        return Poly(self.ring, [c * inv for c in self.coeffs], self.var)

    def deriv(self) -> "Poly":
        return Poly(self.ring,
                    [self.coeffs[i] * i for i in range(1, len(self.coeffs))], self.var)

    def eval(self, x):
        """Horner evaluation; x may live in any ring compatible with +,*."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if acc is None:
            return self.ring.zero
        return acc

    def compose(self, other: "Poly") -> "Poly":
        out = Poly(self.ring, [], self.var)
        for c in reversed(self.coeffs):
            out = out * other + Poly(self.ring, [c], self.var)
        return out

    def shift(self, a) -> "Poly":
        """p(x + a)."""
        a = self.ring.coerce(a)
        return self.compose(Poly(self.ring, [a, self.ring.one], self.var))

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, self._copol(other)
        if isinstance(self.ring, type(QQ)) or hasattr(self.ring, "minimal_polynomial"):
            return _gcd_primitive(a, b)
        while not b.is_zero():
            r = a % b
            a, b = b, (r.monic() if not r.is_zero() else r)
        return a.monic() if not a.is_zero() else a

    def resultant(self, other: "Poly"):
        """Resultant by the Euclidean PRS with the classical lc corrections."""
        p, q = self, self._copol(other)
        if p.is_zero() or q.is_zero():
            return self.ring.zero
        res = self.ring.one
        while True:
            dp, dq = p.degree, q.degree
            if dq == 0:
                return res * q.coeffs[0] ** dp
            r = p % q
            if r.is_zero():
                return self.ring.zero
            dr = r.degree
            sign = self.ring.coerce(-1) ** (dp * dq) if (dp * dq) % 2 else self.ring.one
            res = res * sign * q.lc() ** (dp - dr)
            p, q = q, r

    def squarefree_part(self) -> "Poly":
        if self.degree <= 1:
            return self.monic()
        g = self.gcd(self.deriv())
        if g.degree == 0:
            return self.monic()
        return self.exact_div(g).monic()

    def squarefree_decomposition(self):
        """Yun's algorithm; returns [(factor, multiplicity)] with monic factors."""
        p = self.monic()
        out = []
        g = p.gcd(p.deriv())
        w = p.exact_div(g)
        i = 1
        while w.degree > 0:
            y = w.gcd(g)
            fac = w.exact_div(y)
            if fac.degree > 0:
                out.append((fac, i))
            w = y
            g = g.exact_div(y)
            i += 1
        return out

    # -- conversions ---------------------------------------------------------------
    def map_coeffs(self, fn, ring=None) -> "Poly":
        return Poly(ring or self.ring, [fn(c) for c in self.coeffs], self.var)

    def to_fraction_list(self) -> list[Fraction]:
        out = []
        for c in self.coeffs:
            if isinstance(c, FieldElement):
                out.append(c.to_rational())
            else:
                out.append(frac(c))
        return out

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            cs = f"({c})" if not _is_simple_repr(c) else str(c)
            if i == 0:
                terms.append(cs)
            elif i == 1:
                terms.append(f"{cs}*{self.var}" if cs != "1" else self.var)
            else:
                terms.append(f"{cs}*{self.var}^{i}" if cs != "1" else f"{self.var}^{i}")
        return " + ".join(terms)


def _same_ring_elt(c, ring):
    fld = getattr(c, "field", None) or getattr(c, "parent", None)
    return fld is ring


def _rat_content(p: Poly) -> Fraction:
    """gcd of all rational coordinates of the coefficients (0 for zero)."""
    from math import gcd as ig, lcm

    num_g = 0
    den_l = 1
    for c in p.coeffs:
        coords = c.coords if isinstance(c, FieldElement) else (frac(c),)
        for q in coords:
            if q:
                num_g = ig(num_g, abs(q.numerator))
                den_l = lcm(den_l, q.denominator)
    if num_g == 0:
        return Fraction(0)
    return Fraction(num_g, den_l)


def _strip_content(p: Poly) -> Poly:
    c = _rat_content(p)
    if not c or c == 1:
        return p
    inv = 1 / c
    return Poly(p.ring, [co * inv for co in p.coeffs], p.var)


def _pseudo_mod(a: Poly, b: Poly) -> Poly:
    """prem(a, b): remainder of lc(b)^(da-db+1) * a by b, division-free."""
    rem = list(a.coeffs)
    lead = b.lc()
    db = b.degree
    while len(rem) - 1 >= db and rem:
        top = rem[-1]
        k = len(rem) - 1 - db
        rem = [c * lead for c in rem]
        for i in range(db + 1):
            rem[k + i] = rem[k + i] - top * b.coeffs[i]
        while rem and not rem[-1]:
            rem.pop()
    return Poly(a.ring, rem, a.var)


def _gcd_primitive(a: Poly, b: Poly) -> Poly:
    """Primitive PRS gcd for number-field coefficients: pseudo-division plus
    content stripping keeps coefficient heights polynomial."""
    a = _strip_content(a)
    b = _strip_content(b)
    while not b.is_zero():
        r = _strip_content(_pseudo_mod(a, b))
        a, b = b, r
    return a.monic() if not a.is_zero() else a


def _is_simple_repr(c) -> bool:
    s = str(c)
    return not any(ch in s for ch in "+- ") or (s.startswith("-") and
                                                not any(ch in s[1:] for ch in "+- "))


# ---------------------------------------------------------------------------
# rational-coefficient utilities

def qq_poly(coeffs, var: str = "s") -> Poly:
    return Poly(QQ, [QQ.coerce(frac(c)) for c in coeffs], var)


def poly_content_clear(p: Poly) -> tuple[Poly, Fraction]:
    """Scale a QQ-polynomial to primitive integer form; returns (poly, scale)
    with ``p == scale * poly``."""
    if p.is_zero():
        return p, Fraction(1)
    fracs = p.to_fraction_list()
    den = 1
    for c in fracs:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in fracs]
    g = 0
    for c in ints:
        g = int_gcd(g, abs(c))
    g = g or 1
    sign = -1 if ints[-1] < 0 else 1
    ints = [c * sign // g for c in ints]
    return qq_poly(ints, p.var), Fraction(g * sign, den)


def factor_over(p: Poly):
    """Irreducible factorisation of a polynomial over its number field.

    Supported coefficient rings: QQ and quadratic/quartic number fields that
    sympy can treat as QQ(alpha).  Returns [(Poly, multiplicity)] with monic
    factors, plus the constant so that the product reconstitutes p.
    """
    import sympy

    ring = p.ring
    x = sympy.Symbol(p.var)
    if ring is QQ or getattr(ring, "degree", 0) == 1:
        expr = sum(sympy.Rational(c.to_rational()) * x ** i
                   for i, c in enumerate(p.coeffs))
        sp = sympy.Poly(expr, x, domain=sympy.QQ)
        const, facs = sp.factor_list()
        out = []
        for f, m in facs:
            cs = [QQ.coerce(Fraction(str(c))) for c in reversed(f.all_coeffs())]
            out.append((Poly(QQ, cs, p.var).monic(), m))
        return out
    # number-field coefficients through sympy's algebraic domain
    minpoly = sympy.Poly([int(c) for c in reversed(ring.minimal_polynomial)],
                         sympy.Symbol("_t"))
    alpha = None
    target = complex(ring.root)
    for r in minpoly.all_roots():
        if abs(complex(r.evalf(30)) - target) < 1e-8:
            alpha = r
            break
    if alpha is None:
        raise PolyError("could not match the field embedding inside sympy")
    dom = sympy.QQ.algebraic_field(alpha)
    expr = 0
    for i, c in enumerate(p.coeffs):
        lift = sum(sympy.Rational(co) * alpha ** j for j, co in enumerate(c.coords))
        expr += lift * x ** i
    sp = sympy.Poly(expr, x, domain=dom)
    _, facs = sp.factor_list()
    out = []
    for f, m in facs:
        fe = sympy.Poly(f.as_expr(), x)
        cs = [_alg_to_field_elt(c, alpha, ring) for c in reversed(fe.all_coeffs())]
        out.append((Poly(ring, cs, p.var).monic(), m))
    return out


def _alg_to_field_elt(expr, alpha, ring):
    import sympy

    expr = sympy.expand(expr)
    coords = [Fraction(0)] * ring.degree
    if not expr.has(alpha):
        coords[0] = Fraction(str(sympy.nsimplify(expr)))
        return ring.element(coords)
    poly = sympy.Poly(expr, alpha)
    for (k,), c in poly.terms():
        coords[k] = Fraction(str(sympy.nsimplify(c)))
    return ring.element(coords)


# ---------------------------------------------------------------------------
# text form: integer/rational polynomial strings in a named variable

def parse_poly(text: str, ring, var: str = "s", symbols: dict | None = None) -> Poly:
    """Parse '+-*^()' polynomial strings like '(s^2+3)*(s-1)^2 - 4*s'.

    ``symbols`` maps extra names (e.g. 'i') to ring elements.
    """
    symbols = symbols or {}
    tokens = _tokenize(text)
    pos = [0]

    X = Poly.x(ring, var)

    def peek():
        return tokens[pos[0]] if pos[0] < len(tokens) else None

    def take():
        t = tokens[pos[0]]
        pos[0] += 1
        return t

    def parse_expr():
        node = parse_term()
        while peek() in ("+", "-"):
            op = take()
            rhs = parse_term()
            node = node + rhs if op == "+" else node - rhs
        return node

    def parse_term():
        node = parse_power()
        while True:
            t = peek()
            if t == "*":
                take()
                node = node * parse_power()
            elif t == "/":
                take()
                d = parse_power()
                if d.degree != 0:
                    raise PolyError("only constant division inside polynomials")
                node = node * Poly(ring, [ring.one / d.coeffs[0]], var)
            elif t is not None and (t == "(" or t == var or t in symbols or _is_num(t)):
                # implicit multiplication: '2s', 's(s+1)', ')('
                node = node * parse_power()
            else:
                return node

    def parse_power():
        # unary minus binds looser than '^': -x^2 means -(x^2)
        if peek() == "-":
            take()
            return -parse_power()
        if peek() == "+":
            take()
            return parse_power()
        node = parse_atom()
        if peek() == "^":
            take()
            sign = 1
            if peek() == "-":
                take()
                sign = -1
            e = take()
            if not _is_num(e):
                raise PolyError("polynomial exponents must be integers")
            k = int(e)
            if sign < 0:
                raise PolyError("negative exponents are not polynomial")
            node = node ** k
        return node

    def parse_atom():
        t = take()
        if t == "(":
            node = parse_expr()
            if take() != ")":
                raise PolyError("unbalanced parentheses")
            return node
        if t == var:
            return X
        if t in symbols:
            return Poly(ring, [symbols[t]], var)
        if _is_num(t):
            return Poly(ring, [ring.coerce(frac(t))], var)
        raise PolyError(f"unexpected token {t!r}")

    out = parse_expr()
    if pos[0] != len(tokens):
        raise PolyError(f"trailing input at token {pos[0]}")
    return out


def _tokenize(text: str):
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "+-*/^()":
            out.append(ch)
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and (text[j].isdigit() or text[j] == "/"):
                # keep 'p/q' only when both sides digits; safest: digits only
                if text[j] == "/":
                    break
                j += 1
            out.append(text[i:j])
            i = j
        elif ch.isalpha():
            j = i
            while j < len(text) and text[j].isalpha():
                j += 1
            out.append(text[i:j])
            i = j
        else:
            raise PolyError(f"bad character {ch!r}")
    return out


def _is_num(t: str) -> bool:
    return t is not None and t[0].isdigit()

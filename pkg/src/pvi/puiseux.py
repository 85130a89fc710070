"""Truncated fractional-power series and series-to-rational reconstruction.

The workhorse is LocalSeries: a Laurent-type series in a single local
variable with integer exponents, a dict of exact coefficients and an explicit
truncation bound (coefficients are known exactly for every exponent below
``trunc``).  Fractional powers of t enter through the convention t = c0 * w^d
("scaled" coordinate, all arithmetic stays in the base field) or through the
spec-level PuiseuxSeries wrapper in tau = t^(1/d).

No operation ever truncates silently: every result carries the truncation
order implied by its inputs.
"""

from __future__ import annotations

from fractions import Fraction

from .funcfield import RationalFunction
from .poly import Poly


class SeriesError(ValueError):
    pass


_BIG = 1 << 60


class LocalSeries:
    __slots__ = ("ring", "coeffs", "trunc")

    def __init__(self, ring, coeffs: dict, trunc: int):
        self.ring = ring
        self.coeffs = {k: v for k, v in coeffs.items() if k < trunc and v}
        self.trunc = trunc

    # -- constructors -----------------------------------------------------------
    @staticmethod
    def zero(ring, trunc: int) -> "LocalSeries":
        return LocalSeries(ring, {}, trunc)

    @staticmethod
    def monomial(ring, coeff, exp: int, trunc: int) -> "LocalSeries":
        return LocalSeries(ring, {exp: ring.coerce(coeff)}, trunc)

    @staticmethod
    def from_poly(p: Poly, trunc: int) -> "LocalSeries":
        return LocalSeries(p.ring, {i: c for i, c in enumerate(p.coeffs)}, trunc)

    # -- views ---------------------------------------------------------------------
    def valuation(self) -> int:
        """Exponent of the lowest known nonzero term; trunc when none is known."""
        return min(self.coeffs) if self.coeffs else self.trunc

    def __getitem__(self, k: int):
        if k >= self.trunc:
            raise SeriesError(f"coefficient {k} beyond truncation {self.trunc}")
        return self.coeffs.get(k, self.ring.zero)

    def leading(self):
        if not self.coeffs:
            raise SeriesError("series has no known nonzero term")
        v = self.valuation()
        return self.coeffs[v], v

    def restrict(self, trunc: int) -> "LocalSeries":
        if trunc > self.trunc:
            raise SeriesError("cannot extend a truncated series")
        return LocalSeries(self.ring, self.coeffs, trunc)

    def is_known_zero(self) -> bool:
        return not self.coeffs

    # -- arithmetic ------------------------------------------------------------------
    def _co(self, other) -> "LocalSeries":
        if isinstance(other, LocalSeries):
            return other
        return LocalSeries.monomial(self.ring, other, 0, _BIG)

    def __add__(self, other):
        o = self._co(other)
        t = min(self.trunc, o.trunc)
        out = dict(self.coeffs)
        for k, v in o.coeffs.items():
            out[k] = out.get(k, self.ring.zero) + v
        return LocalSeries(self.ring, out, t)

    __radd__ = __add__

    def __neg__(self):
        return LocalSeries(self.ring, {k: -v for k, v in self.coeffs.items()}, self.trunc)

    def __sub__(self, other):
        return self + (-self._co(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._co(other)
        t = min(self.trunc + o.valuation(), o.trunc + self.valuation())
        out = {}
        for i, a in self.coeffs.items():
            for j, b in o.coeffs.items():
                k = i + j
                if k < t:
                    out[k] = out.get(k, self.ring.zero) + a * b if k in out else a * b
        return LocalSeries(self.ring, out, t)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = LocalSeries.monomial(self.ring, self.ring.one, 0, _BIG)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def shift(self, n: int) -> "LocalSeries":
        return LocalSeries(self.ring, {k + n: v for k, v in self.coeffs.items()},
                           self.trunc + n)

    def scale(self, c) -> "LocalSeries":
        c = self.ring.coerce(c)
        return LocalSeries(self.ring, {k: v * c for k, v in self.coeffs.items()}, self.trunc)

    def scale_variable(self, c) -> "LocalSeries":
        """w -> c*w on the series: coefficient at w^k picks up c^k (c invertible)."""
        c = self.ring.coerce(c)
        out = {}
        for k, v in self.coeffs.items():
            out[k] = v * (c ** k if k >= 0 else (self.ring.one / c) ** (-k))
        return LocalSeries(self.ring, out, self.trunc)

    def inverse(self) -> "LocalSeries":
        if self.is_known_zero():
            raise ZeroDivisionError("cannot invert a series with no known terms")
        c0, v = self.leading()
        n_terms = self.trunc - v
        inv0 = self.ring.one / c0
        # g = inverse of (self * w^-v * c0^-1) = 1 + h; invert by recursion
        unit = {k - v: val * inv0 for k, val in self.coeffs.items()}
        out = {0: self.ring.one}
        for k in range(1, n_terms):
            acc = self.ring.zero
            for j in range(1, k + 1):
                uj = unit.get(j)
                if uj is not None:
                    ok = out.get(k - j)
                    if ok is not None:
                        acc = acc + uj * ok
            if acc:
                out[k] = -acc
        res = {k - v: val * inv0 for k, val in out.items()}
        return LocalSeries(self.ring, res, n_terms - v)

    def __truediv__(self, other):
        return self * self._co(other).inverse()

    def __rtruediv__(self, other):
        return self._co(other) / self

    def deriv_w(self) -> "LocalSeries":
        return LocalSeries(self.ring,
                           {k - 1: v * k for k, v in self.coeffs.items() if k != 0},
                           self.trunc - 1)

    def compose(self, inner: "LocalSeries") -> "LocalSeries":
        """self(inner), requiring val(inner) >= 1 and nonneg self exponents."""
        if self.coeffs and min(self.coeffs) < 0:
            raise SeriesError("composition requires a Taylor outer series")
        if inner.valuation() < 1:
            raise SeriesError("composition requires positive inner valuation")
        t = min(self.trunc * inner.valuation(), inner.trunc)
        out = LocalSeries.zero(self.ring, t)
        top = max(self.coeffs) if self.coeffs else 0
        for k in range(top, -1, -1):
            out = out * inner + self.coeffs.get(k, self.ring.zero)
        return out.restrict(min(t, out.trunc))

    def nth_root_unit(self, n: int) -> "LocalSeries":
        """(1 + h)^(1/n) for a series with constant term 1 (binomial series)."""
        c0, v = self.leading()
        if v != 0 or c0 != self.ring.one:
            raise SeriesError("nth_root_unit requires constant term exactly 1")
        h = self - self.ring.one
        out = LocalSeries.monomial(self.ring, self.ring.one, 0, self.trunc)
        term = LocalSeries.monomial(self.ring, self.ring.one, 0, self.trunc)
        alpha = Fraction(1, n)
        hv = h.valuation()
        if h.is_known_zero():
            return out
        k = 0
        while (k + 1) * hv < self.trunc:
            coeff = (alpha - k) / (k + 1)
            term = term * h
            term = term.scale(self.ring.coerce(coeff))
            out = out + term
            k += 1
        return out.restrict(self.trunc)

    def __repr__(self):
        items = sorted(self.coeffs)
        body = " + ".join(f"({self.coeffs[k]})*w^{k}" for k in items[:8])
        more = " + ..." if len(items) > 8 else ""
        return f"<series {body}{more} + O(w^{self.trunc})>"


def reverse_scaled(t_of_eps: LocalSeries, d: int) -> tuple["LocalSeries", object]:
    """Invert t(eps) = c0*eps^d*(1 + ...) in the scaled coordinate.

    Returns (eps_of_w, c0) where t = c0 * w^d exactly after composition and
    eps_of_w has coefficients in the base ring (no radicals: w = t^(1/d)/beta
    for beta any fixed d-th root of c0, but beta itself never appears).
    """
    if t_of_eps.is_known_zero():
        raise SeriesError("cannot reverse the zero series")
    c0, v = t_of_eps.leading()
    if v != d:
        raise SeriesError(f"series valuation {v} does not match d={d}")
    ring = t_of_eps.ring
    n_terms = t_of_eps.trunc - d  # correction orders available
    # unit = t/(c0 eps^d) = 1 + a1 eps + ...
    inv_c0 = ring.one / c0
    unit = LocalSeries(ring, {k - d: val * inv_c0 for k, val in t_of_eps.coeffs.items()},
                       n_terms)
    # psi(eps) = eps * unit^(1/d) has linear coefficient 1; eps(w) = psi^{-1}(w)
    psi = unit.nth_root_unit(d).shift(1)
    eps = _revert_unit_series(psi, n_terms + 1)
    return eps, c0


def _revert_unit_series(psi: LocalSeries, trunc: int) -> LocalSeries:
    """Compositional inverse of psi = w + a2 w^2 + ... up to the given order."""
    ring = psi.ring
    coeffs = {1: ring.one}
    for k in range(2, trunc):
        partial = LocalSeries(ring, dict(coeffs), k + 1)
        val = psi.restrict(min(psi.trunc, k + 1)).compose(partial)
        err = val.coeffs.get(k, ring.zero)
        if err:
            coeffs[k] = -err
    return LocalSeries(ring, coeffs, trunc)


# ---------------------------------------------------------------------------
# spec-level Puiseux wrapper: series in tau = t^(1/d)


class PuiseuxSeries:
    """Fractional-power series sum c_k t^(k/d) with exact coefficients.

    ``coefficients`` maps the tau-exponent k to the coefficient; truncation is
    rational (known below t^(truncation_order)).
    """

    def __init__(self, ring, ramification_index: int, series: LocalSeries):
        if ramification_index < 1:
            raise SeriesError("ramification index must be >= 1")
        self.ring = ring
        self.ramification_index = ramification_index
        self.series = series

    @property
    def truncation_order(self) -> Fraction:
        return Fraction(self.series.trunc, self.ramification_index)

    def coefficients(self) -> dict:
        return dict(self.series.coeffs)

    def leading_term(self):
        c, v = self.series.leading()
        return c, Fraction(v, self.ramification_index)

    def lift(self, d_new: int) -> "PuiseuxSeries":
        if d_new % self.ramification_index:
            raise SeriesError("incompatible ramification lift")
        m = d_new // self.ramification_index
        s = LocalSeries(self.ring, {k * m: v for k, v in self.series.coeffs.items()},
                        self.series.trunc * m)
        return PuiseuxSeries(self.ring, d_new, s)

    def __add__(self, other):
        if not isinstance(other, PuiseuxSeries):
            other = PuiseuxSeries(self.ring, 1,
                                  LocalSeries.monomial(self.ring, other, 0, _BIG))
        from math import lcm
        d = lcm(self.ramification_index, other.ramification_index)
        return PuiseuxSeries(self.ring, d, self.lift(d).series + other.lift(d).series)

    def __mul__(self, other):
        if not isinstance(other, PuiseuxSeries):
            return PuiseuxSeries(self.ring, self.ramification_index,
                                 self.series.scale(other))
        from math import lcm
        d = lcm(self.ramification_index, other.ramification_index)
        return PuiseuxSeries(self.ring, d, self.lift(d).series * other.lift(d).series)

    __rmul__ = __mul__

    def __repr__(self):
        return f"Puiseux(d={self.ramification_index}, {self.series!r})"


def series_reverse(t_of_eps: LocalSeries, target_order: int, root_of_lead=None,
                   lift=None):
    """Spec-level reversal: eps as a Puiseux series in t^(1/d).

    ``t_of_eps`` is a plain series in the local parameter; its valuation d and
    leading coefficient c0 determine the branch.  For d > 1 a d-th root beta
    of c0 must be supplied, living in a declared extension ring reached by
    ``lift`` (defaults to coercion).  The chosen beta fixes the branch of
    t^(1/d).
    """
    if t_of_eps.is_known_zero():
        raise SeriesError("cannot reverse the zero series")
    _, d = t_of_eps.leading()[1], t_of_eps.valuation()
    eps_w, c0 = reverse_scaled(t_of_eps, d)
    if d == 1:
        # w = t/c0: rescale the variable by 1/c0
        out = eps_w.scale_variable(t_of_eps.ring.one / c0)
        return PuiseuxSeries(t_of_eps.ring, 1, out.restrict(min(out.trunc, target_order)))
    if root_of_lead is None:
        raise SeriesError("d-th root of the leading coefficient must be declared")
    beta = root_of_lead
    ring = _ring_of(beta)
    lift = lift or (lambda c: ring.coerce(c))
    if beta ** d != lift(c0):
        raise SeriesError("declared root does not satisfy beta^d = leading coefficient")
    inv_beta = beta ** (-1) if hasattr(beta, "__pow__") else 1 / beta
    coeffs = {}
    for k, v in eps_w.coeffs.items():
        coeffs[k] = lift(v) * _power(inv_beta, k)
    t_target = min(eps_w.trunc, target_order * d)
    return PuiseuxSeries(ring, d, LocalSeries(ring, coeffs, t_target))


def _power(x, k: int):
    out = None
    for _ in range(k):
        out = x if out is None else out * x
    return out if out is not None else 1


def _ring_of(elt):
    r = getattr(elt, "field", None) or getattr(elt, "parent", None)
    if r is None:
        from .nfield import QQ
        return QQ
    return r


# ---------------------------------------------------------------------------
# rational reconstruction from Laurent data (exact Pade)


def ratfunc_from_series(series: LocalSeries, degree_bound: tuple[int, int],
                        var: str = "t") -> RationalFunction:
    """Exact rational function N/D matching every supplied coefficient.

    ``degree_bound`` = (numerator degree, denominator degree).  Fails loudly
    when the data cannot be matched within the bounds or when too few
    coefficients are supplied (need >= num+den+1).
    """
    m, n = degree_bound
    ring = series.ring
    v = series.valuation() if series.coeffs else 0
    shift = -min(v, 0)
    s = series.shift(shift)  # Taylor now
    m_eff = m + shift
    if m_eff < 0:
        raise SeriesError("degree bound cannot accommodate the pole order")
    avail = s.trunc
    if avail < m_eff + n + 1:
        raise SeriesError(f"need at least {m_eff + n + 1} coefficients, have {avail}")

    def c(k):
        return s.coeffs.get(k, ring.zero)

    # kernel system: sum_j d_j c_{k-j} = 0 for k = m_eff+1 .. m_eff+n
    rows = []
    for k in range(m_eff + 1, m_eff + n + 1):
        rows.append([c(k - j) for j in range(n + 1)])
    dvec = _kernel_vector(rows, n + 1, ring)
    D = Poly(ring, dvec, var)
    if D.is_zero():
        raise SeriesError("degenerate denominator in rational reconstruction")
    prod = s * LocalSeries.from_poly(D, _BIG)
    N = Poly(ring, [prod.coeffs.get(k, ring.zero) for k in range(m_eff + 1)], var)
    # full verification against every supplied coefficient
    for k in range(min(prod.trunc, avail)):
        want = N[k] if k <= N.degree else ring.zero
        if prod.coeffs.get(k, ring.zero) != want:
            raise SeriesError("no rational function within the degree bounds "
                              f"matches the data (mismatch at order {k - shift})")
    num, den = N, D
    if shift:
        # undo the Laurent shift: result = N / (t^shift * D)
        den = den * Poly(ring, [ring.zero] * shift + [ring.one], var)
    rf = RationalFunction(num, den).reduce()
    # re-expansion check in reduced form (guards against spurious common factors)
    back = expand_ratfunc(rf, series.trunc)
    for k in range(min(series.trunc, back.trunc)):
        if back.coeffs.get(k, ring.zero) != series.coeffs.get(k, ring.zero):
            raise SeriesError("reduced reconstruction fails re-expansion")
    return rf


def expand_ratfunc(rf: RationalFunction, trunc: int) -> LocalSeries:
    """Laurent expansion of a rational function at 0 to the given order."""
    num = LocalSeries.from_poly(rf.num, trunc + max(0, rf.den.degree) + 4)
    den = LocalSeries.from_poly(rf.den, trunc + max(0, rf.den.degree) + 4)
    if num.is_known_zero():
        return LocalSeries.zero(rf.num.ring, trunc)
    out = num * den.inverse()
    return out.restrict(min(out.trunc, trunc))


def _kernel_vector(rows, ncols, ring):
    """A nonzero kernel vector of the row system over an exact field."""
    mat = [list(r) for r in rows]
    nrows = len(mat)
    pivots = {}
    r = 0
    for col in range(ncols):
        pr = None
        for i in range(r, nrows):
            if mat[i][col]:
                pr = i
                break
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = ring.one / mat[r][col]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][col]:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots[col] = r
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    if not free:
        raise SeriesError("kernel is trivial")
    fc = free[-1]
    vec = [ring.zero] * ncols
    vec[fc] = ring.one
    for col, row in pivots.items():
        vec[col] = -mat[row][fc]
    return vec

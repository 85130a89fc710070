"""Isomonodromic Fuchsian systems attached to PVI solutions.

Given y(t) with parameters theta, the rank-two system

    d/dz - (A1/z + A2/(z-t) + A3/(z-1)),   A_i traceless, eigenvalues
    +-theta_i/2, A1+A2+A3 = diag(-theta4, theta4)/2,

is reconstructed through the classical residue parameterisation

    A_i = [[z_i + theta_i/2, -u_i z_i], [(z_i + theta_i)/u_i, -z_i - theta_i/2]]

with z_i, u_i explicit rational expressions in (y, y', t, theta).  The same
formulas run over exact function fields (symbolic families), exact number
fields (single points) or complex floats (numerics).  Degenerations
(y in {0, 1, t, infinity} or theta4 = 0) are reported, not patched.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .nfield import QQ, frac
from .poly import Poly
from .funcfield import FunctionField, RationalFunction, PoleError
from .catalog import SolutionCurve, get


class DegenerationError(ArithmeticError):
    """A residue-formula denominator vanished (y at 0, 1, t or infinity)."""

    def __init__(self, which: str):
        self.which = which
        super().__init__(f"degenerate configuration: {which}")


@dataclass
class JMAuxiliaries:
    x: object
    p: object
    E: object
    k1: object
    k2: object
    z: tuple
    u: tuple


@dataclass
class FuchsianSystem:
    A1: tuple
    A2: tuple
    A3: tuple
    t: object
    theta: tuple
    aux: JMAuxiliaries | None = None

    def matrices(self):
        return (self.A1, self.A2, self.A3)

    def A4(self):
        th4 = self.theta[3]
        a = self.A1
        # A4 = diag(theta4, -theta4)/2 exactly when the sum identity holds
        s = _mat_add(_mat_add(self.A1, self.A2), self.A3)
        return _mat_neg(s)

    def to_numpy(self, embed=complex):
        out = []
        for M in self.matrices():
            out.append(np.array([[embed(M[0][0]), embed(M[0][1])],
                                 [embed(M[1][0]), embed(M[1][1])]], dtype=complex))
        return out


def _mat_add(A, B):
    return tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def _mat_neg(A):
    return tuple(tuple(-a for a in r) for r in A)


def momentum_p(y, yp, t, theta):
    """The canonical momentum 2p = sum over poles of (theta_i - ... ) / (y - a_i)."""
    t1, t2, t3, _ = (frac(v) for v in theta)
    one = _one_like(y)
    num1 = yp * (t - one) + t1
    num2 = yp + (t2 - 1)
    num3 = yp * t * (-1) + t3
    return (num1 / y + num2 / (y - t) + num3 / (y - one)) * Fraction(1, 2)


def _one_like(v):
    if isinstance(v, RationalFunction):
        ring = v.num.ring
        return FunctionField(ring, v.num.var).one
    if hasattr(v, "curve"):
        return v.curve.one
    if hasattr(v, "field"):
        return v.field.one
    return 1


def _norm(v):
    # reduce symbolic rational functions as they are built: the closed forms
    # have small true degree and unreduced chains explode
    return v.reduce() if isinstance(v, RationalFunction) else v


def jm_auxiliaries(y, yp, t, theta) -> JMAuxiliaries:
    t1, t2, t3, t4 = (frac(v) for v in theta)
    if t4 == 0:
        raise DegenerationError("theta4 = 0")
    one = _one_like(y)
    for name, val in (("y = 0", y), ("y = 1", y - one), ("y = t", y - t)):
        if (val.is_zero() if hasattr(val, "is_zero") else not val):
            raise DegenerationError(name)
    k1 = Fraction(t4 - t1 - t2 - t3, 2)
    k2 = Fraction(-t4 - t1 - t2 - t3, 2)
    p = _norm(momentum_p(y, yp, t, theta))
    x = _norm(p - one * t1 / y - one * t2 / (y - t) - one * t3 / (y - one))
    E = _norm(y * (y - one) * (y - t) * x * x
              + ((y - t) * t3 + t * (y - one) * t2 - (y - one) * (y - t) * (2 * k2)) * x
              + y * (k2 * k2) - (t * t2 + t3 * one) * k2)
    z1 = _norm(y * (E - (t + one) * (k2 * k2)) / (t * t4))
    z2 = _norm((y - t) * (E + t * (y - one) * x * t4 - one * (k2 * k2) - t * (k1 * k2))
               / (t * (t - one) * t4))
    z3 = _norm(-(y - one) * (E + (y - t) * x * t4 - t * (k2 * k2) - one * (k1 * k2))
               / ((t - one) * t4))
    for name, z in (("z1 = 0", z1), ("z2 = 0", z2), ("z3 = 0", z3)):
        if (z.is_zero() if hasattr(z, "is_zero") else not z):
            raise DegenerationError(name)
    u1 = _norm(y / (t * z1))
    u2 = _norm((y - t) / (t * (t - one) * z2))
    u3 = _norm(-(y - one) / ((t - one) * z3))
    return JMAuxiliaries(x=x, p=p, E=E, k1=k1, k2=k2, z=(z1, z2, z3), u=(u1, u2, u3))


def jm_residues(y, yp, t, theta) -> FuchsianSystem:
    """The residue matrices from a PVI solution jet (y, y') at time t."""
    aux = jm_auxiliaries(y, yp, t, theta)
    mats = []
    for thi, zi, ui in zip(theta[:3], aux.z, aux.u):
        half = Fraction(frac(thi), 2)
        mats.append((
            (_norm(zi + half), _norm(-(ui * zi))),
            (_norm((zi + frac(thi)) / ui), _norm(-(zi + half))),
        ))
    return FuchsianSystem(mats[0], mats[1], mats[2], t, tuple(frac(v) for v in theta),
                          aux=aux)


# ---------------------------------------------------------------------------


def explicit_family(sol_or_id, point) -> FuchsianSystem:
    """System at one parameter point of a catalog solution, exactly.

    Genus 0: ``point`` is a rational / field element; genus 1: (s0, u0) on the
    curve.  Branch points of t and the y-degenerations raise structured
    errors.
    """
    sol = get(sol_or_id) if isinstance(sol_or_id, str) else sol_or_id
    K = sol.coefficient_field
    if sol.genus == 0:
        s0 = K.coerce(point)
        try:
            y0 = sol.y_map.eval(s0)
            t0 = sol.t_map.eval(s0)
            ts = sol.t_map.deriv().eval(s0)
            ys = sol.y_map.deriv().eval(s0)
        except PoleError as exc:
            raise DegenerationError(f"parameter point is a pole: {exc}") from exc
    else:
        s0, u0 = point
        s0, u0 = K.coerce(s0), K.coerce(u0)
        q = sol.branch_polynomial
        if u0 * u0 != q.eval(s0):
            raise DegenerationError("point not on the curve")
        y0 = sol.y_map.eval(s0, u0)
        t0 = sol.t_map.eval(s0, u0)
        ys = _curve_deriv_at(sol.y_map, q, s0, u0)
        ts = _curve_deriv_at(sol.t_map, q, s0, u0)
    if not ts:
        raise DegenerationError("dt/ds = 0 at the point (branch point)")
    if t0 == 0 or t0 == 1:
        raise DegenerationError(f"t = {t0} at the point")
    yp0 = ys / ts
    return jm_residues(y0, yp0, t0, sol.theta)


def _curve_deriv_at(elt, q, s0, u0):
    """d/ds of a + b u at (s0, u0) with u' = q'/(2u); requires u0 != 0."""
    if not u0:
        raise DegenerationError("ramification point of the curve")
    a, b = elt.a, elt.b
    da = _rf_deriv_at(a, s0)
    db = _rf_deriv_at(b, s0)
    b0 = b.eval(s0)
    qp = q.deriv().eval(s0)
    return da + db * u0 + b0 * qp / (u0 * 2)


def _rf_deriv_at(rf, s0):
    n, d = rf.num, rf.den
    dv = d.eval(s0)
    if not dv:
        raise PoleError(s0, 1)
    return (n.deriv().eval(s0) * dv - n.eval(s0) * d.deriv().eval(s0)) / (dv * dv)


def explicit_family_symbolic(sol_or_id) -> FuchsianSystem:
    """The isomonodromic family with entries as rational functions of s
    (genus-zero entries only)."""
    sol = get(sol_or_id) if isinstance(sol_or_id, str) else sol_or_id
    if sol.genus != 0:
        raise DegenerationError("symbolic families are built for genus zero only")
    y = sol.y_map
    t = sol.t_map
    yp = y.deriv() / t.deriv()
    return jm_residues(y, yp, t, sol.theta)


# ---------------------------------------------------------------------------
# tau form


def tau_form_symbolic(sol_or_id) -> RationalFunction:
    """d log tau / ds = tr(A2 (A1/t + A3/(t-1))) * dt/ds as an exact rational
    function of the parameter."""
    sol = get(sol_or_id) if isinstance(sol_or_id, str) else sol_or_id
    sys = explicit_family_symbolic(sol)
    t = sys.t
    one = FunctionField(sol.coefficient_field).one
    B = _mat_add(_scale(sys.A1, one / t), _scale(sys.A3, one / (t - one)))
    trace = _mat_mul_trace(sys.A2, B)
    return (trace * sol.t_map.deriv()).reduce()


def tau_form(sol_or_id, point):
    """Exact value of the tau 1-form coefficient at a parameter point."""
    sol = get(sol_or_id) if isinstance(sol_or_id, str) else sol_or_id
    sys = explicit_family(sol, point)
    K = sol.coefficient_field
    t0 = sys.t
    if sol.genus == 0:
        s0 = K.coerce(point)
        ts = sol.t_map.deriv().eval(s0)
    else:
        s0, u0 = (K.coerce(point[0]), K.coerce(point[1]))
        ts = _curve_deriv_at(sol.t_map, sol.branch_polynomial, s0, u0)
    B = _mat_add(_scale(sys.A1, 1 / t0), _scale(sys.A3, 1 / (t0 - 1)))
    return _mat_mul_trace(sys.A2, B) * ts


def _scale(A, c):
    return tuple(tuple(a * c for a in r) for r in A)


def _mat_mul_trace(A, B):
    return (A[0][0] * B[0][0] + A[0][1] * B[1][0]
            + A[1][0] * B[0][1] + A[1][1] * B[1][1])


# ---------------------------------------------------------------------------
# scalar (second-order) equation


@dataclass
class ScalarEquation:
    a1: object           # rational function of z (coefficients may be functions of s)
    a2: object
    apparent_point: object
    used_fallback_vector: bool = False


def _nred(rf: RationalFunction) -> RationalFunction:
    # coefficient-level reduction only: canonicalising in z needs nested gcds
    # that cost far more than they save
    def redc(c):
        return c.reduce() if isinstance(c, RationalFunction) else c

    return RationalFunction(rf.num.map_coeffs(redc), rf.den.map_coeffs(redc))


def scalar_equation(system: FuchsianSystem) -> ScalarEquation:
    """Second-order equation with exponents {0, theta_i} at the finite poles
    and an apparent singularity at z = y.

    Route: eliminate the second component through the (1,2) entry (cyclic
    vector; the (2,1) entry is the fallback), i.e. with a_ij = n_ij / D,
    D = z(z-t)(z-1):

        u'' + p1 u' + Q u = 0,   p1 = D'/D - n12'/n12,
        Q = [-(n11^2 + n12 n21) n12 - n11' D n12 + n11 n12' D] / (D^2 n12),

    then gauge by prod (z - p_k)^(theta_k/2), shifting exponents from
    +-theta_k/2 to {0, theta_k}:  a1 = p1 - 2g, a2 = Q - p1 g + g^2 - g'
    with g = sum theta_k / (2(z - p_k)).
    """
    base = _entry_ring(system.A1[0][0])
    FZ = FunctionField(base, "z")
    z = FZ.x
    one = FZ.one
    t = FZ.coerce(system.t)
    poles = (FZ.zero, t, one)
    th = system.theta

    def redc(c):
        return c.reduce() if isinstance(c, RationalFunction) else c

    tE = base.coerce(system.t)
    pole_vals = (base.zero, tE, base.one)

    def numer_poly(entries):
        # sum_k e_k * prod_{j != k} (z - p_j), as a z-polynomial
        acc = Poly(base, [], "z")
        for k, e in enumerate(entries):
            term = Poly(base, [base.coerce(e)], "z")
            for j, p in enumerate(pole_vals):
                if j != k:
                    term = term * (Poly.x(base, "z") - Poly(base, [p], "z"))
            acc = acc + term
        return acc.map_coeffs(redc)

    zP = Poly.x(base, "z")
    oneP = Poly(base, [base.one], "z")
    D = zP * (zP - Poly(base, [tE], "z")) * (zP - oneP)
    n11 = numer_poly([M[0][0] for M in system.matrices()])
    n12 = numer_poly([M[0][1] for M in system.matrices()])
    n21 = numer_poly([M[1][0] for M in system.matrices()])
    fallback = False
    if n12.is_zero():
        n12, n21 = n21, n12
        n11 = -n11
        fallback = True
        if n12.is_zero():
            raise DegenerationError("both off-diagonal entries vanish")
    Dp = D.deriv()
    n12p = n12.deriv()
    n11p = n11.deriv()
    p1 = _nred(RationalFunction(Dp * n12 - n12p * D, D * n12))
    Qnum = (-(n11 * n11 + n12 * n21) * n12 - (n11p * D) * n12 + n11 * n12p * D)
    Q = _nred(RationalFunction(Qnum.map_coeffs(redc), (D * D * n12).map_coeffs(redc)))
    g = FZ.zero
    for p, thk in zip(poles, th[:3]):
        g = g + one * Fraction(frac(thk), 2) / (z - p)
    g = _nred(g)
    a1 = _nred(p1 - g * 2)
    a2 = _nred(Q - _nred(p1 * g) + _nred(g * g) - _nred(g.deriv()))
    app = None
    n12r = n12.map_coeffs(redc)
    if n12r.degree == 1:
        app = redc(-(n12r.coeffs[0] / n12r.coeffs[1]))
    return ScalarEquation(a1, a2, app, used_fallback_vector=fallback)


def _entry_ring(v):
    if isinstance(v, RationalFunction):
        return FunctionField(v.num.ring, v.num.var)
    if hasattr(v, "field"):
        return v.field
    return QQ


def frobenius_no_log_check(eq: ScalarEquation, y_point) -> bool:
    """Frobenius test at the apparent point: exponents {0,2} and vanishing
    obstruction at the resonant step (no logarithm)."""
    from .puiseux import LocalSeries

    a1, a2 = eq.a1, eq.a2
    ring = a1.num.ring
    yv = ring.coerce(y_point) if not isinstance(y_point, type(a1)) else y_point
    # local expansion at z = y: shift polynomials
    def local(rf, order=4):
        n = rf.num.shift(yv)
        d = rf.den.shift(yv)
        sn = LocalSeries.from_poly(n, order + d.degree + 2)
        sd = LocalSeries.from_poly(d, order + d.degree + 2)
        return (sn * sd.inverse()).restrict(order)

    A = local(a1)
    B = local(a2)
    alpha_m1 = A.coeffs.get(-1, ring.zero)
    beta_m1 = B.coeffs.get(-1, ring.zero)
    if B.valuation() < -1 or A.valuation() < -1:
        return False
    # indicial rho(rho-1) + alpha_m1 rho = 0 must have roots {0, 2}
    if not (alpha_m1 + ring.one == ring.zero):
        return False
    # series u = 1 + c1 w + c2 w^2: order-1 step gives c1, order-2 step must be
    # consistent (0*c2 = obstruction)
    a0 = A.coeffs.get(0, ring.zero)
    b0 = B.coeffs.get(0, ring.zero)
    c1 = beta_m1  # from c1(1*0 + alpha_m1*1) + beta_m1 = 0 with alpha_m1 = -1
    obstruction = (a0 + beta_m1) * c1 + b0
    zero = obstruction.is_zero() if hasattr(obstruction, "is_zero") else not obstruction
    return zero


# ---------------------------------------------------------------------------
# numerical Schlesinger flow


def schlesinger_flow(system: FuchsianSystem, t_path, rtol=1e-12, atol=1e-12):
    """Integrate the Schlesinger equations along a path in t.

    dA1/dt = [A2,A1]/t, dA3/dt = [A2,A3]/(t-1), dA2/dt = -(dA1/dt + dA3/dt);
    returns the transported numeric FuchsianSystem at the endpoint.
    """
    from scipy.integrate import solve_ivp

    t_path = [complex(v) for v in t_path]
    if len(t_path) < 2 or all(abs(v - t_path[0]) < 1e-15 for v in t_path):
        return _to_numeric(system)
    A = np.array(_to_numeric(system).matrices(), dtype=complex)  # shape (3,2,2)

    def pack(M):
        return np.concatenate([M.real.ravel(), M.imag.ravel()])

    def unpack(v):
        n = v.size // 2
        return (v[:n] + 1j * v[n:]).reshape(3, 2, 2)

    for t0, t1 in zip(t_path, t_path[1:]):
        if t0 == t1:
            continue

        def rhs(s, v, t0=t0, t1=t1):
            M = unpack(v)
            tt = t0 + (t1 - t0) * s
            dA1 = (M[1] @ M[0] - M[0] @ M[1]) / tt
            dA3 = (M[1] @ M[2] - M[2] @ M[1]) / (tt - 1)
            dA2 = -(dA1 + dA3)
            return pack(np.stack([dA1, dA2, dA3]) * (t1 - t0))

        res = solve_ivp(rhs, (0.0, 1.0), pack(A), method="DOP853",
                        rtol=rtol, atol=atol, dense_output=False)
        if not res.success:
            raise RuntimeError(f"Schlesinger step failed near t = {t0}: {res.message}")
        A = unpack(res.y[:, -1])
    mats = [tuple(tuple(A[k][i][j] for j in range(2)) for i in range(2))
            for k in range(3)]
    return FuchsianSystem(mats[0], mats[1], mats[2], t_path[-1], system.theta)


def _to_numeric(system: FuchsianSystem) -> FuchsianSystem:
    def emb(v):
        if isinstance(v, complex):
            return v
        if isinstance(v, (int, float, Fraction)):
            return complex(v)
        if hasattr(v, "embed"):
            return complex(v.embed())
        raise TypeError(f"cannot embed {v!r}")

    mats = [tuple(tuple(emb(M[i][j]) for j in range(2)) for i in range(2))
            for M in system.matrices()]
    tval = system.t if isinstance(system.t, complex) else emb(system.t)
    return FuchsianSystem(mats[0], mats[1], mats[2], tval, system.theta)


def torus_canonicalize(system: FuchsianSystem, reference: FuchsianSystem):
    """Conjugate by diag(a, 1/a) so the (1,2) entry of A1 matches the
    reference; numeric systems only."""
    sysn = _to_numeric(system)
    refn = _to_numeric(reference)
    ratio = refn.A1[0][1] / sysn.A1[0][1]
    mats = []
    for M in sysn.matrices():
        mats.append(((M[0][0], M[0][1] * ratio), (M[1][0] / ratio, M[1][1])))
    return FuchsianSystem(mats[0], mats[1], mats[2], sysn.t, sysn.theta)


def system_distance(A: FuchsianSystem, B: FuchsianSystem) -> float:
    An, Bn = _to_numeric(A), _to_numeric(B)
    d = 0.0
    for MA, MB in zip(An.matrices(), Bn.matrices()):
        for i in range(2):
            for j in range(2):
                d = max(d, abs(MA[i][j] - MB[i][j]))
    return d


# ---------------------------------------------------------------------------
# serialization


def system_to_json(system: FuchsianSystem) -> dict:
    def enc(v):
        if isinstance(v, complex):
            return {"re": v.real, "im": v.imag}
        if isinstance(v, (int, Fraction)):
            return str(v)
        if hasattr(v, "coords"):
            return [str(c) for c in v.coords]
        if isinstance(v, RationalFunction):
            return repr(v.reduce())
        return str(v)

    return {
        "theta": [str(t) for t in system.theta],
        "t": enc(system.t),
        "matrices": [[[enc(M[i][j]) for j in range(2)] for i in range(2)]
                     for M in system.matrices()],
    }

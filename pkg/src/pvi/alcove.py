"""Affine F4 Weyl reduction of theta parameters and the central-node shift.

The fundamental alcove is cut out by the five walls

    W1: t2 >= t3        W2: t3 >= t4        W3: t4 >= 0
    W4: t1 >= t2 + t3 + t4                  W5: t1 + t2 <= 1

(simple roots e2-e3, e3-e4, e4, (e1-e2-e3-e4)/2 and the affine wall along
e1+e2 = 1).  Reduction reflects in the first violated wall until all hold;
for rational input this terminates because each reflection moves the point
into an alcove strictly closer to the fundamental one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .nfield import frac


class AlcoveError(ValueError):
    pass


@dataclass(frozen=True)
class AlcoveReduction:
    original: tuple
    reduced: tuple
    word: tuple   # wall indices 1..5 in the order applied


def _walls(t):
    t1, t2, t3, t4 = t
    return (t2 - t3, t3 - t4, t4, t1 - t2 - t3 - t4, 1 - t1 - t2)


def _reflect(t, wall: int):
    t1, t2, t3, t4 = t
    if wall == 1:
        return (t1, t3, t2, t4)
    if wall == 2:
        return (t1, t2, t4, t3)
    if wall == 3:
        return (t1, t2, t3, -t4)
    if wall == 4:
        s = (t1 - t2 - t3 - t4) / 2
        return (t1 - s, t2 + s, t3 + s, t4 + s)
    if wall == 5:
        return (1 - t2, 1 - t1, t3, t4)
    raise AlcoveError(f"no wall {wall}")


def is_reduced(t) -> bool:
    return all(v >= 0 for v in _walls(t))


def alcove_reduce(theta) -> AlcoveReduction:
    t = tuple(frac(x) for x in theta)
    orig = t
    word = []
    for _ in range(100000):
        vals = _walls(t)
        bad = next((i for i, v in enumerate(vals, start=1) if v < 0), None)
        if bad is None:
            return AlcoveReduction(orig, t, tuple(word))
        t = _reflect(t, bad)
        word.append(bad)
    raise AlcoveError("reduction did not terminate")


def replay(theta, word) -> tuple:
    t = tuple(frac(x) for x in theta)
    for wall in word:
        t = _reflect(t, wall)
    return t


def wall_count(reduced) -> int:
    """Number of alcove facets the (already reduced) point lies on."""
    t = tuple(frac(x) for x in reduced)
    vals = _walls(t)
    if any(v < 0 for v in vals):
        raise AlcoveError("wall_count requires a reduced point")
    return sum(1 for v in vals if v == 0)


def hyperplane_count(theta) -> int:
    """Number of affine F4 reflection hyperplanes <alpha, theta> in Z through
    the point, over all positive roots; invariant under the affine action."""
    t = tuple(frac(x) for x in theta)
    count = 0
    roots = []
    for i in range(4):
        e = [Fraction(0)] * 4
        e[i] = 1
        roots.append(tuple(e))
    for i in range(4):
        for j in range(i + 1, 4):
            for si, sj in ((1, 1), (1, -1)):
                e = [Fraction(0)] * 4
                e[i], e[j] = si, sj
                roots.append(tuple(e))
    for signs in product((1, -1), repeat=4):
        if signs[0] == 1:
            roots.append(tuple(Fraction(s, 2) for s in signs))
    for alpha in roots:
        v = sum(a * x for a, x in zip(alpha, t))
        if v.denominator == 1:
            count += 1
    return count


def parameter_classes(thetas):
    """Distinct alcove representatives with multiplicities."""
    out = {}
    for th in thetas:
        red = alcove_reduce(th).reduced
        out[red] = out.get(red, 0) + 1
    return out


# ---------------------------------------------------------------------------
# Okamoto transformation at the central node


def okamoto_shift(solution):
    """Shift a verified solution by the central-node Okamoto transformation:

        y_new = y + (2 - sum(theta)) / (2 p),
        theta_i_new = theta_i - (sum(theta) - 2) / 2,

    with p the canonical momentum of the isomonodromy parameterisation.  The
    t-map is unchanged.  Fails when p vanishes identically on the curve.
    """
    from .catalog import SolutionCurve
    from .fuchsian import momentum_p

    theta = solution.theta
    total = sum(theta, Fraction(0))
    shift = (total - 2) / 2
    new_theta = tuple(t - shift for t in theta)
    y = solution.y_map
    t = solution.t_map
    yprime = solution.y_prime()
    p = momentum_p(y, yprime, t, theta)
    if p.is_zero() if hasattr(p, "is_zero") else not p:
        raise AlcoveError("momentum p vanishes identically; shift undefined")
    field_one = solution.function_field_one()
    y_new = y + (field_one * (2 - total)) / (p * 2)
    return SolutionCurve(
        id=f"{solution.id}+okamoto",
        theta=new_theta,
        genus=solution.genus,
        coefficient_field=solution.coefficient_field,
        y_map=y_new,
        t_map=t,
        branch_polynomial=solution.branch_polynomial,
        branch_count_hint=solution.branch_count_hint,
    )

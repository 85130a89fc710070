"""Braid and sign-change actions on monodromy triples and their trace data.

A conjugacy class of an irreducible triple (M1,M2,M3), with M4 = (M3M2M1)^-1,
is faithfully encoded by the seven traces

    (m1, m2, m3, m4, x, y, z) = (tr M1..tr M4, tr M1M2, tr M2M3, tr M1M3).

The generators omega_i of the mapping-class action move (M_i, M_{i+1}) to
(M_{i+1}, M_{i+1} M_i M_{i+1}^-1); on traces this becomes polynomial maps
(derived from SL2 trace identities and cross-checked against the matrix
action in the tests).  The pure subgroup relevant for solution branches is
generated by w1 = omega1^2 and w2 = omega2^2.
"""

from __future__ import annotations

from fractions import Fraction
from dataclasses import dataclass, field

from .nfield import frac
from .trig import angle_tuple_field, recognize_angle
from .groups import GroupSpec


class OrbitOverflow(RuntimeError):
    def __init__(self, cap):
        super().__init__(f"orbit exceeded the configured cap {cap}")
        self.cap = cap


# -- trace-level action -------------------------------------------------------

def omega1(T):
    m1, m2, m3, m4, x, y, z = T
    return (m2, m1, m3, m4, x, m1 * m3 + m2 * m4 - x * y - z, y)


def omega2(T):
    m1, m2, m3, m4, x, y, z = T
    return (m1, m3, m2, m4, z, y, m1 * m2 + m3 * m4 - y * z - x)


def omega3(T):
    m1, m2, m3, m4, x, y, z = T
    return (m1, m2, m4, m3, x, m1 * m3 + m2 * m4 - x * y - z, y)


def omega1_inv(T):
    m1, m2, m3, m4, x, y, z = T
    # inverse of omega1: solve forward map with swapped labels
    return (m2, m1, m3, m4, x, z, m2 * m3 + m1 * m4 - x * z - y)


def omega2_inv(T):
    m1, m2, m3, m4, x, y, z = T
    return (m1, m3, m2, m4, m1 * m3 + m2 * m4 - y * x - z, y, x)


def omega3_inv(T):
    m1, m2, m3, m4, x, y, z = T
    return (m1, m2, m4, m3, x, z, m1 * m4 + m2 * m3 - x * z - y)


def sign_change(T, eps):
    """Even sign change eps = (e1,e2,e3,e4) with product +1."""
    e1, e2, e3, e4 = eps
    if e1 * e2 * e3 * e4 != 1:
        raise ValueError("sign changes must negate an even number of matrices")
    m1, m2, m3, m4, x, y, z = T
    return (m1 * e1, m2 * e2, m3 * e3, m4 * e4, x * e1 * e2, y * e2 * e3, z * e1 * e3)


def w1(T):
    return omega1(omega1(T))


def w2(T):
    return omega2(omega2(T))


EVEN_SIGNS = [(e1, e2, e3, e1 * e2 * e3)
              for e1 in (1, -1) for e2 in (1, -1) for e3 in (1, -1)]


# -- matrix-level action on index triples --------------------------------------

def mat_omega(spec: GroupSpec, i: int, triple):
    a, b, c = triple
    mul, inv = spec.mul, spec.inv
    if i == 1:
        return (b, mul[mul[b][a]][inv[b]], c)
    if i == 2:
        return (a, c, mul[mul[c][b]][inv[c]])
    if i == 3:
        m4 = inv[mul[mul[c][b]][a]]
        return (a, b, m4)
    raise ValueError("omega index must be 1, 2 or 3")


def mat_sign(spec: GroupSpec, triple, eps):
    if eps[0] * eps[1] * eps[2] * eps[3] != 1:
        raise ValueError("sign changes must negate an even number of matrices")
    out = []
    for idx, e in zip(triple, eps[:3]):
        out.append(spec.neg[idx] if e == -1 else idx)
    return tuple(out)


def triple_traces(spec: GroupSpec, triple):
    a, b, c = triple
    mul, inv, tr = spec.mul, spec.inv, spec.traces
    m123 = mul[mul[c][b]][a]
    return (tr[a], tr[b], tr[c], tr[m123],
            tr[mul[a][b]], tr[mul[b][c]], tr[mul[a][c]])


# -- TraceData / braid_act ------------------------------------------------------


@dataclass(frozen=True)
class TraceData:
    """Seven-trace encoding of a monodromy triple, with angle forms when they
    exist (m = 2cos(pi * angle), angles in [0,1])."""

    traces: tuple
    theta: tuple | None = None
    sigma: tuple | None = None

    @staticmethod
    def from_angles(theta, sigma) -> "TraceData":
        theta = tuple(frac(t) for t in theta)
        sigma = tuple(frac(s) for s in sigma)
        _, table = angle_tuple_field(list(theta) + list(sigma))
        tr = tuple([table[t] for t in theta] + [table[s] for s in sigma])
        return TraceData(tr, theta, sigma)

    @staticmethod
    def from_traces(traces) -> "TraceData":
        theta = tuple(recognize_angle(t) for t in traces[:4])
        sigma = tuple(recognize_angle(t) for t in traces[4:])
        return TraceData(tuple(traces),
                         theta if all(a is not None for a in theta) else None,
                         sigma if all(a is not None for a in sigma) else None)

    def key(self):
        return self.traces

    def __repr__(self):
        if self.theta and self.sigma:
            return f"TraceData(theta={self.theta}, sigma={self.sigma})"
        return f"TraceData(traces={self.traces})"


_TRACE_OPS = {
    "o1": omega1, "o2": omega2, "o3": omega3,
    "o1'": omega1_inv, "o2'": omega2_inv, "o3'": omega3_inv,
    "w1": w1, "w2": w2,
}


def braid_act(word, obj, spec: GroupSpec | None = None):
    """Apply a word over {o1,o2,o3, inverses, w1,w2, sign vectors}.

    ``word`` is a sequence of tokens: strings from o1 o2 o3 o1' o2' o3' w1 w2
    or 4-tuples of signs.  ``obj`` is a TraceData (trace-level action) or an
    index triple (matrix level; requires ``spec``).
    """
    if isinstance(obj, TraceData):
        T = obj.traces
        for tok in word:
            if isinstance(tok, tuple):
                T = sign_change(T, tok)
            else:
                T = _TRACE_OPS[tok](T)
        return TraceData.from_traces(T)
    if spec is None:
        raise ValueError("matrix-level action needs the group spec")
    t = tuple(obj)
    for tok in word:
        if isinstance(tok, tuple):
            t = mat_sign(spec, t, tok)
        else:
            name = tok
            if name in ("w1", "w2"):
                i = int(name[1])
                t = mat_omega(spec, i, mat_omega(spec, i, t))
            elif name.endswith("'"):
                t = _mat_omega_inv(spec, int(name[1]), t)
            else:
                t = mat_omega(spec, int(name[1]), t)
    return t


def _mat_omega_inv(spec: GroupSpec, i: int, triple):
    # omega_i(p, q) = (q, q p q^-1) has inverse (P, Q) -> (P^-1 Q P, P)
    a, b, c = triple
    mul, inv = spec.mul, spec.inv
    if i == 1:
        return (mul[mul[inv[a]][b]][a], a, c)
    if i == 2:
        return (a, mul[mul[inv[b]][c]][b], b)
    if i == 3:
        # the pair here is (M3, M4) with M4 = (c b a)^-1 derived
        new_m4 = inv[mul[mul[c][b]][a]]
        return (a, b, mul[mul[inv[c]][new_m4]][c])
    raise ValueError("omega index must be 1, 2 or 3")


# -- pure braid orbits -----------------------------------------------------------


@dataclass
class OrbitRecord:
    elements: list
    w1_perm: list
    w2_perm: list

    @property
    def size(self):
        return len(self.elements)


def pure_orbit(trace: TraceData, cap: int = 4096) -> OrbitRecord:
    """Orbit of the 7-tuple under the pure mapping-class generators w1, w2."""
    start = trace.traces
    index = {start: 0}
    elements = [start]
    todo = [0]
    images = {}
    while todo:
        i = todo.pop()
        T = elements[i]
        for name, op in (("w1", w1), ("w2", w2)):
            img = op(T)
            j = index.get(img)
            if j is None:
                if len(elements) >= cap:
                    raise OrbitOverflow(cap)
                j = len(elements)
                index[img] = j
                elements.append(img)
                todo.append(j)
            images[(name, i)] = j
    n = len(elements)
    w1_perm = [images[("w1", i)] for i in range(n)]
    w2_perm = [images[("w2", i)] for i in range(n)]
    return OrbitRecord([TraceData.from_traces(T) for T in elements], w1_perm, w2_perm)

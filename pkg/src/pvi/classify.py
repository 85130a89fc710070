"""Classification of generating triples into solution classes.

Pipeline: generating triples -> SL2-conjugacy classes S (normaliser orbits,
canonicalised through the seven-trace tuple) -> geometric equivalence classes
(full braid group + even sign changes) -> per-class branch orbits and cover
invariants (degree, partitions, genus, permutation group of the Belyi cover).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .braid import (TraceData, pure_orbit, triple_traces, omega1, omega2, omega3,
                    sign_change, EVEN_SIGNS, OrbitRecord)
from .groups import GroupSpec, enumerate_group, generating_triples
from .trig import recognize_angle


@dataclass
class ClassInfo:
    trace: TraceData
    size: int                 # number of elements of S in the geometric class
    orbit: OrbitRecord        # pure braid orbit = solution branches
    degree: int
    partitions: tuple         # sorted descending partitions, canonical multiset
    partitions_ordered: tuple  # (over 0, over 1, over infinity)
    genus: int
    group_order: int
    group_label: str
    type_label: str
    members: frozenset        # (theta-tuple, sigma-tuple) angle pairs in the class


@dataclass
class CoverInvariants:
    degree: int
    partitions: tuple
    genus: int
    cover_group_order: int


def classify_triples(spec: GroupSpec):
    """Conjugacy classes of generating triples, keyed by their trace tuples.

    Two generating triples are SL2-conjugate iff conjugate under the
    normaliser; the induced conjugation permutations are in
    ``spec.normalizer_image``.  The classical fact that the seven traces
    determine an irreducible triple up to conjugacy is verified here: the
    number of distinct trace tuples must equal the number of orbits.
    """
    triples = generating_triples(spec)
    perms = spec.normalizer_image
    seen = set()
    reps = []
    for t in triples:
        if t in seen:
            continue
        orbit = {tuple(p[i] for i in t) for p in perms}
        seen.update(orbit)
        reps.append((min(orbit), len(orbit)))
    # the normaliser should act freely on generating triples
    sizes = {n for _, n in reps}
    if sizes != {len(perms)}:
        raise RuntimeError(f"normaliser orbits of unexpected sizes {sizes}")
    trace_map = {}
    for rep, _n in reps:
        T = triple_traces(spec, rep)
        if T in trace_map:
            raise RuntimeError("distinct classes share a trace tuple; "
                               "trace-faithfulness assumption violated")
        trace_map[T] = rep
    return trace_map


def geometric_classes(spec: GroupSpec):
    """Partition of S under <omega1,omega2,omega3> and even sign changes.

    Works at trace level (classes are their trace tuples); every image is
    asserted to remain inside S.
    """
    trace_map = classify_triples(spec)
    universe = set(trace_map)
    classes = []
    unvisited = set(universe)
    while unvisited:
        start = unvisited.pop()
        block = {start}
        todo = [start]
        while todo:
            T = todo.pop()
            images = [omega1(T), omega2(T), omega3(T)]
            images += [sign_change(T, e) for e in EVEN_SIGNS if e != (1, 1, 1, 1)]
            for img in images:
                if img not in universe:
                    raise RuntimeError("orbit left the classified set S")
                if img not in block:
                    block.add(img)
                    unvisited.discard(img)
                    todo.append(img)
        classes.append(block)
    return classes, trace_map


def cover_invariants(orbit: OrbitRecord) -> CoverInvariants:
    """Degree, ramification partitions, genus and cover group of the branch
    orbit viewed as a Belyi cover (permutations w1, w2 and the inverse of
    their composite, multiplying to the identity)."""
    n = orbit.size
    p0 = orbit.w1_perm
    p1 = orbit.w2_perm
    pinf = _inverse_perm([p1[p0[i]] for i in range(n)])
    parts = tuple(_cycle_type(p) for p in (p0, p1, pinf))
    total_defect = sum(sum(c - 1 for c in part) for part in parts)
    two_minus_2g = 2 * n - total_defect
    if two_minus_2g % 2:
        raise RuntimeError("Riemann-Hurwitz parity failure")
    genus = (2 - two_minus_2g) // 2
    if genus < 0:
        raise RuntimeError("negative genus")
    order = perm_group_order([p0, p1])
    return CoverInvariants(n, parts, genus, order)


def _cycle_type(perm) -> tuple:
    n = len(perm)
    seen = [False] * n
    out = []
    for i in range(n):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        out.append(length)
    return tuple(sorted(out, reverse=True))


def _inverse_perm(p):
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return out


def perm_group_order(perms) -> int:
    from sympy.combinatorics import Permutation, PermutationGroup

    n = len(perms[0]) if perms else 1
    gens = [Permutation(p) for p in perms]
    if all(g.is_Identity for g in gens):
        return 1
    return int(PermutationGroup(gens).order())


def group_label(degree: int, order: int) -> str:
    # small covers get named groups, larger ones their size
    return {1: "1", 2: "S2", 6: "S3", 12: "A4"}.get(order, str(order))


def type_label(spec_kind: str, block, trace_map) -> str:
    """Rotation-type label: a / b / g per projective half, third and quarter
    turn among the four matrices; the tetrahedral all-thirds pair is split by
    the parity of the theta types, written as a trailing sign."""
    labels = set()
    for T in block:
        thetas = [recognize_angle(t) for t in T[:4]]
        if any(v is None for v in thetas):
            raise RuntimeError("trace without angle form in a finite group")
        counts = {"a": 0, "b": 0, "g": 0}
        third_small = 0
        for v in thetas:
            if v == Fraction(1, 2):
                counts["a"] += 1
            elif v in (Fraction(1, 3), Fraction(2, 3)):
                counts["b"] += 1
                if v == Fraction(1, 3):
                    third_small += 1
            elif v in (Fraction(1, 4), Fraction(3, 4)):
                counts["g"] += 1
            elif v not in (Fraction(0), Fraction(1)):
                raise RuntimeError(f"unexpected rotation angle {v}")
        lab = "".join(f"{ltr}^{c}" if c > 1 else ltr
                      for ltr, c in counts.items() if c)
        if counts["b"] == 4 and spec_kind == "binary_tetrahedral":
            lab += "-" if third_small % 2 else "+"
        labels.add(lab)
    if len(labels) != 1:
        raise RuntimeError(f"type label not constant on the class: {labels}")
    return labels.pop()


@lru_cache(maxsize=None)
def classified_rows(kind: str) -> list[ClassInfo]:
    """Full classification for one group, one ClassInfo per geometric class."""
    spec = enumerate_group(kind)
    classes, trace_map = geometric_classes(spec)
    rows = []
    for block in classes:
        rep = min(block, key=_trace_sort_key)
        td = TraceData.from_traces(rep)
        orbit = pure_orbit(td)
        inv = cover_invariants(orbit)
        members = frozenset(
            (tuple(recognize_angle(v) for v in T[:4]),
             tuple(recognize_angle(v) for v in T[4:]))
            for T in block)
        rows.append(ClassInfo(
            trace=td,
            size=len(block),
            orbit=orbit,
            degree=inv.degree,
            partitions=tuple(sorted(inv.partitions, reverse=True)),
            partitions_ordered=inv.partitions,
            genus=inv.genus,
            group_order=inv.cover_group_order,
            group_label=group_label(inv.degree, inv.cover_group_order),
            type_label=type_label(kind, block, trace_map),
            members=members,
        ))
    rows.sort(key=lambda r: (r.degree, _alcove_sort_key(r)))
    return rows


def _trace_sort_key(T):
    return tuple((complex(t.embed()).real, complex(t.embed()).imag) for t in T)


def _alcove_sort_key(row: ClassInfo):
    from .alcove import alcove_reduce

    td = row.trace
    thetas = [recognize_angle(t) for t in td.traces[:4]]
    red = alcove_reduce(tuple(thetas)).reduced
    return tuple(red)

"""The binary tetrahedral and octahedral subgroups of SL2, exactly.

Elements are unit quaternions a+bi+cj+dk realised as 2x2 matrices
[[a+bi, c+di], [-c+di, a-bi]] over Q(zeta_8) (which contains both i and
sqrt2).  Groups are closed from standard generators; the classification code
consumes the index-based multiplication table, the trace table and the
normaliser's conjugation permutations.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .nfield import nf_create, FieldElement

HALF = Fraction(1, 2)

_Z8 = None


def z8_field():
    global _Z8
    if _Z8 is None:
        _Z8 = nf_create([1, 0, 0, 0, 1], complex(2 ** -0.5, 2 ** -0.5), name="z8")
    return _Z8


class Mat2:
    """Unimodular 2x2 matrix over a number field; hashable, immutable."""

    __slots__ = ("a", "b", "c", "d", "_hash")

    def __init__(self, a, b, c, d):
        self.a, self.b, self.c, self.d = a, b, c, d
        self._hash = None

    def __mul__(self, o: "Mat2") -> "Mat2":
        return Mat2(self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
                    self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d)

    def inv(self) -> "Mat2":
        # adjugate; valid for det == 1
        return Mat2(self.d, -self.b, -self.c, self.a)

    def det(self):
        return self.a * self.d - self.b * self.c

    def trace(self):
        return self.a + self.d

    def neg(self) -> "Mat2":
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def __eq__(self, o):
        return (self.a, self.b, self.c, self.d) == (o.a, o.b, o.c, o.d)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.a, self.b, self.c, self.d))
        return self._hash

    def __repr__(self):
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


def quaternion_matrix(a, b, c, d) -> Mat2:
    """Matrix of the quaternion a + bi + cj + dk; coefficients may involve
    1/sqrt2 passed as exact field elements."""
    K = z8_field()
    a, b, c, d = (K.coerce(x) if not isinstance(x, FieldElement) else x
                  for x in (a, b, c, d))
    i = K.gen ** 2
    return Mat2(a + b * i, c + d * i, -c + d * i, a - b * i)


class GroupSpec:
    """A closed matrix group with index tables for fast orbit work."""

    def __init__(self, kind: str, elements: list[Mat2]):
        self.kind = kind
        self.elements = elements
        self.index = {m: k for k, m in enumerate(elements)}
        n = len(elements)
        self.mul = [[self.index[elements[i] * elements[j]] for j in range(n)]
                    for i in range(n)]
        self.inv = [self.index[m.inv()] for m in elements]
        self.neg = [self.index[m.neg()] for m in elements]
        self.identity = self.index[quaternion_matrix(1, 0, 0, 0)]
        self.traces = [m.trace() for m in elements]
        self.normalizer_image: list[list[int]] = []

    def __len__(self):
        return len(self.elements)

    def closure_of(self, seed: set[int]) -> frozenset:
        todo = list(seed)
        seen = set(seed)
        gens = list(seed)
        while todo:
            g = todo.pop()
            for h in gens:
                for k in (self.mul[g][h], self.mul[h][g]):
                    if k not in seen:
                        seen.add(k)
                        todo.append(k)
            # products with already-seen elements close the subgroup
            for h in list(seen):
                k = self.mul[g][h]
                if k not in seen:
                    seen.add(k)
                    todo.append(k)
        return frozenset(seen)


def _close_matrices(gens: list[Mat2]) -> list[Mat2]:
    seen = {g: None for g in gens}
    todo = list(gens)
    while todo:
        m = todo.pop()
        for g in gens:
            for prod in (m * g, g * m):
                if prod not in seen:
                    seen[prod] = None
                    todo.append(prod)
    # include inverses via full closure (finite group: products suffice once
    # closed, but be safe)
    elems = list(seen)
    changed = True
    while changed:
        changed = False
        known = set(elems)
        for x in list(known):
            for y in list(known):
                p = x * y
                if p not in known:
                    elems.append(p)
                    known.add(p)
                    changed = True
    return elems


@lru_cache(maxsize=None)
def enumerate_group(kind: str) -> GroupSpec:
    """Binary tetrahedral (24 elements) or binary octahedral (48)."""
    K = z8_field()
    inv_sqrt2 = K.gen - K.gen ** 3  # sqrt2
    h = K.one / inv_sqrt2
    gen_i = quaternion_matrix(0, 1, 0, 0)
    gen_w = quaternion_matrix(HALF, HALF, HALF, HALF)   # (1+i+j+k)/2
    if kind == "binary_tetrahedral":
        gens = [gen_i, gen_w]
    elif kind == "binary_octahedral":
        gen_s = quaternion_matrix(h, h, 0, 0)           # (1+i)/sqrt2
        gens = [gen_i, gen_w, gen_s]
    else:
        raise ValueError(f"unknown group kind {kind!r}")
    elems = _close_matrices(gens)
    # canonical order: stable sort by embedded entries for reproducibility
    elems.sort(key=lambda m: tuple((round(z.real, 9), round(z.imag, 9)) for z in
                                   (m.a.embed(), m.b.embed(), m.c.embed(), m.d.embed())))
    spec = GroupSpec(kind, elems)
    expected = 24 if kind == "binary_tetrahedral" else 48
    if len(spec) != expected:
        raise RuntimeError(f"{kind} closed to {len(spec)} elements, expected {expected}")
    spec.normalizer_image = _normalizer_permutations(spec)
    return spec


def _normalizer_permutations(spec: GroupSpec) -> list[list[int]]:
    """Conjugation permutations of the group induced by its normaliser in SL2.

    Candidates are the binary octahedral elements (for both groups the
    projective normaliser is the octahedral rotation group); each candidate is
    verified to map the group onto itself, and +-pairs induce one permutation.
    """
    big = enumerate_group("binary_octahedral") if spec.kind == "binary_tetrahedral" else spec
    elems = spec.elements
    elt_set = set(elems)
    perms = []
    seen_perms = set()
    for n in big.elements:
        ninv = n.inv()
        images = []
        good = True
        for m in elems:
            im = n * m * ninv
            if im not in elt_set:
                good = False
                break
            images.append(spec.index[im])
        if not good:
            continue
        key = tuple(images)
        if key not in seen_perms:
            seen_perms.add(key)
            perms.append(images)
    return perms


def generating_triples(spec: GroupSpec):
    """Count and iterate over generating triples (as index tuples).

    Subgroup closures are cached per generating pair so the full scan is a
    table lookup for almost every triple.
    """
    n = len(spec)
    full = frozenset(range(n))
    pair_sub: dict[tuple[int, int], frozenset] = {}
    ext_cache: dict[tuple[frozenset, int], bool] = {}
    triples = []
    for i in range(n):
        for j in range(n):
            H = spec.closure_of({i, j})
            pair_sub[(i, j)] = H
    for i in range(n):
        for j in range(n):
            H = pair_sub[(i, j)]
            if H == full:
                triples.extend((i, j, k) for k in range(n))
                continue
            for k in range(n):
                key = (H, k)
                res = ext_cache.get(key)
                if res is None:
                    res = spec.closure_of(set(H) | {k}) == full
                    ext_cache[key] = res
                if res:
                    triples.append((i, j, k))
    return triples

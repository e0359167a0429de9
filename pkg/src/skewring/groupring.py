"""Group ring RG, the oriented involution, and antisymmetric generators.

Elements are dense coefficient vectors indexed by group elements. The
commutativity decision checks every pair of generators of the module of
antisymmetric elements; bilinearity makes that sufficient.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .coeffring import INT64_MAX, CoeffRing, r2_generators
from .groupcore import FiniteGroup
from .orient import Orientation


class GroupRingError(ValueError):
    pass


class GroupRingElement:
    __slots__ = ("group", "ring", "coeffs")

    def __init__(self, group: FiniteGroup, ring: CoeffRing, coeffs):
        c = np.asarray(coeffs, dtype=np.int64)
        if c.shape != (group.order,):
            raise GroupRingError(f"expected {group.order} coefficients, got {c.shape}")
        if ring.modulus:
            c = c % ring.modulus
        c.setflags(write=False)
        self.group = group
        self.ring = ring
        self.coeffs = c

    # constructors
    @classmethod
    def zero(cls, group, ring):
        return cls(group, ring, np.zeros(group.order, dtype=np.int64))

    @classmethod
    def basis(cls, group, ring, x: int, coeff: int = 1):
        c = np.zeros(group.order, dtype=np.int64)
        c[x] = coeff
        return cls(group, ring, c)

    @classmethod
    def from_terms(cls, group, ring, terms):
        """``terms`` is an iterable of (element index, coefficient)."""
        c = np.zeros(group.order, dtype=np.int64)
        for x, r in terms:
            c[x] += r
        return cls(group, ring, c)

    # arithmetic
    def _check(self, other):
        if not isinstance(other, GroupRingElement):
            raise TypeError(f"cannot combine group ring element with {type(other).__name__}")
        if other.group is not self.group or other.ring != self.ring:
            raise GroupRingError("operands live in different group rings")

    def _bounded(self, c):
        if self.ring.modulus == 0 and np.abs(c).max(initial=0) >= INT64_MAX // 2:
            raise OverflowError("integer coefficient overflow")
        return GroupRingElement(self.group, self.ring, c)

    def __add__(self, other):
        self._check(other)
        if self.ring.modulus == 0:
            _guard_add(self.coeffs, other.coeffs)
        return self._bounded(self.coeffs + other.coeffs)

    def __neg__(self):
        return GroupRingElement(self.group, self.ring, -self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def scalar_mul(self, r: int):
        if self.ring.modulus == 0:
            bound = abs(int(r)) * int(np.abs(self.coeffs).max(initial=0))
            if bound >= INT64_MAX // 2:
                raise OverflowError("integer coefficient overflow")
        else:
            r %= self.ring.modulus
        return GroupRingElement(self.group, self.ring, self.coeffs * int(r))

    def __rmul__(self, r):
        if isinstance(r, (int, np.integer)):
            return self.scalar_mul(int(r))
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return self.scalar_mul(int(other))
        self._check(other)
        a, b = self.coeffs, other.coeffs
        sa, sb = np.flatnonzero(a), np.flatnonzero(b)
        out = np.zeros(self.group.order, dtype=np.int64)
        if len(sa) == 0 or len(sb) == 0:
            return GroupRingElement(self.group, self.ring, out)
        m = self.ring.modulus
        if m == 0:
            bound = (int(np.abs(a[sa]).max()) * int(np.abs(b[sb]).max())
                     * min(len(sa), len(sb)))
            if bound >= INT64_MAX // 2:
                raise OverflowError("integer coefficient overflow in product")
        idx = self.group.table[np.ix_(sa, sb)].ravel()
        vals = np.outer(a[sa], b[sb]).ravel()
        if m:
            vals %= m
        np.add.at(out, idx, vals)
        return GroupRingElement(self.group, self.ring, out)

    def __eq__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return (other.group is self.group and other.ring == self.ring
                and np.array_equal(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((id(self.group), self.ring, self.coeffs.tobytes()))

    def is_zero(self) -> bool:
        return not self.coeffs.any()

    def support(self) -> list[int]:
        return [int(x) for x in np.flatnonzero(self.coeffs)]

    def terms(self) -> list[tuple[int, int]]:
        """(element, coefficient) pairs; Z/m coefficients shown as symmetric residues."""
        m = self.ring.modulus
        out = []
        for x in self.support():
            c = int(self.coeffs[x])
            if m and c > m // 2:
                c -= m
            out.append((x, c))
        return out

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for x, c in self.terms():
            name = self.group.name(x)
            mag = abs(c)
            body = name if mag == 1 else (f"{mag}" if x == 0 else f"{mag}*{name}")
            if x == 0 and mag == 1:
                body = "1"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"GroupRingElement({self})"


def _guard_add(a, b):
    if np.abs(a).max(initial=0) >= INT64_MAX // 2 or np.abs(b).max(initial=0) >= INT64_MAX // 2:
        raise OverflowError("integer coefficient overflow in sum")


def commutator(x: GroupRingElement, y: GroupRingElement) -> GroupRingElement:
    return x * y - y * x


def phi_sigma(o: Orientation, x: GroupRingElement) -> GroupRingElement:
    """sum r_g g  ->  sum r_g sigma(g) g^-1"""
    if x.group is not o.group:
        raise GroupRingError("element and orientation live over different groups")
    signs = np.asarray(o.signs, dtype=np.int64)
    out = np.zeros(x.group.order, dtype=np.int64)
    out[np.asarray(x.group.inv)] = signs * x.coeffs
    return GroupRingElement(x.group, x.ring, out)


class Family(enum.Enum):
    INVOLUTION_OUTSIDE_N = "involution outside N"
    DIFFERENCE_IN_N = "g - g^-1, g in N"
    SUM_OUTSIDE_N = "g + g^-1, g outside N"
    TORSION_IN_N = "r*g, g in N, g^2 = 1, 2r = 0"


@dataclass
class SkewGeneratorSet:
    orientation: Orientation
    ring: CoeffRing
    generators: list[GroupRingElement] = field(default_factory=list)
    provenance: list[Family] = field(default_factory=list)

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def by_family(self, fam: Family) -> list[GroupRingElement]:
        return [x for x, f in zip(self.generators, self.provenance) if f is fam]


def antisym_generators(o: Orientation, r: CoeffRing, dedup: bool = True) -> SkewGeneratorSet:
    """Module generators of the antisymmetric elements.

    With ``dedup`` one representative (the lower index) is kept per inverse
    pair and zero elements are dropped; without it every group element
    contributes its raw term, duplicates and negatives included.
    """
    if r.modulus == 2:
        raise GroupRingError("characteristic 2 is not supported")
    g = o.group
    inv = g.inv
    sq = [g.mul(x, x) for x in range(g.order)]
    ker = o.kernel.member_set
    out = SkewGeneratorSet(o, r)

    def emit(fam, terms):
        el = GroupRingElement.from_terms(g, r, terms)
        if dedup and el.is_zero():
            return
        out.generators.append(el)
        out.provenance.append(fam)

    for x in range(g.order):
        if x not in ker and sq[x] == 0:
            emit(Family.INVOLUTION_OUTSIDE_N, [(x, 1)])
    for x in range(g.order):
        if x in ker and (not dedup or x < inv[x]):
            emit(Family.DIFFERENCE_IN_N, [(x, 1), (inv[x], -1)])
    for x in range(g.order):
        if x not in ker and sq[x] != 0 and (not dedup or x < inv[x]):
            emit(Family.SUM_OUTSIDE_N, [(x, 1), (inv[x], 1)])
    for t in r2_generators(r):
        for x in range(g.order):
            if x in ker and sq[x] == 0:
                emit(Family.TORSION_IN_N, [(x, t)])
    return out


@dataclass
class SkewVerdict:
    commutative: bool
    generators: SkewGeneratorSet
    witness: tuple[int, int] | None = None
    failing_pairs: int = 0

    @property
    def witness_pair(self) -> tuple[GroupRingElement, GroupRingElement] | None:
        if self.witness is None:
            return None
        i, j = self.witness
        return self.generators.generators[i], self.generators.generators[j]

    @property
    def witness_commutator(self) -> GroupRingElement | None:
        pair = self.witness_pair
        return None if pair is None else commutator(*pair)

    def summary(self) -> str:
        if self.commutative:
            return ""
        s, t = self.witness_pair
        return f"[{s}, {t}] = {self.witness_commutator}"


def _pack(gens: SkewGeneratorSet):
    k = max((len(x.support()) for x in gens), default=1)
    m = len(gens)
    idx = np.zeros((m, k), dtype=np.int64)
    coef = np.zeros((m, k), dtype=np.int64)
    for i, x in enumerate(gens):
        for j, (e, c) in enumerate((e, int(x.coeffs[e])) for e in x.support()):
            idx[i, j] = e
            coef[i, j] = c
    return idx, coef


def noncommuting_pairs(gens: SkewGeneratorSet) -> np.ndarray:
    """Indices (i, j), i < j, of generator pairs with nonzero commutator.

    All pairs are handled at once: every product term of s_i s_j and of
    -s_j s_i is keyed by (pair, group element) and summed.
    """
    g = gens.orientation.group
    ring = gens.ring
    m = len(gens)
    if m < 2:
        return np.zeros((0, 2), dtype=np.int64)
    idx, coef = _pack(gens)
    ii, jj = np.triu_indices(m, 1)
    table = g.table.astype(np.int64)
    ia, ca, ib, cb = idx[ii], coef[ii], idx[jj], coef[jj]
    fwd = table[ia[:, :, None], ib[:, None, :]]
    rev = table[ib[:, None, :], ia[:, :, None]]
    c = ca[:, :, None] * cb[:, None, :]
    npairs = len(ii)
    keys = np.concatenate([fwd.reshape(npairs, -1), rev.reshape(npairs, -1)], axis=1)
    vals = np.concatenate([c.reshape(npairs, -1), -c.reshape(npairs, -1)], axis=1)
    gk = (np.arange(npairs)[:, None] * g.order + keys).ravel()
    v = vals.ravel()
    order = np.argsort(gk, kind="stable")
    gk, v = gk[order], v[order]
    starts = np.concatenate([[0], np.flatnonzero(np.diff(gk)) + 1])
    sums = np.add.reduceat(v, starts)
    if ring.modulus:
        sums %= ring.modulus
    bad = np.unique(gk[starts][sums != 0] // g.order)
    return np.stack([ii[bad], jj[bad]], axis=1)


def is_skew_commutative(o: Orientation, r: CoeffRing, dedup: bool = True,
                        method: str = "vector") -> SkewVerdict:
    """Decide whether the antisymmetric elements of RG commute.

    ``method="pairwise"`` multiplies every generator pair explicitly; it is
    the slow reference for the vectorized default.
    """
    gens = antisym_generators(o, r, dedup=dedup)
    if method == "vector":
        bad = noncommuting_pairs(gens)
        if len(bad) == 0:
            return SkewVerdict(True, gens)
        return SkewVerdict(False, gens, (int(bad[0, 0]), int(bad[0, 1])), len(bad))
    if method != "pairwise":
        raise ValueError(f"unknown method {method!r}")
    first = None
    count = 0
    for i, s in enumerate(gens.generators):
        for j in range(i + 1, len(gens)):
            if not commutator(s, gens.generators[j]).is_zero():
                count += 1
                if first is None:
                    first = (i, j)
    return SkewVerdict(first is None, gens, first, count)

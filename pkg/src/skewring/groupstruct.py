"""Structural predicates and (oriented) isomorphism search."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .groupcore import (
    FiniteGroup,
    GroupError,
    Subgroup,
    derived_and_squares,
    lcm_all,
    subgroup_as_group,
    subgroup_closure,
)
from .orient import enumerate_kernels


def exponent(g: FiniteGroup) -> int:
    return lcm_all(g.elem_order)


def _members_and_group(s):
    if isinstance(s, Subgroup):
        return s.members, s.group
    return tuple(range(s.order)), s


def is_elementary_abelian_2(s) -> bool:
    members, g = _members_and_group(s)
    if any(g.elem_order[x] > 2 for x in members):
        return False
    # exponent 2 forces commutativity; check anyway
    r = g.rows
    return all(r[x][y] == r[y][x] for x in members for y in members)


def is_abelian(s) -> bool:
    if isinstance(s, Subgroup):
        return s.is_abelian()
    return s.is_abelian


def is_2group(s) -> bool:
    members, _ = _members_and_group(s)
    n = len(members)
    return n & (n - 1) == 0


def is_hamiltonian_2group(s) -> bool:
    """Nonabelian 2-group all of whose cyclic subgroups are normal."""
    members, g = _members_and_group(s)
    if not is_2group(s) or is_abelian(s):
        return False
    for x in members:
        powers = set()
        y = 0
        while True:
            powers.add(y)
            y = g.rows[y][x]
            if y == 0:
                break
        if any(g.conj(x, h) not in powers for h in members):
            return False
    return True


def is_quaternion(s) -> bool:
    """Nonabelian of order 8 with a unique involution."""
    members, g = _members_and_group(s)
    return (len(members) == 8 and not is_abelian(s)
            and sum(1 for x in members if g.elem_order[x] == 2) == 1)


@dataclass(frozen=True)
class FactorDecomposition:
    group: FiniteGroup
    core: FiniteGroup
    core_embedding: tuple[int, ...]
    involutions: tuple[int, ...]

    @property
    def stripped_rank(self) -> int:
        return len(self.involutions)


def _strippable_involution(g: FiniteGroup) -> int | None:
    frattini = derived_and_squares(g).member_set
    for z in sorted(g.central):
        if g.elem_order[z] == 2 and z not in frattini:
            return z
    return None


def strip_c2_factors(g: FiniteGroup) -> FactorDecomposition:
    """Write G = core x C2^r with r maximal.

    Repeatedly takes the lowest central involution outside the Frattini
    subgroup and the first index-2 subgroup avoiding it as complement.
    """
    if not g.is_2group:
        raise GroupError(f"{g.label} is not a 2-group")
    cur = g
    embed = list(range(g.order))
    involutions = []
    while True:
        e = _strippable_involution(cur)
        if e is None:
            break
        m = next(k for k in enumerate_kernels(cur) if e not in k)
        sub, emb = subgroup_as_group(m, label=f"core of {g.label}")
        involutions.append(embed[e])
        embed = [embed[i] for i in emb]
        cur = sub
    return FactorDecomposition(g, cur, tuple(embed), tuple(involutions))


# ---------------------------------------------------------------------------
# isomorphism search

def element_signatures(g: FiniteGroup, kernel: Subgroup | None = None) -> list[tuple]:
    """Per-element isomorphism invariants used to prune the search."""
    frattini = derived_and_squares(g).member_set
    roots = Counter(g.rows[x][x] for x in range(g.order))
    sizes = g.centralizer_sizes
    central = g.central
    ker = kernel.member_set if kernel is not None else None
    return [(g.elem_order[x], x in central, x in frattini, sizes[x], roots[x],
             None if ker is None else x in ker)
            for x in range(g.order)]


def generating_sequence(g: FiniteGroup) -> list[int]:
    """Greedy: an element of maximal order outside the current span, lowest index first."""
    by_order = sorted(range(1, g.order), key=lambda x: (-g.elem_order[x], x))
    seq: list[int] = []
    span = {0}
    while len(span) < g.order:
        x = next(y for y in by_order if y not in span)
        seq.append(x)
        span = set(subgroup_closure(g, seq).members)
    return seq


def _extend(g, h, seq, images, sig_g, sig_h):
    """Map determined by seq -> images on <seq>, or None if inconsistent."""
    mapping = {0: 0}
    used = {0}
    queue = [0]
    rg, rh = g.rows, h.rows
    pairs = list(zip(seq, images))
    for x in queue:
        fx = mapping[x]
        for s, t in pairs:
            z = rg[x][s]
            w = rh[fx][t]
            known = mapping.get(z)
            if known is None:
                if w in used or sig_g[z] != sig_h[w]:
                    return None
                mapping[z] = w
                used.add(w)
                queue.append(z)
            elif known != w:
                return None
    return mapping


def find_isomorphism(g: FiniteGroup, h: FiniteGroup, oriented=None):
    """Isomorphism g -> h as a list ``phi[x]``, or None.

    With ``oriented=(n, m)`` the map must carry the subgroup ``n`` of g onto
    the subgroup ``m`` of h.
    """
    if g.order != h.order:
        return None
    kg = kh = None
    if oriented is not None:
        kg, kh = oriented
        if len(kg) != len(kh):
            return None
    sig_g = element_signatures(g, kg)
    sig_h = element_signatures(h, kh)
    if Counter(sig_g) != Counter(sig_h):
        return None
    if g.order == 1:
        return [0]
    seq = generating_sequence(g)
    candidates = {}
    for y in range(h.order):
        candidates.setdefault(sig_h[y], []).append(y)

    def search(images):
        d = len(images)
        if d == len(seq):
            mapping = _extend(g, h, seq, images, sig_g, sig_h)
            return mapping
        for y in candidates.get(sig_g[seq[d]], ()):
            mapping = _extend(g, h, seq[:d + 1], images + [y], sig_g, sig_h)
            if mapping is None:
                continue
            found = search(images + [y])
            if found is not None:
                return found
        return None

    mapping = search([])
    if mapping is None or len(mapping) != g.order:
        return None
    return [mapping[x] for x in range(g.order)]


def is_homomorphism(g: FiniteGroup, h: FiniteGroup, phi) -> bool:
    rg, rh = g.rows, h.rows
    return all(phi[rg[x][y]] == rh[phi[x]][phi[y]]
               for x in range(g.order) for y in range(g.order))


def are_isomorphic(g: FiniteGroup, h: FiniteGroup, oriented=None) -> bool:
    return find_isomorphism(g, h, oriented) is not None

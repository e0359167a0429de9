"""Orientations G -> {+1, -1}, represented by their index-2 kernels."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .groupcore import FiniteGroup, GroupError, Subgroup, derived_and_squares, subgroup_closure


class OrientationError(GroupError):
    pass


@dataclass(frozen=True)
class Orientation:
    group: FiniteGroup
    kernel: Subgroup

    def __post_init__(self):
        if self.kernel.group is not self.group:
            raise OrientationError("kernel belongs to a different group")
        if 2 * len(self.kernel) != self.group.order:
            raise OrientationError(
                f"kernel {self.kernel.label()} has index {self.kernel.index}, not 2")

    def sigma(self, x: int) -> int:
        return 1 if x in self.kernel else -1

    @property
    def signs(self) -> list[int]:
        ker = self.kernel.member_set
        return [1 if x in ker else -1 for x in range(self.group.order)]


def make_orientation(g: FiniteGroup, seeds) -> Orientation:
    """Orientation whose kernel is the subgroup generated by ``seeds``."""
    return Orientation(g, subgroup_closure(g, seeds))


def sigma(o: Orientation, x: int) -> int:
    return o.sigma(x)


def quotient_coordinates(g: FiniteGroup) -> tuple[list[int], list[tuple[int, ...]]]:
    """Basis of G/K (K = derived_and_squares) and F2 coordinates of every element.

    The basis is picked greedily from elements in index order.
    """
    frattini = derived_and_squares(g)
    basis: list[int] = []
    span = set(frattini.members)
    for x in range(g.order):
        if x not in span:
            basis.append(x)
            span = set(subgroup_closure(g, list(frattini.members) + basis).members)
    k = len(basis)
    coords: list[tuple[int, ...] | None] = [None] * g.order
    for bits in itertools.product((0, 1), repeat=k):
        rep = 0
        for b, x in zip(bits, basis):
            if b:
                rep = g.mul(rep, x)
        for f in frattini.members:
            coords[g.mul(rep, f)] = bits
    return basis, coords  # type: ignore[return-value]


def enumerate_kernels(g: FiniteGroup) -> list[Subgroup]:
    """All index-2 subgroups, one per nonzero functional on G/K in lex order."""
    basis, coords = quotient_coordinates(g)
    kernels = []
    for f in itertools.product((0, 1), repeat=len(basis)):
        if not any(f):
            continue
        members = tuple(x for x in range(g.order)
                        if sum(a * b for a, b in zip(f, coords[x])) % 2 == 0)
        kernels.append(Subgroup(g, members))
    return kernels


def quotient_rank(g: FiniteGroup) -> int:
    return len(quotient_coordinates(g)[0])


def all_subgroups(g: FiniteGroup) -> list[Subgroup]:
    """Every subgroup, by closing known subgroups under one extra element."""
    found = {(0,): Subgroup(g, (0,))}
    frontier = list(found.values())
    while frontier:
        nxt = []
        for s in frontier:
            for x in range(g.order):
                if x in s:
                    continue
                t = subgroup_closure(g, s.members + (x,))
                if t.members not in found:
                    found[t.members] = t
                    nxt.append(t)
        frontier = nxt
    return sorted(found.values(), key=lambda s: (len(s), s.members))


def brute_force_kernels(g: FiniteGroup, limit: int = 32) -> list[Subgroup]:
    """Index-2 subgroups found by exhaustive subgroup enumeration (|G| <= limit)."""
    if g.order > limit:
        raise OrientationError(f"brute-force kernel scan limited to order {limit}")
    return [s for s in all_subgroups(g) if 2 * len(s) == g.order]

"""Concrete finite groups as Cayley tables.

Groups come from presentations (coset enumeration over the trivial
subgroup), from user-supplied tables, or from direct products. Element 0 is
always the identity.
"""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

import numpy as np

from .presdsl import Presentation, Word, format_word, parse_presentation

MAX_ORDER = 512
ASSOC_CHECK_LIMIT = 256
DEFAULT_COSET_LIMIT = 4096


class GroupError(ValueError):
    pass


class CosetLimitExceeded(GroupError):
    pass


class FiniteGroup:
    """Cayley table with cached element metadata.

    ``table[x, y]`` is the index of ``x*y``. Instances are treated as
    immutable; every derived attribute is computed once.
    """

    def __init__(self, table, *, gen_names=(), generator_elems=(), names=None,
                 label: str = "", check: bool = True):
        table = np.asarray(table, dtype=np.int32)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise GroupError("Cayley table must be a nonempty square array")
        n = table.shape[0]
        if n > MAX_ORDER:
            raise GroupError(f"group order {n} exceeds limit {MAX_ORDER}")
        table.setflags(write=False)
        self.table = table
        self.order = n
        self.gen_names = tuple(gen_names)
        self.generator_elems = tuple(int(x) for x in generator_elems)
        self.names = tuple(names) if names is not None else tuple(f"#{i}" for i in range(n))
        self.label = label
        self.rows: list[list[int]] = table.tolist()
        if check:
            self.validate(associativity=n <= ASSOC_CHECK_LIMIT)
        self.inv = [row.index(0) for row in self.rows]
        self.elem_order = self._orders()

    def __repr__(self):
        return f"FiniteGroup({self.label or '?'}, order={self.order})"

    def __len__(self):
        return self.order

    def validate(self, associativity: bool = True) -> None:
        t = self.table
        n = self.order
        full = np.arange(n)
        if not (t.min() >= 0 and t.max() < n):
            raise GroupError("table entries out of range")
        if not np.array_equal(t[0], full) or not np.array_equal(t[:, 0], full):
            raise GroupError("element 0 is not the identity")
        srt = np.sort(t, axis=1)
        if not (srt == full).all():
            raise GroupError("table rows are not permutations (not a Latin square)")
        if not (np.sort(t, axis=0) == full[:, None]).all():
            raise GroupError("table columns are not permutations (not a Latin square)")
        if associativity:
            self.check_associativity()

    def check_associativity(self) -> None:
        t = self.table
        # (xy)z == x(yz), one x-slab at a time to bound memory
        for x in range(self.order):
            left = t[t[x]]          # left[y, z] = (x*y)*z
            right = t[x][t]         # right[y, z] = x*(y*z)
            if not np.array_equal(left, right):
                y, z = map(int, np.argwhere(left != right)[0])
                raise GroupError(f"associativity fails at ({x}, {y}, {z})")

    def _orders(self) -> list[int]:
        rows = self.rows
        orders = [0] * self.order
        for x in range(self.order):
            k, y = 1, x
            while y != 0:
                y = rows[y][x]
                k += 1
                if k > self.order:
                    raise GroupError(f"element {x} has no finite order (not a group table)")
            orders[x] = k
        return orders

    def mul(self, x: int, y: int) -> int:
        return self.rows[x][y]

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = self.inv[x], -k
        y = 0
        for _ in range(k):
            y = self.rows[y][x]
        return y

    def conj(self, x: int, g: int) -> int:
        """g x g^-1"""
        return self.rows[self.rows[g][x]][self.inv[g]]

    def commutator(self, x: int, y: int) -> int:
        """x y x^-1 y^-1"""
        r = self.rows
        return r[r[r[x][y]][self.inv[x]]][self.inv[y]]

    def evaluate(self, w: Word) -> int:
        if not self.generator_elems:
            raise GroupError("group has no named generators")
        y = 0
        for g, e in w:
            y = self.rows[y][self.power(self.generator_elems[g], e)]
        return y

    def name(self, x: int) -> str:
        return self.names[x]

    @cached_property
    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    @cached_property
    def is_2group(self) -> bool:
        return self.order & (self.order - 1) == 0

    @cached_property
    def central(self) -> frozenset[int]:
        t = self.table
        return frozenset(int(z) for z in np.flatnonzero((t == t.T).all(axis=1)))

    @cached_property
    def centralizer_sizes(self) -> list[int]:
        t = self.table
        return [int(c) for c in (t == t.T).sum(axis=1)]

    def elements(self) -> range:
        return range(self.order)


@dataclass(frozen=True)
class Subgroup:
    group: FiniteGroup
    members: tuple[int, ...]

    @cached_property
    def member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def __contains__(self, x: int) -> bool:
        return x in self.member_set

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __eq__(self, other):
        return (isinstance(other, Subgroup) and other.group is self.group
                and other.members == self.members)

    def __hash__(self):
        return hash((id(self.group), self.members))

    @property
    def index(self) -> int:
        return self.group.order // len(self.members)

    def is_normal(self) -> bool:
        g = self.group
        s = self.member_set
        return all(g.conj(x, y) in s for x in self.members for y in range(g.order))

    def is_abelian(self) -> bool:
        r = self.group.rows
        ms = self.members
        return all(r[x][y] == r[y][x] for i, x in enumerate(ms) for y in ms[i + 1:])

    def generators(self) -> list[int]:
        """Greedy generating set in element-index order."""
        gens: list[int] = []
        span = {0}
        for x in self.members:
            if x not in span:
                gens.append(x)
                span = set(subgroup_closure(self.group, gens).members)
        return gens

    def label(self) -> str:
        gens = self.generators()
        return "<" + ",".join(self.group.name(x) for x in gens) + ">" if gens else "<1>"


# ---------------------------------------------------------------------------
# construction

def _coset_enumerate(ngens: int, relators, limit: int):
    """HLT coset enumeration over the trivial subgroup.

    Returns the compacted coset table, one row per coset and columns
    ``2*i`` (generator i) and ``2*i+1`` (its inverse).
    """
    ncols = 2 * ngens
    rels = []
    for r in relators:
        cols = []
        for g, e in r:
            col = 2 * g if e > 0 else 2 * g + 1
            cols.extend([col] * abs(e))
        if cols:
            rels.append(cols)

    def inv(c):
        return c ^ 1

    table: list[list[int]] = [[-1] * ncols]
    parent = [0]

    def rep(k):
        root = k
        while parent[root] != root:
            root = parent[root]
        while parent[k] != root:
            parent[k], k = root, parent[k]
        return root

    def define(c, x):
        if len(table) >= limit:
            raise CosetLimitExceeded(f"coset enumeration exceeded {limit} cosets")
        d = len(table)
        table.append([-1] * ncols)
        parent.append(d)
        table[c][x] = d
        table[d][inv(x)] = c

    def merge(k, l, queue):
        k, l = rep(k), rep(l)
        if k == l:
            return
        lo, hi = min(k, l), max(k, l)
        parent[hi] = lo
        queue.append(hi)

    def coincidence(a, b):
        queue: deque[int] = deque()
        merge(a, b, queue)
        while queue:
            e = queue.popleft()
            for x in range(ncols):
                f = table[e][x]
                if f < 0:
                    continue
                if table[f][inv(x)] == e:
                    table[f][inv(x)] = -1
                e1, f1 = rep(e), rep(f)
                if table[e1][x] >= 0:
                    merge(f1, table[e1][x], queue)
                elif table[f1][inv(x)] >= 0:
                    merge(e1, table[f1][inv(x)], queue)
                else:
                    table[e1][x] = f1
                    table[f1][inv(x)] = e1

    def scan_and_fill(c, w):
        f = b = c
        i, j = 0, len(w) - 1
        while True:
            while i <= j and table[f][w[i]] >= 0:
                f = table[f][w[i]]
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            while j >= i and table[b][inv(w[j])] >= 0:
                b = table[b][inv(w[j])]
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if i == j:
                table[f][w[i]] = b
                table[b][inv(w[i])] = f
                return
            define(f, w[i])

    c = 0
    while c < len(table):
        for w in rels:
            if parent[c] != c:
                break
            scan_and_fill(c, w)
        for x in range(ncols):
            if parent[c] != c:
                break
            if table[c][x] < 0:
                define(c, x)
        c += 1

    live = [k for k in range(len(table)) if parent[k] == k]
    pos = {k: i for i, k in enumerate(live)}
    return [[pos[rep(table[k][x])] for x in range(ncols)] for k in live]


def _bfs_numbering(cosets: list[list[int]]):
    """Renumber cosets in breadth-first order from coset 0 (column order)."""
    order = [0]
    seen = {0: 0}
    via: list[tuple[int, int]] = [(-1, -1)]
    head = 0
    while head < len(order):
        c = order[head]
        for x, d in enumerate(cosets[c]):
            if d not in seen:
                seen[d] = len(order)
                order.append(d)
                via.append((seen[c], x))
        head += 1
    table = [[seen[cosets[c][x]] for x in range(len(cosets[0]))] for c in order]
    return table, via


def realize(p: Presentation | str, coset_limit: int = DEFAULT_COSET_LIMIT,
            label: str = "") -> FiniteGroup:
    """Cayley table of the finite group defined by ``p``."""
    if isinstance(p, str):
        p = parse_presentation(p)
    if coset_limit < 1:
        raise ValueError("coset_limit must be positive")
    k = len(p.generators)
    cosets = _coset_enumerate(k, p.relators, coset_limit)
    n = len(cosets)
    if n > MAX_ORDER:
        raise GroupError(f"group order {n} exceeds limit {MAX_ORDER}")
    action, via = _bfs_numbering(cosets)

    # element j is the word reaching coset j; x*j = follow that word from x
    mul = [[0] * n for _ in range(n)]
    for x in range(n):
        row = mul[x]
        row[0] = x
        for j in range(1, n):
            pj, col = via[j]
            row[j] = action[row[pj]][col]

    words: list[list[tuple[int, int]]] = [[]]
    for j in range(1, n):
        pj, col = via[j]
        gen, e = col // 2, (-1 if col % 2 else 1)
        w = list(words[pj])
        if w and w[-1][0] == gen:
            w[-1] = (gen, w[-1][1] + e)
        else:
            w.append((gen, e))
        words.append(w)
    names = [format_word(tuple(w), p.generators) for w in words]
    gen_elems = [action[0][2 * i] for i in range(k)]
    g = FiniteGroup(mul, gen_names=p.generators, generator_elems=gen_elems,
                    names=names, label=label or str(p))
    for rel in p.relators:
        if g.evaluate(rel) != 0:
            raise GroupError(f"relator {format_word(rel, p.generators)} not satisfied")
    return g


_E_LETTERS = "efuvwxyz"


def _fresh_names(taken, names):
    out = []
    for nm in names:
        new = nm
        while new in taken:
            new += "p"
        taken = set(taken) | {new}
        out.append(new)
    return out


def direct_product(g: FiniteGroup, h: FiniteGroup, label: str = "") -> FiniteGroup:
    """(x, y) is stored at index x*|h| + y."""
    n = g.order * h.order
    if n > MAX_ORDER:
        raise GroupError(f"direct product order {n} exceeds limit {MAX_ORDER}")
    m = h.order
    gt = g.table.astype(np.int64)
    ht = h.table.astype(np.int64)
    table = (gt[:, None, :, None] * m + ht[None, :, None, :]).reshape(n, n)
    hnames = _fresh_names(g.gen_names, h.gen_names)
    rename = dict(zip(h.gen_names, hnames))
    hlabels = [re.sub(r"[A-Za-z]+", lambda mt: rename.get(mt.group(), mt.group()), s)
               for s in h.names]

    def nm(x, y):
        if x == 0:
            return hlabels[y] if y else "1"
        return g.names[x] if y == 0 else f"{g.names[x]}*{hlabels[y]}"

    names = [nm(x, y) for x in range(g.order) for y in range(m)]
    gens = [x * m for x in g.generator_elems] + list(h.generator_elems)
    return FiniteGroup(table, gen_names=tuple(g.gen_names) + tuple(hnames),
                       generator_elems=gens, names=names,
                       label=label or f"{g.label}x{h.label}")


def cyclic(n: int, name: str = "a") -> FiniteGroup:
    return realize(f"<{name} | {name}^{n}>", label=f"C{n}")


def trivial_group() -> FiniteGroup:
    return FiniteGroup([[0]], label="1")


def elementary_abelian(r: int) -> FiniteGroup:
    """C2^r on generators e, f, u, ... ; the trivial group for r = 0."""
    if r == 0:
        return trivial_group()
    if r > len(_E_LETTERS):
        raise GroupError("rank too large")
    gens = _E_LETTERS[:r]
    rels = [f"{x}^2" for x in gens]
    rels += [f"{x}*{y}={y}*{x}" for i, x in enumerate(gens) for y in gens[i + 1:]]
    return realize(f"<{','.join(gens)} | {', '.join(rels)}>",
                   label="C2" if r == 1 else f"C2^{r}")


def with_e_factor(g: FiniteGroup, r: int) -> FiniteGroup:
    if r == 0:
        return g
    suffix = "xC2" if r == 1 else f"xC2^{r}"
    return direct_product(g, elementary_abelian(r), label=g.label + suffix)


def from_cayley_text(text: str, label: str = "") -> FiniteGroup:
    """Parse the ``order n`` + n rows format; element 0 must be the identity."""
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise GroupError("empty Cayley table file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "order" or not head[1].isdigit():
        raise GroupError("first line must be 'order n'")
    n = int(head[1])
    if n < 1 or n > MAX_ORDER:
        raise GroupError(f"order {n} out of range")
    rows = lines[1:]
    if len(rows) != n:
        raise GroupError(f"expected {n} table rows, found {len(rows)}")
    try:
        table = [[int(v) for v in row.split()] for row in rows]
    except ValueError as exc:
        raise GroupError(f"non-integer table entry: {exc}") from None
    if any(len(row) != n for row in table):
        raise GroupError(f"every row must have {n} entries")
    g = FiniteGroup(table, label=label or f"table[{n}]")
    if n > ASSOC_CHECK_LIMIT:
        g.check_associativity()
    return g


def load_cayley_file(path) -> FiniteGroup:
    path = Path(path)
    return from_cayley_text(path.read_text(), label=path.stem)


def to_cayley_text(g: FiniteGroup) -> str:
    lines = [f"order {g.order}"]
    lines += [" ".join(str(v) for v in row) for row in g.rows]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# subgroups

def subgroup_closure(g: FiniteGroup, seeds) -> Subgroup:
    """Smallest subgroup containing ``seeds``."""
    seeds = sorted({int(s) for s in seeds})
    for s in seeds:
        if not 0 <= s < g.order:
            raise GroupError(f"element {s} out of range")
    rows = g.rows
    members = {0}
    frontier = [0]
    gens = [s for s in seeds if s != 0]
    # closed under right multiplication by generators => subgroup (finite group)
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = rows[x][s]
                if y not in members:
                    members.add(y)
                    nxt.append(y)
        frontier = nxt
    return Subgroup(g, tuple(sorted(members)))


def subgroup_from_words(g: FiniteGroup, words) -> Subgroup:
    return subgroup_closure(g, [g.evaluate(w) for w in words])


def center(g: FiniteGroup) -> Subgroup:
    return Subgroup(g, tuple(sorted(g.central)))


def derived_and_squares(g: FiniteGroup) -> Subgroup:
    """Subgroup generated by all commutators and all squares."""
    seeds = {g.commutator(x, y) for x in range(g.order) for y in range(x + 1, g.order)}
    seeds |= {g.mul(x, x) for x in range(g.order)}
    return subgroup_closure(g, seeds)


def subgroup_as_group(s: Subgroup, label: str = "") -> tuple[FiniteGroup, list[int]]:
    """Re-index a subgroup as a standalone group; returns (group, embedding)."""
    g = s.group
    members = list(s.members)
    pos = {x: i for i, x in enumerate(members)}
    table = [[pos[g.rows[x][y]] for y in members] for x in members]
    names = [g.names[x] for x in members]
    h = FiniteGroup(table, names=names, label=label or f"{s.label()} in {g.label}",
                    check=False)
    return h, members


def is_lagrange_consistent(s: Subgroup) -> bool:
    return s.group.order % len(s) == 0


def lcm_all(values) -> int:
    out = 1
    for v in values:
        out = math.lcm(out, v)
    return out

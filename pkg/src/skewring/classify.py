"""Structural prediction of commutativity of antisymmetric elements.

A pair (G, N) with ring class rc is commutative iff it falls into one of ten
families. Three are recognized intrinsically (elementary abelian kernel,
Hamiltonian groups); the rest are fixed small groups B with listed kernels
N0, recognized up to an isomorphism (G, N) ~ (B x C2^r, N0 x C2^r).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cache

from .coeffring import RingClass
from .groupcore import (
    FiniteGroup,
    Subgroup,
    direct_product,
    elementary_abelian,
    realize,
    subgroup_as_group,
    subgroup_from_words,
    with_e_factor,
)
from .groupstruct import (
    find_isomorphism,
    is_elementary_abelian_2,
    is_hamiltonian_2group,
)
from .orient import enumerate_kernels
from .presdsl import parse_word_list

ALL_CLASSES = frozenset(RingClass)
R2_ZERO = frozenset({RingClass.R2_ZERO})
CHAR_4 = frozenset({RingClass.CHAR_4})

CASE_IDS = ("C1", "C2", "C3", "C4i", "C4ii", "C5", "C6", "C7", "C8", "C9", "C10")

# ring classes each case may occur with
CASE_RINGS = {
    "C1": R2_ZERO, "C2": CHAR_4, "C3": R2_ZERO, "C4i": ALL_CLASSES, "C4ii": CHAR_4,
    "C5": ALL_CLASSES, "C6": CHAR_4, "C7": R2_ZERO, "C8": R2_ZERO, "C9": R2_ZERO,
    "C10": R2_ZERO,
}

PRESENTATIONS = {
    "Q8": "<a,b | a^4=1, b^2=a^2, b^-1*a*b=a^-1>",
    "D4": "<r,s | r^4=s^2=1, s*r*s=r^-1>",
    "S3": "<a,b | a^3, b^2, (ab)^2>",
    "SL(2,3)": "<s,t | (st)^2=s^3=t^3>",
    "G[16,3]": "<g,h | g^4=h^4=(gh)^2=(gh^-1)^2=1>",
    "G[16,8]": "<a,b | a^8=1, b^2=a^4, ab=ba^3>",
    "G[16,9]": "<a,b | a^8=1, b^2=a^4, ab=ba^-1>",
    "G[16,4]": "<a,b | a^4=b^4=1, ab=b^-1a>",
    "G[16,13]": "<a,b,c | a^2=b^2=c^2=1, abc=bca=cab>",
    "G[32,35]": "<a,b,c | a^4=b^4=1, c^2=a^2, ab=ba, ac=ca^-1, bc=cb^-1>",
    "G[32,30]": "<a,b,c,d | a^4=b^2=c^2=d^2=1, ab=ba, ac=ca, ad=dab, bc=cb, bd=db, cd=da^2c>",
    "G[32,31]": "<a,b,c | a^4=b^4=c^2=1, ab=ba, ac=ca^-1, bc=ca^2b^-1>",
    "G[32,24]": "<a,b,c | a^4=b^4=c^2=1, ab=ba, ac=ca, bc=ca^2b>",
}

# (case, base group, good kernels as generator lists, ring classes)
CATALOG_SPECS = (
    ("C1", "G[16,8]", ("a^2, ab",), R2_ZERO),
    ("C2", "G[16,9]", ("a^2, b", "a^2, ab"), CHAR_4),
    ("C5", "G[16,4]", ("a, b^2", "ab, b^2"), ALL_CLASSES),
    ("C6", "G[32,35]", ("a, c, b^2", "a, bc, b^2"), CHAR_4),
    ("C7", "G[16,13]", ("a, b", "a, c", "b, c"), R2_ZERO),
    ("C8", "G[32,30]", ("b, c, d",), R2_ZERO),
    ("C9", "G[32,31]", ("a, c, b^2",), R2_ZERO),
    ("C10", "G[32,24]", ("b, c", "ab, c"), R2_ZERO),
)


@cache
def named_group(name: str) -> FiniteGroup:
    if name == "Q8xC2":
        return direct_product(named_group("Q8"), elementary_abelian(1), label="Q8xC2")
    if name not in PRESENTATIONS:
        raise KeyError(f"unknown group {name!r}")
    return realize(PRESENTATIONS[name], label=name)


def kernel_from_text(g: FiniteGroup, text: str) -> Subgroup:
    return subgroup_from_words(g, parse_word_list(text, g.gen_names))


@dataclass(frozen=True)
class TheoremCase:
    case_id: str
    kernel_variant: str | None = None

    def __str__(self):
        return self.case_id if not self.kernel_variant else f"{self.case_id} {self.kernel_variant}"


@dataclass(frozen=True)
class CatalogEntry:
    case_id: str
    base: FiniteGroup
    good_kernels: tuple[Subgroup, ...]
    kernel_texts: tuple[str, ...]
    ring_requirement: frozenset

    @property
    def label(self) -> str:
        return self.base.label


@cache
def build_catalog() -> tuple[CatalogEntry, ...]:
    entries = []
    for case_id, name, kernels, rings in CATALOG_SPECS:
        base = named_group(name)
        subs = tuple(kernel_from_text(base, k) for k in kernels)
        for s in subs:
            if 2 * len(s) != base.order:
                raise RuntimeError(f"catalog kernel {s.label()} of {name} is not index 2")
        entries.append(CatalogEntry(case_id, base, subs, kernels, rings))
    return tuple(entries)


def catalog_entry(case_id: str) -> CatalogEntry:
    for e in build_catalog():
        if e.case_id == case_id:
            return e
    raise KeyError(case_id)


def extend_kernel(base: FiniteGroup, kernel: Subgroup, g: FiniteGroup, r: int) -> Subgroup:
    """N0 x C2^r inside g = base x C2^r."""
    if r == 0:
        return kernel
    m = 2**r
    return Subgroup(g, tuple(sorted(x * m + y for x in kernel.members for y in range(m))))


@cache
def reference_pairs(case_id: str, r: int) -> tuple[FiniteGroup, tuple[Subgroup, ...]]:
    entry = catalog_entry(case_id)
    g = with_e_factor(entry.base, r)
    return g, tuple(extend_kernel(entry.base, k, g, r) for k in entry.good_kernels)


def _e_rank(g: FiniteGroup, base: FiniteGroup) -> int | None:
    if g.order % base.order:
        return None
    ratio = g.order // base.order
    if ratio & (ratio - 1):
        return None
    return int(math.log2(ratio))


def classify(g: FiniteGroup, n: Subgroup, rc: RingClass) -> TheoremCase | None:
    """First matching case, or None (predicted not commutative)."""
    if g.is_abelian:
        raise ValueError("classify expects a nonabelian group")
    if n.group is not g or 2 * len(n) != g.order:
        raise ValueError("kernel must be an index-2 subgroup of the group")
    if rc is RingClass.R2_ZERO and is_elementary_abelian_2(n):
        return TheoremCase("C3")
    if is_hamiltonian_2group(g):
        if n.is_abelian():
            return TheoremCase("C4i")
        if rc is RingClass.CHAR_4 and is_hamiltonian_2group(n):
            return TheoremCase("C4ii")
    if not g.is_2group:
        return None
    for entry in build_catalog():
        if rc not in entry.ring_requirement:
            continue
        r = _e_rank(g, entry.base)
        if r is None:
            continue
        ref, ref_kernels = reference_pairs(entry.case_id, r)
        for text, rk in zip(entry.kernel_texts, ref_kernels):
            if find_isomorphism(ref, g, (rk, n)) is not None:
                variant = f"<{text.replace(' ', '')}>" + ("xE" if r else "")
                return TheoremCase(entry.case_id, variant)
    return None


def predict(g: FiniteGroup, n: Subgroup, rc: RingClass) -> bool:
    if g.is_abelian:
        return True
    return classify(g, n, rc) is not None


# ---------------------------------------------------------------------------
# alternate statements of the same families, checked by oriented isomorphism

@dataclass(frozen=True)
class CrossCheck:
    item: str
    case_id: str
    group_isomorphic: bool
    kernels_match: bool
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.group_isomorphic and self.kernels_match


ALTERNATE_FORMS = (
    ("C1 on generators g,h", "C1", "<g,h | g^8=1, h^2=g^4, gh=hg^3>", ("g^2, gh",)),
    ("C2 on generators g,h", "C2", "<g,h | g^8=1, h^2=g^4, gh=hg^-1>", ("g^2, h", "g^2, gh")),
    ("C5 with xE on both kernels", "C5", "<a,b | a^4=b^4=1, ab=b^-1a>", ("a, b^2", "ab, b^2")),
    ("C6 with roles of b,c exchanged", "C6", "<a,b,c | a^4=c^4=1, b^2=a^2, ac=ca, ab=ba^-1, cb=bc^-1>",
     ("a, b, c^2", "a, cb, c^2")),
    ("C8 restated", "C8", PRESENTATIONS["G[32,30]"], ("b, c, d",)),
    ("C9 restated", "C9", PRESENTATIONS["G[32,31]"], ("a, c, b^2",)),
    ("C10 on generators g,a,b", "C10", "<g,a,b | g^4=a^4=b^2=1, ga=ag, gb=bg, ab=g^2ba>", ("a, b", "ga, b")),
)


def _kernel_sets_match(g, gk, h, hk) -> bool:
    def covered(src_g, src, dst_g, dst):
        return all(any(find_isomorphism(src_g, dst_g, (a, b)) is not None for b in dst)
                   for a in src)
    return covered(g, gk, h, hk) and covered(h, hk, g, gk)


def crosscheck_alternate_forms() -> list[CrossCheck]:
    out = []
    for item, case_id, pres, kernels in ALTERNATE_FORMS:
        alt = realize(pres, label=item)
        alt_k = [kernel_from_text(alt, k) for k in kernels]
        entry = catalog_entry(case_id)
        iso = find_isomorphism(alt, entry.base) is not None
        match = iso and _kernel_sets_match(alt, alt_k, entry.base, list(entry.good_kernels))
        out.append(CrossCheck(item, case_id, iso, match, pres))

    # good kernels of G[16,13] are exactly the kernels isomorphic to D4
    g = named_group("G[16,13]")
    d4 = named_group("D4")
    d4_kernels = [k for k in enumerate_kernels(g)
                  if find_isomorphism(subgroup_as_group(k)[0], d4) is not None]
    good = catalog_entry("C7").good_kernels
    out.append(CrossCheck("C7 kernels are the D4 subgroups", "C7", True,
                          sorted(k.members for k in d4_kernels) == sorted(k.members for k in good),
                          "kernels of G[16,13] isomorphic to D4"))

    # Hamiltonian groups: every kernel of Q8 x C2^r
    ok_c4 = True
    ok_ham = True
    for r in range(3):
        g = with_e_factor(named_group("Q8"), r)
        for k in enumerate_kernels(g):
            case = classify(g, k, RingClass.R2_ZERO)
            if k.is_abelian():
                ok_c4 &= case is not None and case.case_id == "C4i"
            else:
                ok_ham &= classify(g, k, RingClass.CHAR_4) == TheoremCase("C4ii")
    out.append(CrossCheck("C4i for Q8xE, cyclic kernel", "C4i", True, ok_c4, "Q8 x E with abelian kernel"))
    out.append(CrossCheck("C4ii for Q8xE, Hamiltonian kernel", "C4ii", True, ok_ham, "Q8 x E with Hamiltonian kernel"))
    return out

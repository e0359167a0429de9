"""Coefficient rings Z and Z/m (m >= 3)."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

INT64_MAX = 2**63 - 1


class RingError(ValueError):
    pass


class RingClass(enum.Enum):
    R2_ZERO = "r2zero"
    CHAR_4 = "char4"
    OTHER = "other"

    @classmethod
    def parse(cls, text: str) -> "RingClass":
        key = text.strip().lower().replace("_", "")
        for rc in cls:
            if rc.value == key:
                return rc
        raise RingError(f"unknown ring class {text!r} (use r2zero, char4 or other)")


@dataclass(frozen=True)
class CoeffRing:
    """``modulus == 0`` is the integers; otherwise Z/modulus."""

    modulus: int

    def __post_init__(self):
        m = self.modulus
        if m < 0 or m in (1, 2):
            raise RingError(f"unsupported modulus {m}: need 0 (Z) or m >= 3")

    def __str__(self):
        return "Z" if self.modulus == 0 else f"Z/{self.modulus}"

    @property
    def spec(self) -> str:
        return "z" if self.modulus == 0 else f"z/{self.modulus}"

    def reduce(self, x: int) -> int:
        if self.modulus:
            return x % self.modulus
        if abs(x) > INT64_MAX:
            raise OverflowError(f"integer coefficient {x} overflows 64 bits")
        return x

    def add(self, x: int, y: int) -> int:
        return self.reduce(x + y)

    def neg(self, x: int) -> int:
        return self.reduce(-x)

    def mul(self, x: int, y: int) -> int:
        return self.reduce(x * y)

    def is_zero(self, x: int) -> bool:
        return self.reduce(x) == 0


def parse_ring(text: str) -> CoeffRing:
    """``z`` or ``z/<m>``."""
    s = text.strip().lower()
    if s in ("z", "zz"):
        return CoeffRing(0)
    m = re.fullmatch(r"z\s*/\s*(\d+)", s)
    if not m:
        raise RingError(f"bad ring {text!r}: expected z or z/<m>")
    return CoeffRing(int(m.group(1)))


def characteristic(r: CoeffRing) -> int:
    return r.modulus


def r2_generators(r: CoeffRing) -> list[int]:
    """Additive generators of the 2-torsion {x : 2x = 0}."""
    if r.modulus % 2 == 1 or r.modulus == 0:
        return []
    return [r.modulus // 2]


def two_torsion(r: CoeffRing) -> list[int]:
    if r.modulus == 0:
        return [0]
    return [x for x in range(r.modulus) if (2 * x) % r.modulus == 0]


def ring_class(r: CoeffRing) -> RingClass:
    if not r2_generators(r):
        return RingClass.R2_ZERO
    if characteristic(r) == 4:
        return RingClass.CHAR_4
    return RingClass.OTHER


REPRESENTATIVES = {
    RingClass.R2_ZERO: CoeffRing(0),
    RingClass.CHAR_4: CoeffRing(4),
    RingClass.OTHER: CoeffRing(8),
}

"""Exact arithmetic in the cyclic group Z_N plus symmetric integer representatives."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional

__all__ = [
    "GroupElement",
    "add",
    "neg",
    "group_sum",
    "from_residue",
    "to_residue",
    "symmetric_set",
    "units",
]


@dataclass(frozen=True)
class GroupElement:
    """A residue modulo a fixed positive modulus.

    Arithmetic between elements of different moduli is a hard error, never a
    silent coercion.
    """

    value: int
    modulus: int

    def __post_init__(self) -> None:
        if not isinstance(self.modulus, int) or self.modulus <= 0:
            raise ValueError(f"modulus must be a positive integer, got {self.modulus!r}")
        if not isinstance(self.value, int):
            raise ValueError(f"value must be an integer, got {self.value!r}")
        if not 0 <= self.value < self.modulus:
            object.__setattr__(self, "value", self.value % self.modulus)

    def _require_same_modulus(self, other: "GroupElement") -> None:
        if self.modulus != other.modulus:
            raise ValueError(
                f"modulus mismatch: {self.modulus} vs {other.modulus}"
            )

    def __add__(self, other: "GroupElement") -> "GroupElement":
        self._require_same_modulus(other)
        return GroupElement((self.value + other.value) % self.modulus, self.modulus)

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        self._require_same_modulus(other)
        return GroupElement((self.value - other.value) % self.modulus, self.modulus)

    def __neg__(self) -> "GroupElement":
        return GroupElement((-self.value) % self.modulus, self.modulus)

    def scale(self, k: int) -> "GroupElement":
        """Integer multiple k * self."""
        return GroupElement((self.value * k) % self.modulus, self.modulus)

    def symmetric(self) -> int:
        """Symmetric integer representative of this residue."""
        return from_residue(self.value, self.modulus)

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.modulus})"


def add(a: GroupElement, b: GroupElement) -> GroupElement:
    return a + b


def neg(a: GroupElement) -> GroupElement:
    return -a


def group_sum(elements: Iterable[GroupElement], modulus: Optional[int] = None) -> GroupElement:
    """Sum a sequence of elements sharing one modulus.

    An empty sequence is allowed only when the modulus is supplied explicitly.
    """
    total = 0
    seen_modulus = None
    for e in elements:
        if seen_modulus is None:
            seen_modulus = e.modulus
            if modulus is not None and modulus != seen_modulus:
                raise ValueError(f"modulus mismatch: {modulus} vs {seen_modulus}")
        elif e.modulus != seen_modulus:
            raise ValueError(f"modulus mismatch: {seen_modulus} vs {e.modulus}")
        total += e.value
    if seen_modulus is None:
        if modulus is None:
            raise ValueError("empty sum needs an explicit modulus")
        seen_modulus = modulus
    return GroupElement(total % seen_modulus, seen_modulus)


def from_residue(r: int, modulus: int) -> int:
    """Map a residue to its symmetric representative in [-N/2, N/2].

    Residues r with r <= N/2 map to r, the rest map to r - N.
    """
    if modulus <= 0:
        raise ValueError(f"modulus must be positive, got {modulus}")
    r = r % modulus
    return r if 2 * r <= modulus else r - modulus


def to_residue(x: int, modulus: int) -> int:
    """Inverse of from_residue: symmetric representative back to a residue."""
    if modulus <= 0:
        raise ValueError(f"modulus must be positive, got {modulus}")
    return x % modulus


def symmetric_set(n: int) -> List[int]:
    """The set {-n/2, ..., -1, 1, ..., n/2} for even n, sorted ascending."""
    if n <= 0 or n % 2 != 0:
        raise ValueError(f"symmetric_set needs a positive even size, got {n}")
    half = n // 2
    return list(range(-half, 0)) + list(range(1, half + 1))


def units(modulus: int) -> List[int]:
    """All multiplicatively invertible residues mod the given modulus."""
    if modulus <= 0:
        raise ValueError(f"modulus must be positive, got {modulus}")
    from math import gcd

    return [a for a in range(modulus) if gcd(a, modulus) == 1]

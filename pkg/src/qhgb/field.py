"""Arithmetic in the prime field GF(p)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

DEFAULT_PRIME = 65521


class ModulusMismatch(ValueError):
    pass


def is_prime(p: int) -> bool:
    """Deterministic Miller-Rabin, exact for p < 3.3e24."""
    if p < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if p % q == 0:
            return p == q
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=64)
def check_modulus(p: int) -> int:
    if not (2 < p < 2**31) or not is_prime(p):
        raise ValueError(f"modulus must be an odd prime below 2^31, got {p}")
    return p


def inv_mod(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError("0 has no inverse modulo %d" % p)
    return pow(a, p - 2, p)


@dataclass(frozen=True)
class FieldElement:
    """An element of GF(p), stored as its least nonnegative residue."""

    value: int
    p: int = DEFAULT_PRIME

    def __post_init__(self):
        check_modulus(self.p)
        if not 0 <= self.value < self.p:
            object.__setattr__(self, "value", self.value % self.p)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.p != self.p:
                raise ModulusMismatch(f"GF({self.p}) vs GF({other.p})")
            return other.value
        if isinstance(other, int):
            return other % self.p
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement((self.value + b) % self.p, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement((self.value - b) % self.p, self.p)

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement((b - self.value) % self.p, self.p)

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.value * b % self.p, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(-self.value % self.p, self.p)

    def inverse(self) -> FieldElement:
        return FieldElement(inv_mod(self.value, self.p), self.p)

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return self * FieldElement(inv_mod(b, self.p), self.p)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return FieldElement(pow(self.value, e, self.p), self.p)

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} mod {self.p}"


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    if a.p != b.p:
        raise ModulusMismatch(f"GF({a.p}) vs GF({b.p})")
    return a + b


def mul_inv(a: FieldElement) -> FieldElement:
    return a.inverse()

"""Kronecker symbols and the quadratic character of Q(sqrt(-d))."""

from __future__ import annotations

from dataclasses import dataclass

from .exact import squarefree_decomposition

__all__ = [
    "CLASS_NUMBER_ONE",
    "SUPPORTED_D",
    "FieldParams",
    "QuadChar",
    "chi",
    "field_params",
    "kronecker",
    "prime_divisors",
]

# Imaginary quadratic fields with class number one (Heegner numbers).
CLASS_NUMBER_ONE = (1, 2, 3, 7, 11, 19, 43, 67, 163)
# ... of which 2 is unramified (d = 3 mod 4).
SUPPORTED_D = (3, 7, 11, 19, 43, 67, 163)


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n) for arbitrary integers a, n."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -1
    # factor out powers of two from n using (a/2)
    v = (n & -n).bit_length() - 1
    if v:
        if a % 2 == 0:
            return 0
        n >>= v
        if v % 2 and a % 8 in (3, 5):
            result = -result
    # n is now odd and positive: Jacobi symbol
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def prime_divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class FieldParams:
    d: int
    discriminant: int
    conductor: int
    two_unramified: bool
    class_number_one: bool


def field_params(d: int) -> FieldParams:
    if d < 1:
        raise ValueError(f"d must be a positive squarefree integer, got {d}")
    s, _ = squarefree_decomposition(d)
    if s != 1:
        raise ValueError(f"d = {d} is not squarefree")
    disc = -d if d % 4 == 3 else -4 * d
    return FieldParams(
        d=d,
        discriminant=disc,
        conductor=-disc,
        two_unramified=d % 4 == 3,
        class_number_one=d in CLASS_NUMBER_ONE,
    )


@dataclass(frozen=True)
class QuadChar:
    """The character chi_D(m) = (D/m) of the field with parameters `params`."""

    params: FieldParams

    @classmethod
    def of(cls, d: int) -> "QuadChar":
        return cls(field_params(d))

    @property
    def discriminant(self) -> int:
        return self.params.discriminant

    @property
    def conductor(self) -> int:
        return self.params.conductor

    def __call__(self, m: int) -> int:
        return kronecker(self.params.discriminant, m)

    def values(self) -> list[int]:
        """chi(0), chi(1), ..., chi(f - 1) over one period f = |D|."""
        return [self(m) for m in range(self.conductor)]


def chi(char: QuadChar, m: int) -> int:
    return char(m)

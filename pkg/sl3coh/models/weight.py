"""
Weight and Decomposition data-model definitions
"""

from typing import Sequence
from dataclasses import dataclass
import re

from dcm_common.models import DataModel


_WEIGHT_PATTERN = re.compile(r"^\(?\s*(-?\d+)\s*,\s*(-?\d+)\s*\)?$")


@dataclass(frozen=True, order=True)
class Weight(DataModel):
    """
    Weight `DataModel`; an integer pair in the basis of fundamental
    weights of SL3.

    Keyword arguments:
    a -- coefficient of the first fundamental weight
    b -- coefficient of the second fundamental weight
    """

    a: int
    b: int

    @property
    def dominant(self) -> bool:
        """Returns `True` if both coordinates are non-negative."""
        return self.a >= 0 and self.b >= 0

    @property
    def zero(self) -> bool:
        """Returns `True` for the zero weight."""
        return self.a == 0 and self.b == 0

    def restricted(self, p: int) -> bool:
        """Returns `True` if `self` is dominant with coordinates below `p`."""
        return 0 <= self.a < p and 0 <= self.b < p

    def dual(self) -> "Weight":
        """Returns the highest weight of the dual simple module."""
        return Weight(self.b, self.a)

    def scaled(self, factor: int) -> "Weight":
        """Returns `factor` times `self`."""
        return Weight(factor * self.a, factor * self.b)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(self.a - other.a, self.b - other.b)

    def __str__(self) -> str:
        return f"({self.a},{self.b})"

    @classmethod
    def parse(cls, text: str) -> "Weight":
        """
        Returns `Weight` from a string like 'a,b' or '(a,b)'.

        Raises `ValueError` on malformed input.
        """
        match = _WEIGHT_PATTERN.match(text.strip())
        if match is None:
            raise ValueError(f"Malformed weight '{text}' (expected 'a,b').")
        return cls(int(match.group(1)), int(match.group(2)))


ZERO = Weight(0, 0)


@dataclass(frozen=True)
class Decomposition(DataModel):
    """
    Canonical Steinberg decomposition `DataModel` of a dominant weight.

    The weight equals the sum of p^(twist + i) * factors[i]. Leading
    zero digits are absorbed into `twist`, trailing zero digits are
    dropped and the zero weight is represented as
    `Decomposition(p, 0, (Weight(0, 0),))`.

    Keyword arguments:
    p -- characteristic
    twist -- leading Frobenius twist
    factors -- restricted factor weights
    """

    p: int
    twist: int
    factors: tuple[Weight, ...]

    @DataModel.serialization_handler("factors")
    @classmethod
    def factors_serialization(cls, value):
        """Performs `factors`-serialization."""
        return [factor.json for factor in value]

    @DataModel.deserialization_handler("factors")
    @classmethod
    def factors_deserialization(cls, value):
        """Performs `factors`-deserialization."""
        return tuple(Weight.from_json(factor) for factor in value)

    @classmethod
    def zero(cls, p: int) -> "Decomposition":
        """Returns the canonical form of the zero weight."""
        return cls(p, 0, (ZERO,))

    @classmethod
    def from_digits(
        cls, p: int, digits: Sequence[Weight], twist: int = 0
    ) -> "Decomposition":
        """
        Returns canonical `Decomposition` for the given base-`p` digit
        pairs (least significant first) shifted by `twist`.

        Keyword arguments:
        p -- characteristic
        digits -- restricted digit pairs
        twist -- additional Frobenius twist
                 (default 0)
        """
        for digit in digits:
            if not digit.restricted(p):
                raise ValueError(
                    f"Digit {digit} is not restricted for p={p}."
                )
        nonzero = [i for i, digit in enumerate(digits) if not digit.zero]
        if not nonzero:
            return cls.zero(p)
        return cls(
            p,
            twist + nonzero[0],
            tuple(digits[nonzero[0]:nonzero[-1] + 1]),
        )

    @property
    def is_zero(self) -> bool:
        """Returns `True` for the zero weight."""
        return self.twist == 0 and self.factors == (ZERO,)

    @property
    def digits(self) -> tuple[Weight, ...]:
        """Returns all digit pairs including the leading zeros."""
        return (ZERO,) * self.twist + self.factors

    @property
    def lambda0(self) -> Weight:
        """Returns the untwisted (restricted) part."""
        if self.twist > 0:
            return ZERO
        return self.factors[0]

    def remainder(self) -> "Decomposition":
        """Returns the decomposition of the untwisted remaining part."""
        if self.twist > 0:
            return Decomposition(self.p, self.twist - 1, self.factors)
        return Decomposition.from_digits(self.p, self.factors[1:])

    def dual(self) -> "Decomposition":
        """Returns decomposition with every factor dualized."""
        return Decomposition(
            self.p, self.twist, tuple(f.dual() for f in self.factors)
        )

    def twisted(self, d: int) -> "Decomposition":
        """Returns the `d`-th Frobenius twist."""
        if self.is_zero:
            return self
        return Decomposition(self.p, self.twist + d, self.factors)

    def weight(self) -> Weight:
        """Returns the recomposed weight."""
        a = b = 0
        for i, factor in enumerate(self.factors):
            scale = self.p ** (self.twist + i)
            a += scale * factor.a
            b += scale * factor.b
        return Weight(a, b)

    def __str__(self) -> str:
        if self.is_zero:
            return str(ZERO)
        parts = []
        for i, factor in enumerate(self.factors):
            exponent = self.twist + i
            if factor.zero and i > 0:
                continue
            parts.append(
                str(factor) + (f"^[{exponent}]" if exponent else "")
            )
        return " x ".join(parts)

"""
Symbolic patterns for parametrized weights, tensor products of twisted
factors and module structures.

Grammar (whitespace around separators is ignored):

    coordinate := INT | 'p' | 'p-' INT
    pair       := '(' coordinate ',' coordinate ')'
    exponent   := INT | VAR | VAR '+' INT        (VAR is 'i' or 'r')
    factor     := pair [ '^[' exponent ']' ]
    family     := factor { 'x' factor }
    label      := 'K' | pair | 'H0' pair
    value      := chain { '+' chain }
    chain      := label { '|' label }             (socle first)

Coordinates are read modulo p. The variable 'i' ranges over i >= 0,
'r' over r >= 1.
"""

from typing import Optional, Callable
from dataclasses import dataclass, field
import re

from sl3coh.models.weight import Weight, Decomposition
from sl3coh.models.module_expr import ModuleExpr


_COORD = re.compile(r"^(?:(?P<p>p)(?:\s*-\s*(?P<k>\d+))?|(?P<n>\d+))$")
_PAIR = re.compile(r"^\(\s*(?P<a>[^,()]+?)\s*,\s*(?P<b>[^,()]+?)\s*\)$")
_FACTOR = re.compile(
    r"^(?P<pair>\([^()]*\))\s*(?:\^\s*\[\s*(?P<exp>[^\[\]]+?)\s*\])?$"
)
_EXPONENT = re.compile(
    r"^(?:(?P<n>\d+)|(?P<var>[ir])(?:\s*\+\s*(?P<k>\d+))?)$"
)
_FACTOR_SEPARATOR = re.compile(r"\s+x\s+")

VARIABLE_MINIMUM = {"i": 0, "r": 1}


@dataclass(frozen=True)
class CoordToken:
    """
    Coordinate `coeff * p + const`, read modulo p.

    Keyword arguments:
    coeff -- multiple of p (0 or 1)
    const -- constant offset
    """

    coeff: int
    const: int

    @classmethod
    def parse(cls, text: str) -> "CoordToken":
        """Returns `CoordToken` parsed from `text`."""
        match = _COORD.match(text.strip())
        if match is None:
            raise ValueError(f"Unreadable coordinate '{text}'.")
        if match.group("n") is not None:
            return cls(0, int(match.group("n")))
        return cls(1, -int(match.group("k") or 0))

    def evaluate(self, p: int) -> int:
        """Returns the coordinate at `p`, read modulo `p`."""
        return (self.coeff * p + self.const) % p

    def __str__(self) -> str:
        if self.coeff == 0:
            return str(self.const)
        return "p" if self.const == 0 else f"p-{-self.const}"


@dataclass(frozen=True)
class PairPattern:
    """Pair of `CoordToken`s."""

    a: CoordToken
    b: CoordToken

    @classmethod
    def parse(cls, text: str) -> "PairPattern":
        """Returns `PairPattern` parsed from `text`."""
        match = _PAIR.match(text.strip())
        if match is None:
            raise ValueError(f"Unreadable weight pattern '{text}'.")
        return cls(
            CoordToken.parse(match.group("a")),
            CoordToken.parse(match.group("b")),
        )

    def evaluate(self, p: int) -> Weight:
        """Returns the restricted weight at `p`."""
        return Weight(self.a.evaluate(p), self.b.evaluate(p))

    def dual(self) -> "PairPattern":
        """Returns pattern with swapped coordinates."""
        return PairPattern(self.b, self.a)

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


@dataclass(frozen=True)
class Exponent:
    """
    Frobenius-twist exponent `variable + offset` (or constant if
    `variable` is `None`).
    """

    offset: int
    variable: Optional[str] = None

    @classmethod
    def parse(cls, text: Optional[str]) -> "Exponent":
        """Returns `Exponent` parsed from `text` (`None` means 0)."""
        if text is None:
            return cls(0)
        match = _EXPONENT.match(text.strip())
        if match is None:
            raise ValueError(f"Unreadable exponent '{text}'.")
        if match.group("n") is not None:
            return cls(int(match.group("n")))
        return cls(int(match.group("k") or 0), match.group("var"))

    def evaluate(self, value: Optional[int]) -> int:
        """Returns exponent for the given variable value."""
        if self.variable is None:
            return self.offset
        if value is None:
            raise ValueError(
                f"Exponent '{self}' requires a value for '{self.variable}'."
            )
        return value + self.offset

    def __str__(self) -> str:
        if self.variable is None:
            return str(self.offset)
        return self.variable + (f"+{self.offset}" if self.offset else "")


@dataclass(frozen=True)
class FactorPattern:
    """Twisted factor `pair^[exponent]`."""

    pair: PairPattern
    exponent: Exponent

    @classmethod
    def parse(cls, text: str) -> "FactorPattern":
        """Returns `FactorPattern` parsed from `text`."""
        match = _FACTOR.match(text.strip())
        if match is None:
            raise ValueError(f"Unreadable factor '{text}'.")
        return cls(
            PairPattern.parse(match.group("pair")),
            Exponent.parse(match.group("exp")),
        )

    def dual(self) -> "FactorPattern":
        """Returns factor with dualized pair."""
        return FactorPattern(self.pair.dual(), self.exponent)

    def __str__(self) -> str:
        if self.exponent.variable is None and self.exponent.offset == 0:
            return str(self.pair)
        return f"{self.pair}^[{self.exponent}]"


@dataclass(frozen=True)
class PatternInstance:
    """
    A family evaluated at a prime and a value of its free variable.

    Keyword arguments:
    value -- value of the free variable (`None` for fixed families)
    decomposition -- canonical decomposition of the instance
    collapsed -- whether some factor evaluated to (0,0)
    """

    value: Optional[int]
    decomposition: Decomposition
    collapsed: bool


@dataclass(frozen=True)
class FamilyPattern:
    """
    Parametrized tensor product of twisted factors.

    Keyword arguments:
    family_id -- identifier of the family
    factors -- factor patterns
    source -- text the family was read from
    """

    family_id: str
    factors: tuple[FactorPattern, ...]
    source: str
    _instances: dict = field(
        default_factory=dict, compare=False, hash=False, repr=False
    )

    def __post_init__(self):
        variables = {
            f.exponent.variable for f in self.factors
            if f.exponent.variable is not None
        }
        if len(variables) > 1:
            raise ValueError(
                f"Family '{self.source}' uses more than one free variable."
            )
        if len(set(f.exponent for f in self.factors)) != len(self.factors):
            raise ValueError(
                f"Family '{self.source}' repeats a twist exponent."
            )

    @classmethod
    def parse(cls, family_id: str, text: str) -> "FamilyPattern":
        """Returns `FamilyPattern` parsed from `text`."""
        return cls(
            family_id,
            tuple(
                FactorPattern.parse(part)
                for part in _FACTOR_SEPARATOR.split(text.strip())
            ),
            text.strip(),
        )

    @property
    def variable(self) -> Optional[str]:
        """Returns name of the free variable or `None`."""
        for factor in self.factors:
            if factor.exponent.variable is not None:
                return factor.exponent.variable
        return None

    @property
    def minimum(self) -> Optional[int]:
        """Returns smallest admissible value of the free variable."""
        if self.variable is None:
            return None
        return VARIABLE_MINIMUM[self.variable]

    def dual(self) -> "FamilyPattern":
        """Returns family with every factor dualized."""
        return FamilyPattern(
            self.family_id,
            tuple(f.dual() for f in self.factors),
            " x ".join(str(f.dual()) for f in self.factors),
        )

    def instantiate(self, p: int, value: Optional[int] = None) -> PatternInstance:
        """
        Returns the canonical instance at `p` and `value` of the free
        variable. Results are cached per family.
        """
        key = (p, value)
        if key not in self._instances:
            if self.variable is not None and (
                value is None or value < self.minimum
            ):
                raise ValueError(
                    f"Family '{self.source}' requires "
                    + f"{self.variable} >= {self.minimum}, got {value}."
                )
            placed = {}
            collapsed = False
            for factor in self.factors:
                exponent = factor.exponent.evaluate(
                    value if self.variable is not None else None
                )
                weight = factor.pair.evaluate(p)
                collapsed = collapsed or weight.zero
                placed[exponent] = weight
            digits = [
                placed.get(i, Weight(0, 0)) for i in range(max(placed) + 1)
            ]
            self._instances[key] = PatternInstance(
                value, Decomposition.from_digits(p, digits), collapsed
            )
        return self._instances[key]

    def match(self, dec: Decomposition) -> Optional[PatternInstance]:
        """
        Returns the instance equal to `dec` or `None`.

        The free variable is scanned from its minimum up to the length
        of `dec`; beyond that no non-collapsed instance fits.
        """
        if self.variable is None:
            instance = self.instantiate(dec.p)
            return instance if instance.decomposition == dec else None
        for value in range(
            self.minimum,
            self.minimum + dec.twist + len(dec.factors) + 1,
        ):
            instance = self.instantiate(dec.p, value)
            if instance.decomposition == dec:
                return instance
        return None

    def __str__(self) -> str:
        return " x ".join(str(f) for f in self.factors)


@dataclass(frozen=True)
class LabelPattern:
    """
    Label of a module structure: a simple module or the induced module
    `H0(pair)` (`induced` is `True`).
    """

    pair: PairPattern
    induced: bool = False

    @classmethod
    def parse(cls, text: str) -> "LabelPattern":
        """Returns `LabelPattern` parsed from `text`."""
        text = text.strip()
        if text == "K":
            return cls(PairPattern(CoordToken(0, 0), CoordToken(0, 0)))
        if text.startswith("H0"):
            return cls(PairPattern.parse(text[2:]), True)
        return cls(PairPattern.parse(text))


@dataclass(frozen=True)
class ValuePattern:
    """Direct sum of chains of `LabelPattern`s (socle first)."""

    summands: tuple[tuple[LabelPattern, ...], ...]
    source: str

    @classmethod
    def parse(cls, text: str) -> "ValuePattern":
        """Returns `ValuePattern` parsed from `text`."""
        summands = tuple(
            tuple(LabelPattern.parse(label) for label in chain.split("|"))
            for chain in text.split("+")
        )
        for chain in summands:
            if len(chain) > 1 and any(label.induced for label in chain):
                raise ValueError(
                    f"Induced module inside a chain in '{text}'."
                )
        return cls(summands, text.strip())

    def evaluate(
        self, p: int, induced: Callable[[int, Weight], ModuleExpr]
    ) -> ModuleExpr:
        """
        Returns `ModuleExpr` at `p`; induced labels are expanded via
        `induced`.
        """
        parts = []
        for chain in self.summands:
            if chain[0].induced:
                parts.append(induced(p, chain[0].pair.evaluate(p)))
            else:
                parts.append(
                    ModuleExpr.chain(*(label.pair.evaluate(p) for label in chain))
                )
        return ModuleExpr.direct_sum(parts)

"""
ModuleExpr data-model definition
"""

from typing import Iterable
from dataclasses import dataclass

from dcm_common.models import DataModel

from sl3coh.models.weight import Weight, ZERO


Chain = tuple[Weight, ...]


@dataclass(frozen=True)
class ModuleExpr(DataModel):
    """
    Formal direct sum of uniserial chains of simple labels.

    Chains are listed socle-first. The zero module has no summands.
    Summand order carries no meaning; summands are kept sorted so that
    equality compares multisets.

    Keyword arguments:
    summands -- uniserial chains
                (default ())
    """

    summands: tuple[Chain, ...] = ()

    def __post_init__(self):
        chains = tuple(sorted(tuple(chain) for chain in self.summands))
        if any(len(chain) == 0 for chain in chains):
            raise ValueError("Chains of a module expression must not be empty.")
        object.__setattr__(self, "summands", chains)

    @DataModel.serialization_handler("summands")
    @classmethod
    def summands_serialization(cls, value):
        """Performs `summands`-serialization."""
        return [[label.json for label in chain] for chain in value]

    @DataModel.deserialization_handler("summands")
    @classmethod
    def summands_deserialization(cls, value):
        """Performs `summands`-deserialization."""
        return tuple(
            tuple(Weight.from_json(label) for label in chain)
            for chain in value
        )

    @classmethod
    def simple(cls, label: Weight) -> "ModuleExpr":
        """Returns the simple module `label`."""
        return cls(((label,),))

    @classmethod
    def chain(cls, *labels: Weight) -> "ModuleExpr":
        """Returns a single uniserial chain (socle first)."""
        return cls((tuple(labels),))

    @classmethod
    def trivial(cls) -> "ModuleExpr":
        """Returns the trivial module K."""
        return cls.simple(ZERO)

    @classmethod
    def direct_sum(cls, parts: Iterable["ModuleExpr"]) -> "ModuleExpr":
        """Returns the direct sum of `parts`."""
        return cls(tuple(chain for part in parts for chain in part.summands))

    def __add__(self, other: "ModuleExpr") -> "ModuleExpr":
        return ModuleExpr(self.summands + other.summands)

    @property
    def is_zero(self) -> bool:
        """Returns `True` for the zero module."""
        return len(self.summands) == 0

    @property
    def semisimple(self) -> bool:
        """Returns `True` if every chain has length one."""
        return all(len(chain) == 1 for chain in self.summands)

    def dual(self) -> "ModuleExpr":
        """
        Returns the dual expression: chains are reversed and labels are
        dualized.
        """
        return ModuleExpr(
            tuple(
                tuple(label.dual() for label in reversed(chain))
                for chain in self.summands
            )
        )

    def head(self) -> list[Weight]:
        """Returns head as sorted multiset (last label of each chain)."""
        return sorted(chain[-1] for chain in self.summands)

    def socle(self) -> list[Weight]:
        """Returns socle as sorted multiset (first label of each chain)."""
        return sorted(chain[0] for chain in self.summands)

    def hom_to_simple(self, s: Weight) -> int:
        """
        Returns the dimension of homomorphisms from `self` onto the
        simple module `s`, that is the multiplicity of `s` in the head.
        """
        if not s.dominant:
            raise ValueError(f"Weight {s} is not dominant.")
        return sum(1 for label in self.head() if label == s)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return " + ".join(
            "|".join(
                "K" if label.zero else str(label) for label in chain
            )
            for chain in self.summands
        )


def dualize(m: ModuleExpr) -> ModuleExpr:
    """Returns `m.dual()`."""
    return m.dual()


def head(m: ModuleExpr) -> list[Weight]:
    """Returns `m.head()`."""
    return m.head()


def hom_to_simple(m: ModuleExpr, s: Weight) -> int:
    """Returns `m.hom_to_simple(s)`."""
    return m.hom_to_simple(s)

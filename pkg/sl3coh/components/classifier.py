"""
This module defines the `H2Classifier` component.
"""

from dcm_common import LoggingContext as Context, Logger

from sl3coh.models import (
    Weight, Decomposition, FamilyPattern, PatternMatch, Classification,
    InstantiatedPattern,
)
from sl3coh.weight_lattice import (
    check_prime, check_dominant, check_guard, steinberg_decompose,
)


class H2Classifier:
    """
    An `H2Classifier` decides H^2(G, L(w)) by matching the canonical
    decomposition of `w` against the families of simple modules with
    non-vanishing H^2, their duals and Frobenius twists. Coordinates
    of the families are read modulo p; factors reading (0,0) are
    dropped before matching.

    Keyword arguments:
    families -- families of non-vanishing H^2
    max_digits -- guard for the number of base-p digits
                  (default 64)
    """
    TAG: str = "H2 Classifier"

    def __init__(
        self, families: list[FamilyPattern], max_digits: int = 64
    ) -> None:
        self.log = Logger(default_origin=self.TAG)
        self.max_digits = max_digits
        self.variants: list[tuple[FamilyPattern, bool]] = []
        for family in families:
            self.variants.append((family, False))
            self.variants.append((family.dual(), True))
        # per prime: largest free index indexed so far, seen instances and
        # the index of instances by factors
        self._indexed: dict[int, int] = {}
        self._seen: dict[int, set] = {}
        self._index: dict[int, dict[tuple[Weight, ...], list]] = {}

    @staticmethod
    def _values(family: FamilyPattern, start: int, stop: int) -> list:
        if family.variable is None:
            return [None] if start <= 1 else []
        return list(range(max(start, family.minimum), stop + 1))

    def _instances(
        self, p: int, start: int, stop: int
    ) -> list[InstantiatedPattern]:
        result = []
        for family, dual in self.variants:
            for value in self._values(family, start, stop):
                instance = family.instantiate(p, value)
                result.append(
                    InstantiatedPattern(
                        int(family.family_id), value, dual,
                        instance.collapsed, instance.decomposition,
                    )
                )
        return result

    def instantiate_patterns(
        self, p: int, max_r: int
    ) -> list[InstantiatedPattern]:
        """
        Returns every family instantiated at `p` for r = 1..`max_r`
        (fixed families once), both dual variants, canonicalized.

        Keyword arguments:
        p -- characteristic
        max_r -- largest value of the free index
        """
        check_prime(p)
        if max_r < 1:
            raise ValueError(f"Largest free index must be positive, got {max_r}.")
        return sorted(
            self._instances(p, 1, max_r),
            key=lambda i: (i.pattern_id, i.dual, i.r or 0),
        )

    def _extend_index(self, p: int, max_r: int) -> None:
        start = self._indexed.get(p, 0) + 1
        if start > max_r:
            return
        seen = self._seen.setdefault(p, set())
        index = self._index.setdefault(p, {})
        for instance in sorted(
            self._instances(p, start, max_r),
            key=lambda i: (i.r or 0, i.dual, i.pattern_id),
        ):
            key = (instance.pattern_id, instance.decomposition)
            if instance.zero or key in seen:
                continue
            seen.add(key)
            index.setdefault(instance.decomposition.factors, []).append(
                instance
            )
        self._indexed[p] = max_r
        self.log.log(
            Context.INFO,
            body=f"Indexed family instances for p={p} up to r={max_r}."
        )

    def classify_decomposition(self, dec: Decomposition) -> Classification:
        """
        Returns `Classification` of a canonical decomposition. A match
        with an instance of twist t reports the overall twist
        d = `dec.twist` - t.
        """
        self._extend_index(dec.p, dec.twist + len(dec.factors) + 1)
        matches = sorted(
            PatternMatch(
                instance.pattern_id,
                instance.r,
                dec.twist - instance.decomposition.twist,
                instance.dual,
                instance.collapsed,
            )
            for instance in self._index[dec.p].get(dec.factors, [])
            if instance.decomposition.twist <= dec.twist
        )
        return Classification(dec.p, dec.weight(), matches)

    def classify(self, p: int, w: Weight) -> Classification:
        """
        Returns `Classification` of the simple module with highest
        weight `w`.

        Keyword arguments:
        p -- characteristic
        w -- dominant weight
        """
        check_prime(p)
        check_dominant(w)
        check_guard(p, w, self.max_digits)
        return self.classify_decomposition(steinberg_decompose(p, w))

"""
The Weyl group of type A2 with its dot action, and G- and G1-linkage of
weights to the zero weight.
"""

from dataclasses import dataclass
from functools import reduce
from typing import Callable

import numpy as np

from sl3coh.models import Weight, ZERO
from sl3coh.weight_lattice import (
    check_restricted, in_p_scaled_root_lattice,
)


RHO = Weight(1, 1)

# simple reflections acting on fundamental-weight coordinates
REFLECTIONS = {
    "alpha": np.array([[-1, 0], [1, 1]], dtype=object),
    "beta": np.array([[1, 1], [0, -1]], dtype=object),
}


@dataclass(frozen=True)
class WeylElement:
    """
    Element of the Weyl group of A2.

    Keyword arguments:
    name -- one of 'e', 's_alpha', 's_beta', 's_beta_alpha',
            's_alpha_beta', 'w0'
    length -- Coxeter length
    word -- reduced word in the simple reflections; the rightmost
            letter acts first
    """

    name: str
    length: int
    word: tuple[str, ...]

    @property
    def matrix(self) -> np.ndarray:
        """Returns the integer matrix of the linear action."""
        return reduce(
            np.matmul,
            (REFLECTIONS[letter] for letter in self.word),
            np.identity(2, dtype=int).astype(object),
        )

    def __str__(self) -> str:
        return self.name


E = WeylElement("e", 0, ())
S_ALPHA = WeylElement("s_alpha", 1, ("alpha",))
S_BETA = WeylElement("s_beta", 1, ("beta",))
S_BETA_ALPHA = WeylElement("s_beta_alpha", 2, ("beta", "alpha"))
S_ALPHA_BETA = WeylElement("s_alpha_beta", 2, ("alpha", "beta"))
W0 = WeylElement("w0", 3, ("alpha", "beta", "alpha"))

WEYL_GROUP = (E, S_ALPHA, S_BETA, S_BETA_ALPHA, S_ALPHA_BETA, W0)

# closed forms of w . (a, b); the longest element swaps and negates
# shifted coordinates, (-b-2, -a-2)
_CLOSED_FORMS: dict[str, Callable[[int, int], tuple[int, int]]] = {
    "e": lambda a, b: (a, b),
    "s_alpha": lambda a, b: (-a - 2, a + b + 1),
    "s_beta": lambda a, b: (a + b + 1, -b - 2),
    "s_beta_alpha": lambda a, b: (b, -a - b - 3),
    "s_alpha_beta": lambda a, b: (-a - b - 3, a),
    "w0": lambda a, b: (-b - 2, -a - 2),
}


def element(name: str) -> WeylElement:
    """Returns the `WeylElement` called `name`."""
    for w in WEYL_GROUP:
        if w.name == name:
            return w
    raise ValueError(f"Unknown Weyl group element '{name}'.")


def dot_action(w: WeylElement, lam: Weight) -> Weight:
    """Returns `w . lam` from the closed forms."""
    return Weight(*_CLOSED_FORMS[w.name](lam.a, lam.b))


def dot_action_matrix(w: WeylElement, lam: Weight) -> Weight:
    """Returns `w(lam + rho) - rho` computed with reflection matrices."""
    shifted = w.matrix.dot(np.array([lam.a + RHO.a, lam.b + RHO.b], dtype=object))
    return Weight(int(shifted[0]) - RHO.a, int(shifted[1]) - RHO.b)


def linkage_witnesses(p: int, lam: Weight) -> list[WeylElement]:
    """
    Returns all `w` such that `lam - w . 0` lies in p times the root
    lattice.
    """
    return [
        w for w in WEYL_GROUP
        if in_p_scaled_root_lattice(p, lam - dot_action(w, ZERO))
    ]


def g_linked_to_zero(p: int, lam: Weight) -> bool:
    """Returns `True` if `lam` lies in the affine dot orbit of (0,0)."""
    return len(linkage_witnesses(p, lam)) > 0


def g1_linked_residue(p: int, lam: Weight) -> bool:
    """
    Returns `True` if `lam` is congruent modulo `p` to `w . 0` for
    some `w`.
    """
    for w in WEYL_GROUP:
        orbit = dot_action(w, ZERO)
        if (lam.a - orbit.a) % p == 0 and (lam.b - orbit.b) % p == 0:
            return True
    return False


def g1_linked_restricted(p: int, lam0: Weight) -> bool:
    """
    Returns `True` if the restricted weight `lam0` is G1-linked to
    (0,0).
    """
    check_restricted(p, lam0)
    return g1_linked_residue(p, lam0)


def enumerate_g1_linked(p: int) -> set[Weight]:
    """Returns all restricted weights G1-linked to (0,0)."""
    return {
        Weight(orbit.a % p, orbit.b % p)
        for orbit in (dot_action(w, ZERO) for w in WEYL_GROUP)
    }

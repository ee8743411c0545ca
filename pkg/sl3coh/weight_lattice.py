"""
Exact arithmetic on the SL3 weight lattice (fundamental-weight basis):
base-p digits, canonical Steinberg decompositions, duality, twisting
and root-lattice membership.

Python integers are unbounded; `check_guard` bounds the number of
base-p digits accepted by the engines instead.
"""

from sympy import isprime
from sympy.ntheory import digits as base_digits

from sl3coh.models import Weight, Decomposition


def check_prime(p: int) -> None:
    """Raises `ValueError` if `p` is not a prime number."""
    if isinstance(p, bool) or not isinstance(p, int) or not isprime(p):
        raise ValueError(f"Characteristic '{p}' is not a prime.")


def check_dominant(w: Weight) -> None:
    """Raises `ValueError` if `w` has a negative coordinate."""
    if not w.dominant:
        raise ValueError(f"Weight {w} is not dominant.")


def check_restricted(p: int, w: Weight) -> None:
    """Raises `ValueError` if `w` is not restricted for `p`."""
    if not w.restricted(p):
        raise ValueError(f"Weight {w} is not restricted for p={p}.")


def check_guard(p: int, w: Weight, max_digits: int) -> None:
    """
    Raises `ValueError` if a coordinate of `w` needs more than
    `max_digits` base-`p` digits.
    """
    bound = p**max_digits
    if w.a >= bound or w.b >= bound:
        raise ValueError(
            f"Weight {w} exceeds the guard of {max_digits} base-{p} digits."
        )


def _expand(n: int, p: int) -> list[int]:
    # sympy lists the base followed by the digits, most significant first
    return list(reversed(base_digits(n, p)[1:]))


def padic_expand(p: int, w: Weight) -> list[Weight]:
    """
    Returns the base-`p` digit pairs of the dominant weight `w`, least
    significant first. The zero weight yields `[(0,0)]`.

    Keyword arguments:
    p -- characteristic
    w -- dominant weight
    """
    check_prime(p)
    check_dominant(w)
    a_digits = _expand(w.a, p)
    b_digits = _expand(w.b, p)
    length = max(len(a_digits), len(b_digits))
    a_digits += [0] * (length - len(a_digits))
    b_digits += [0] * (length - len(b_digits))
    return [Weight(a, b) for a, b in zip(a_digits, b_digits)]


def steinberg_decompose(p: int, w: Weight) -> Decomposition:
    """Returns the canonical `Decomposition` of the dominant weight `w`."""
    return Decomposition.from_digits(p, padic_expand(p, w))


def recompose(dec: Decomposition) -> Weight:
    """Returns the weight sum of p^(twist+i) * factors[i]."""
    return dec.weight()


def dual(w: Weight) -> Weight:
    """Returns `(b, a)`."""
    return w.dual()


def twist(p: int, w: Weight, d: int = 1) -> Weight:
    """Returns the weight of the `d`-th Frobenius twist of `w`."""
    if d < 0:
        raise ValueError(f"Twist must be non-negative, got {d}.")
    return w.scaled(p**d)


def is_restricted(p: int, w: Weight) -> bool:
    """Returns `True` if `0 <= a, b < p`."""
    return w.restricted(p)


def in_root_lattice(w: Weight) -> bool:
    """
    Returns `True` if `w` lies in the span of the simple roots (2,-1)
    and (-1,2), that is a = b modulo 3.
    """
    return (w.a - w.b) % 3 == 0


def in_p_scaled_root_lattice(p: int, w: Weight) -> bool:
    """Returns `True` if `w` is `p` times a root-lattice element."""
    if w.a % p or w.b % p:
        return False
    return in_root_lattice(Weight(w.a // p, w.b // p))

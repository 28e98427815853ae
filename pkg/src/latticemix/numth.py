"""Extended Euclid, modular inverses and the two-modulus Chinese remainder solve."""

from __future__ import annotations

import math
from typing import NamedTuple


class BezoutResult(NamedTuple):
    g: int
    a: int
    b: int


class CongruenceSystem(NamedTuple):
    """c = r2 (mod m2) and c = r3 (mod m3)."""

    r2: int
    m2: int
    r3: int
    m3: int

    @property
    def solvable(self) -> bool:
        return (self.r2 - self.r3) % math.gcd(self.m2, self.m3) == 0


def gcd_ext(x: int, y: int) -> BezoutResult:
    """Return (g, a, b) with a*x + b*y = g = gcd(x, y) > 0.

    The coefficient a is the representative of smallest absolute value
    (ties go to a >= 0), which makes every downstream witness reproducible.
    """
    if x == 0 and y == 0:
        raise ValueError("gcd_ext(0, 0) is undefined")
    old_r, r = x, y
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    g, a = old_r, old_s
    if g < 0:
        g, a = -g, -a
    step = abs(y) // g
    if step == 0:
        return BezoutResult(g, a, 0)
    a %= step
    if 2 * a > step:
        a -= step
    b = (g - a * x) // y
    assert a * x + b * y == g
    return BezoutResult(g, a, b)


def mod_inverse(u: int, m: int) -> int:
    """Inverse of u modulo m, in [0, m)."""
    if m <= 0:
        raise ValueError("modulus must be positive")
    if math.gcd(u, m) != 1:
        raise ValueError(f"{u} is not invertible modulo {m}")
    if m == 1:
        return 0
    return pow(u, -1, m)


def crt_pair(sys: CongruenceSystem) -> int:
    """Smallest non-negative c solving both congruences of ``sys``.

    Moduli need not be coprime; the system is solvable exactly when the
    residues agree modulo gcd(m2, m3), and the answer is unique modulo the lcm.
    """
    r2, m2, r3, m3 = sys
    if m2 <= 0 or m3 <= 0:
        raise ValueError("moduli must be positive")
    g = math.gcd(m2, m3)
    if (r3 - r2) % g:
        raise ValueError(f"incompatible congruences: {r2} mod {m2} and {r3} mod {m3}")
    lcm = m2 // g * m3
    # c = r2 + m2*k with m2*k = r3 - r2 (mod m3)
    k = ((r3 - r2) // g) * mod_inverse((m2 // g) % (m3 // g), m3 // g) % (m3 // g)
    return (r2 + m2 * k) % lcm

"""Monotone embedding of a network without negative loops into 2n components.

A host state is the concatenation ``(x, y)``: components ``1..n`` come from
``x`` and ``n+1..2n`` from ``y``. The mirror set is ``{(x, not x)}``; the
original dynamics of ``f`` is simulated there, two host steps per step.
"""

from __future__ import annotations

import enum

import numpy as np

from .netcore import (
    MAX_N,
    BooleanNetwork,
    Configuration,
    DimensionError,
    SizeError,
    has_negative_loop,
    popcounts,
)


class HypothesisError(ValueError):
    """The input network has a negative loop."""


class Layer(enum.Enum):
    BELOW = "below"
    A = "A"
    B = "B"
    C = "C"
    ABOVE = "above"


def pair_weight(x: Configuration, y: Configuration) -> int:
    if x.n != y.n:
        raise DimensionError(f"n={x.n} vs n={y.n}")
    return x.weight + y.weight


def _halves(z: Configuration, n: int | None) -> tuple[Configuration, Configuration]:
    if n is not None and z.n != 2 * n:
        raise DimensionError(f"expected a pair configuration on {2 * n} components, got {z.n}")
    return z.split()


def in_omega(z: Configuration, n: int | None = None) -> bool:
    x, y = _halves(z, n)
    return y == x.complement()


def mirror(x: Configuration) -> Configuration:
    """The pair ``(x, not x)``."""
    return x.concat(x.complement())


def layer(z: Configuration, n: int | None = None) -> Layer:
    x, y = _halves(z, n)
    w, h = pair_weight(x, y), x.n
    if w <= h - 2:
        return Layer.BELOW
    if w >= h + 2:
        return Layer.ABOVE
    return (Layer.A, Layer.B, Layer.C)[w - h + 1]


def embed(f: BooleanNetwork, force: bool = False) -> BooleanNetwork:
    """The 2n-component network ``f'``.

    For ``i <= n`` the output ``f'_i(x, y)`` is, first matching case wins:

    1. ``f_i(x)`` if ``y == not x`` or ``y`` with component ``i`` switched equals ``not x``
    2. ``not x_i`` if ``w(x, y) == n`` (and ``y != not x``)
    3. ``1`` if ``w(x, y) == n + 1`` (and case 1 failed)
    4. ``0`` if ``w(x, y) == n - 1`` (and case 1 failed)
    5. ``1`` if ``w(x, y) >= n + 2``
    6. ``0`` if ``w(x, y) <= n - 2``

    and ``f'_{n+i}(x, y) = not f'_i(not y, not x)``.

    Raises ``HypothesisError`` if ``f`` has a negative loop unless ``force`` is
    set; in that case the result need not be monotone.
    """
    n = f.n
    if 2 * n > MAX_N:
        raise SizeError(f"host would have {2 * n} components (cap {MAX_N})")
    if not force and has_negative_loop(f):
        raise HypothesisError("the interaction graph has a negative loop")

    mask = (1 << n) - 1
    z = np.arange(1 << (2 * n), dtype=np.int64)
    x = z & mask
    y = z >> n
    xbar = x ^ mask
    w = popcounts(2 * n)
    on_mirror = y == xbar

    first = np.zeros((n, z.size), dtype=np.uint8)
    for i in range(n):
        bit = 1 << i
        near = (y ^ bit) == xbar
        case1 = on_mirror | near
        out = np.where(w >= n + 1, 1, 0).astype(np.uint8)  # cases 3, 5 vs 4, 6
        out[w == n] = (((x[w == n] >> i) & 1) ^ 1).astype(np.uint8)  # case 2
        out[case1] = f.tables[i][x[case1]]
        first[i] = out

    # (not y, not x) as a host index
    swapped = (y ^ mask) | ((x ^ mask) << n)
    second = 1 - first[:, swapped]
    return BooleanNetwork(2 * n, np.vstack([first, second]))


def mirror_identity_check(fprime: BooleanNetwork) -> bool:
    """Whether ``f'_i(x, y) == not f'_{n+i}(not y, not x)`` for all ``i <= n`` and all ``(x, y)``."""
    if fprime.n % 2:
        return False
    n = fprime.n // 2
    mask = (1 << n) - 1
    z = np.arange(1 << fprime.n, dtype=np.int64)
    x, y = z & mask, z >> n
    swapped = (y ^ mask) | ((x ^ mask) << n)
    t = fprime.tables
    return bool(np.all(t[:n] == 1 - t[n:, swapped]))


def applicable_cases(f: BooleanNetwork, i: int, x: Configuration, y: Configuration) -> dict[int, int]:
    """Every case of the definition of ``f'_i`` whose condition holds at ``(x, y)``, with its value.

    Evaluated literally from the conditions, without the first-match rule; used
    to audit that overlapping cases never disagree. ``i`` is 1-based, ``i <= n``.
    """
    n = f.n
    w = pair_weight(x, y)
    xbar = x.complement()
    near = y.flip(i) == xbar
    cases = {}
    if y == xbar or near:
        cases[1] = f.tables[i - 1][x.bits].item()
    if w == n and y != xbar:
        cases[2] = 1 - x[i]
    if w == n + 1 and not near:
        cases[3] = 1
    if w == n - 1 and not near:
        cases[4] = 0
    if w >= n + 2:
        cases[5] = 1
    if w <= n - 2:
        cases[6] = 0
    return cases

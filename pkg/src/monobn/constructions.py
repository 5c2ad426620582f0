"""Witness networks and seeded random generators.

All generators draw from ``numpy.random.default_rng(seed)`` (PCG64), so a given
``(n, seed)`` always yields the same network with a given numpy version.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .netcore import BooleanNetwork, Configuration, SizeError
from .embedmono import embed, mirror

GRAY_CAP = 20
WITNESS_CAP = 10
RANDOM_CAP = 12


def _cap(n: int, cap: int) -> None:
    if not 1 <= n <= cap:
        raise SizeError(f"n={n} outside 1..{cap}")


def gray_word(n: int, k: int) -> Configuration:
    """Word ``k`` (1-based) of the reflected binary Gray code on ``n`` components.

    Component 1 is the most significant Gray digit, so literals read in the
    familiar order ``00, 01, 11, 10`` for ``n = 2``.
    """
    g = (k - 1) ^ ((k - 1) >> 1)
    bits = 0
    for c in range(n):
        if (g >> (n - 1 - c)) & 1:
            bits |= 1 << c
    return Configuration(n, bits)


def gray_sequence(n: int) -> list[Configuration]:
    return [gray_word(n, k) for k in range(1, (1 << n) + 1)]


def gray_schedule(n: int) -> list[int]:
    """Components switched between consecutive Gray words (1-based)."""
    seq = gray_sequence(n)
    return [(a.bits ^ b.bits).bit_length() for a, b in zip(seq, seq[1:])]


@dataclass(frozen=True)
class GrayWitness:
    network: BooleanNetwork
    start: Configuration
    end: Configuration


@dataclass(frozen=True)
class DiameterWitness:
    network: BooleanNetwork
    start: Configuration
    end: Configuration
    claimed_distance: int

    @property
    def bound(self) -> int:
        """``2 ** (m / 2)`` for the host component count ``m``."""
        return 1 << (self.network.n // 2)

    @property
    def margin(self) -> int:
        return self.claimed_distance - self.bound


def gray_code_network(n: int) -> GrayWitness:
    """Network sending every Gray word to the next one and fixing the last word."""
    _cap(n, GRAY_CAP)
    seq = np.array([c.bits for c in gray_sequence(n)], dtype=np.int64)
    image = np.empty(1 << n, dtype=np.int64)
    image[seq[:-1]] = seq[1:]
    image[seq[-1]] = seq[-1]
    f = BooleanNetwork.from_image(n, image)
    return GrayWitness(f, Configuration(n, int(seq[0])), Configuration(n, int(seq[-1])))


def exp_diameter_monotone(n: int) -> DiameterWitness:
    _cap(n, WITNESS_CAP)
    g = gray_code_network(n)
    return DiameterWitness(
        network=embed(g.network),
        start=mirror(g.start),
        end=mirror(g.end),
        claimed_distance=2 * ((1 << n) - 1),
    )


def _bits(n: int, seed: int, density: float = 0.5) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return (rng.random((n, 1 << n)) < density).astype(np.uint8)


def random_network(n: int, seed: int) -> BooleanNetwork:
    """Every truth-table bit independent and uniform."""
    _cap(n, RANDOM_CAP)
    rng = np.random.default_rng(seed)
    return BooleanNetwork(n, rng.integers(0, 2, size=(n, 1 << n), dtype=np.uint8))


def remove_negative_loops(f: BooleanNetwork) -> BooleanNetwork:
    """Single repair pass over the pairs ``{x, x + e_i}`` with ``x_i = 0``.

    Whenever both ``x`` and ``x + e_i`` are unstable in component ``i`` (they
    would switch into each other), the upper state is made stable in ``i``.
    """
    t = f.tables.copy()
    states = np.arange(1 << f.n)
    for i in range(f.n):
        lower = states[(states >> i) & 1 == 0]
        upper = lower | (1 << i)
        bad = (t[i, lower] == 1) & (t[i, upper] == 0)
        t[i, upper[bad]] = 1
    return BooleanNetwork(f.n, t)


def random_no_negative_loop(n: int, seed: int) -> BooleanNetwork:
    return remove_negative_loops(random_network(n, seed))


def upward_closure(g: BooleanNetwork) -> BooleanNetwork:
    """``f_i(x) = 1`` iff ``g_i(y) = 1`` for some ``y <= x``."""
    t = g.tables.copy()
    states = np.arange(1 << g.n)
    for b in range(g.n):
        lower = states[(states >> b) & 1 == 0]
        t[:, lower | (1 << b)] |= t[:, lower]
    return BooleanNetwork(g.n, t)


def random_monotone(n: int, seed: int, density: float | None = None) -> BooleanNetwork:
    """Upward closure of a random network.

    With the default uniform bits the closure is nearly constant for moderate
    ``n``; a small ``density`` (probability of a 1 bit before closure) gives
    more varied monotone networks.
    """
    _cap(n, RANDOM_CAP)
    if density is None:
        return upward_closure(random_network(n, seed))
    return upward_closure(BooleanNetwork(n, _bits(n, seed, density)))


def random_acyclic(n: int, seed: int) -> BooleanNetwork:
    """Random network whose interaction graph is acyclic.

    A random permutation fixes a topological order and each component only
    reads the components placed before it.
    """
    _cap(n, RANDOM_CAP)
    rng = np.random.default_rng(seed)
    order = rng.permutation(n)
    raw = rng.integers(0, 2, size=(n, 1 << n), dtype=np.uint8)
    states = np.arange(1 << n)
    t = np.empty_like(raw)
    for rank, comp in enumerate(order):
        readable = 0
        for earlier in order[:rank]:
            readable |= 1 << int(earlier)
        t[comp] = raw[comp][states & readable]
    return BooleanNetwork(n, t)

"""Configurations, Boolean networks as truth tables, and signed interaction graphs.

Encoding used everywhere in the package: component ``i`` (1-based, as in the
usual mathematical notation) lives at bit ``i - 1`` of an integer, and the
truth table of a component is indexed by that little-endian integer.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

MAX_N = 24


class DimensionError(ValueError):
    """Two objects that must share a component count do not."""


class SizeError(ValueError):
    """A size cap was exceeded."""


def _check_n(n: int, cap: int = MAX_N) -> None:
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise DimensionError(f"component count must be a positive integer, got {n!r}")
    if n > cap:
        raise SizeError(f"n={n} exceeds the cap of {cap}")


@dataclass(frozen=True)
class Configuration:
    """One state of an ``n``-component network, stored as an integer bitmask."""

    n: int
    bits: int

    def __post_init__(self):
        _check_n(self.n)
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError(f"bits={self.bits} out of range for n={self.n}")

    @classmethod
    def from_literal(cls, text: str) -> "Configuration":
        """Parse a literal such as ``"01"``; component 1 is the leftmost character."""
        if not text or any(c not in "01" for c in text):
            raise ValueError(f"not a configuration literal: {text!r}")
        bits = sum(1 << k for k, c in enumerate(text) if c == "1")
        return cls(len(text), bits)

    @classmethod
    def from_tuple(cls, values: Sequence[int]) -> "Configuration":
        bits = 0
        for k, v in enumerate(values):
            if v not in (0, 1):
                raise ValueError(f"component values must be 0 or 1, got {v!r}")
            bits |= v << k
        return cls(len(values), bits)

    @property
    def literal(self) -> str:
        return "".join("1" if (self.bits >> k) & 1 else "0" for k in range(self.n))

    def __str__(self):
        return self.literal

    def __getitem__(self, i: int) -> int:
        """Value of component ``i`` (1-based)."""
        if not 1 <= i <= self.n:
            raise IndexError(i)
        return (self.bits >> (i - 1)) & 1

    def as_tuple(self) -> tuple[int, ...]:
        return tuple((self.bits >> k) & 1 for k in range(self.n))

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def complement(self) -> "Configuration":
        return Configuration(self.n, self.bits ^ ((1 << self.n) - 1))

    def flip(self, i: int) -> "Configuration":
        """Switch component ``i`` (1-based)."""
        if not 1 <= i <= self.n:
            raise IndexError(i)
        return Configuration(self.n, self.bits ^ (1 << (i - 1)))

    def hamming(self, other: "Configuration") -> int:
        if other.n != self.n:
            raise DimensionError(f"n={self.n} vs n={other.n}")
        return (self.bits ^ other.bits).bit_count()

    def concat(self, other: "Configuration") -> "Configuration":
        """The configuration ``(self, other)`` on ``self.n + other.n`` components."""
        return Configuration(self.n + other.n, self.bits | (other.bits << self.n))

    def split(self) -> tuple["Configuration", "Configuration"]:
        if self.n % 2:
            raise DimensionError(f"cannot split an odd configuration (n={self.n})")
        h = self.n // 2
        return Configuration(h, self.bits & ((1 << h) - 1)), Configuration(h, self.bits >> h)

    def leq(self, other: "Configuration") -> bool:
        """Componentwise order: ``x_i <= y_i`` for every ``i``."""
        if other.n != self.n:
            raise DimensionError(f"n={self.n} vs n={other.n}")
        return self.bits & ~other.bits == 0


def all_configurations(n: int) -> Iterator[Configuration]:
    for b in range(1 << n):
        yield Configuration(n, b)


def popcounts(n: int) -> np.ndarray:
    """Weights of every state ``0 .. 2**n - 1``."""
    return np.bitwise_count(np.arange(1 << n, dtype=np.int64)).astype(np.int64)


class BooleanNetwork:
    """An ``n``-component network ``f`` given by one truth table per component.

    ``tables[i - 1][k]`` is ``f_i`` applied to the state whose integer encoding
    is ``k``. The object is immutable; the tables are read-only arrays.
    """

    __slots__ = ("n", "tables", "_image", "_hash")

    def __init__(self, n: int, tables):
        _check_n(n)
        arr = np.array(tables, dtype=np.uint8)
        if arr.shape != (n, 1 << n):
            raise DimensionError(f"expected {n} tables of length {1 << n}, got shape {arr.shape}")
        if arr.size and arr.max() > 1:
            raise ValueError("truth tables must contain only 0 and 1")
        arr.setflags(write=False)
        image = np.zeros(1 << n, dtype=np.int64)
        for k in range(n):
            image |= arr[k].astype(np.int64) << k
        image.setflags(write=False)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "tables", arr)
        object.__setattr__(self, "_image", image)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("BooleanNetwork is immutable")

    @classmethod
    def from_image(cls, n: int, image) -> "BooleanNetwork":
        """Build from the array of integer-encoded outputs ``f(k)`` for every ``k``."""
        image = np.asarray(image, dtype=np.int64)
        if image.shape != (1 << n,):
            raise DimensionError(f"image must have length {1 << n}")
        return cls(n, [(image >> k) & 1 for k in range(n)])

    @classmethod
    def from_function(cls, n: int, func) -> "BooleanNetwork":
        """Tabulate ``func``, which maps a tuple of n bits to a sequence of n bits."""
        tables = np.zeros((n, 1 << n), dtype=np.uint8)
        for b in range(1 << n):
            x = tuple((b >> k) & 1 for k in range(n))
            out = tuple(func(x))
            if len(out) != n:
                raise DimensionError(f"function returned {len(out)} components, expected {n}")
            tables[:, b] = out
        return cls(n, tables)

    @classmethod
    def identity(cls, n: int) -> "BooleanNetwork":
        return cls.from_image(n, np.arange(1 << n))

    @classmethod
    def constant(cls, n: int, value: int | Configuration = 0) -> "BooleanNetwork":
        bits = value.bits if isinstance(value, Configuration) else value
        return cls.from_image(n, np.full(1 << n, bits, dtype=np.int64))

    @property
    def image(self) -> np.ndarray:
        """Read-only array whose entry ``k`` is the integer encoding of ``f(k)``."""
        return self._image

    def __call__(self, x: Configuration) -> Configuration:
        return evaluate(self, x)

    def __eq__(self, other):
        if not isinstance(other, BooleanNetwork):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.tables, other.tables)

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.n, self.tables.tobytes())))
        return self._hash

    def __repr__(self):
        return f"BooleanNetwork(n={self.n})"


def evaluate(f: BooleanNetwork, x: Configuration) -> Configuration:
    if x.n != f.n:
        raise DimensionError(f"configuration has n={x.n}, network has n={f.n}")
    return Configuration(f.n, int(f.image[x.bits]))


@dataclass(frozen=True)
class SignedDigraph:
    """Arcs are ``(source, target, sign)`` with 1-based vertices and sign in {+1, -1}."""

    n: int
    arcs: frozenset

    def __post_init__(self):
        for j, i, s in self.arcs:
            if not (1 <= j <= self.n and 1 <= i <= self.n and s in (1, -1)):
                raise ValueError(f"bad arc {(j, i, s)} for n={self.n}")

    def sorted_arcs(self) -> list[tuple[int, int, int]]:
        return sorted(self.arcs)

    def signs(self, j: int, i: int) -> set[int]:
        return {s for (a, b, s) in self.arcs if a == j and b == i}

    def successors(self, j: int) -> list[int]:
        return sorted({i for (a, i, _) in self.arcs if a == j})

    def loops(self) -> list[tuple[int, int, int]]:
        return sorted(a for a in self.arcs if a[0] == a[1])


def interaction_graph(f: BooleanNetwork) -> SignedDigraph:
    """Signed arcs ``j -> i`` witnessed by some discrete partial derivative of ``f_i``."""
    n = f.n
    states = np.arange(1 << n)
    t = f.tables.astype(np.int8)
    arcs = set()
    for j in range(1, n + 1):
        bit = 1 << (j - 1)
        lower = states[(states & bit) == 0]
        upper = lower | bit
        diff = t[:, upper] - t[:, lower]
        for i in range(1, n + 1):
            d = diff[i - 1]
            if (d == 1).any():
                arcs.add((j, i, 1))
            if (d == -1).any():
                arcs.add((j, i, -1))
    return SignedDigraph(n, frozenset(arcs))


def has_negative_loop(f: BooleanNetwork) -> bool:
    # f_i(x with x_i=1) < f_i(x with x_i=0) for some x
    states = np.arange(1 << f.n)
    for i in range(f.n):
        lower = states[(states >> i) & 1 == 0]
        t = f.tables[i]
        if (t[lower] > t[lower | (1 << i)]).any():
            return True
    return False


def is_monotone(f: BooleanNetwork) -> bool:
    """Covering-pair test: ``f(x) <= f(x + e_i)`` for every ``x`` with ``x_i = 0``."""
    return monotonicity_violation(f) is None


def monotonicity_violation(f: BooleanNetwork) -> tuple[Configuration, int] | None:
    """Some ``(x, i)`` with ``x_i = 0`` and ``f(x) not <= f(x + e_i)``, or ``None``."""
    img = f.image
    states = np.arange(1 << f.n)
    for i in range(f.n):
        lower = states[(states >> i) & 1 == 0]
        bad = np.flatnonzero(img[lower] & ~img[lower | (1 << i)])
        if bad.size:
            return Configuration(f.n, int(lower[bad[0]])), i + 1
    return None


def _unsigned_cycles(G: SignedDigraph, max_len: int) -> list[tuple[int, ...]]:
    succ = {j: G.successors(j) for j in range(1, G.n + 1)}
    found = []
    for root in range(1, G.n + 1):
        # vertices on a cycle rooted at ``root`` are all > root
        stack = [(root, (root,))]
        while stack:
            v, path = stack.pop()
            for w in succ[v]:
                if w == root:
                    found.append(path)
                elif w > root and w not in path and len(path) < max_len:
                    stack.append((w, path + (w,)))
    return sorted(set(found))


def _cycle_arcs(cycle: tuple[int, ...]) -> list[tuple[int, int]]:
    return [(cycle[k], cycle[(k + 1) % len(cycle)]) for k in range(len(cycle))]


def signed_cycles(G: SignedDigraph, max_len: int | None = None) -> list[tuple[tuple[int, ...], int]]:
    """All elementary cycles of length <= ``max_len``, one entry per choice of signed arcs.

    Each cycle is listed starting from its smallest vertex. Entries are sorted by
    vertex sequence, then by the tuple of chosen arc signs.
    """
    if max_len is None:
        max_len = G.n
    if max_len > G.n:
        raise ValueError(f"max_len={max_len} exceeds n={G.n}")
    out = []
    for cycle in _unsigned_cycles(G, max_len):
        choices = [sorted(G.signs(a, b)) for a, b in _cycle_arcs(cycle)]
        for signs in itertools.product(*choices):
            out.append((cycle, signs))
    out.sort()
    return [(cycle, int(np.prod(signs))) for cycle, signs in out]


def cycle_sign_summary(G: SignedDigraph, max_len: int | None = None) -> tuple[bool, bool]:
    """``(has positive cycle, has negative cycle)`` without expanding sign choices."""
    pos = neg = False
    for cycle in _unsigned_cycles(G, G.n if max_len is None else max_len):
        choices = [G.signs(a, b) for a, b in _cycle_arcs(cycle)]
        if any(len(c) == 2 for c in choices):
            return True, True
        sign = int(np.prod([next(iter(c)) for c in choices]))
        pos |= sign > 0
        neg |= sign < 0
        if pos and neg:
            break
    return pos, neg


def is_acyclic(G: SignedDigraph) -> bool:
    """Kahn's algorithm on the underlying unsigned digraph; a loop is a cycle."""
    edges = {(j, i) for j, i, _ in G.arcs}
    indeg = {v: 0 for v in range(1, G.n + 1)}
    for _, i in edges:
        indeg[i] += 1
    ready = [v for v, d in indeg.items() if d == 0]
    seen = 0
    while ready:
        v = ready.pop()
        seen += 1
        for a, b in edges:
            if a == v:
                indeg[b] -= 1
                if indeg[b] == 0:
                    ready.append(b)
    return seen == G.n


def as_configuration(n: int, x) -> Configuration:
    """Accept a Configuration, an integer encoding, a literal, or a bit tuple."""
    if isinstance(x, Configuration):
        c = x
    elif isinstance(x, (int, np.integer)):
        c = Configuration(n, int(x))
    elif isinstance(x, str):
        c = Configuration.from_literal(x)
    elif isinstance(x, Iterable):
        c = Configuration.from_tuple(tuple(x))
    else:
        raise TypeError(f"cannot interpret {x!r} as a configuration")
    if c.n != n:
        raise DimensionError(f"configuration has n={c.n}, expected {n}")
    return c

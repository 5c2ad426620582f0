"""Slow, definition-level reference implementations used only by the tests."""

import itertools

import numpy as np

from monobn.netcore import Configuration


def states(n):
    return [Configuration(n, b) for b in range(1 << n)]


def interaction_arcs(f):
    """Arcs straight from the partial-difference definition, looping over Configuration objects."""
    arcs = set()
    for i in range(1, f.n + 1):
        for j in range(1, f.n + 1):
            for x in states(f.n):
                if x[j] == 1:
                    continue
                d = f(x.flip(j))[i] - f(x)[i]
                if d:
                    arcs.add((j, i, d))
    return arcs


def monotone_all_pairs(f):
    for x in states(f.n):
        for y in states(f.n):
            if x.leq(y) and not f(x).leq(f(y)):
                return False
    return True


def transition_matrix(f):
    size = 1 << f.n
    A = np.zeros((size, size), dtype=bool)
    for x in states(f.n):
        fx = f(x)
        for i in range(1, f.n + 1):
            if fx[i] != x[i]:
                A[x.bits, x.flip(i).bits] = True
    return A


def all_pairs_distances(f):
    """Floyd-Warshall on the explicit transition matrix; inf marks unreachable."""
    A = transition_matrix(f)
    D = np.where(A, 1.0, np.inf)
    np.fill_diagonal(D, 0)
    for k in range(len(D)):
        D = np.minimum(D, D[:, [k]] + D[[k], :])
    return D


def embed_reference(f):
    """Host network evaluated case by case, first match wins, from Configuration objects."""
    n = f.n

    def first_half(i, x, y):
        xbar = x.complement()
        w = x.weight + y.weight
        if y == xbar or y.flip(i) == xbar:
            return f(x)[i]
        if w == n and y != xbar:
            return 1 - x[i]
        if w == n + 1 and y.flip(i) != xbar:
            return 1
        if w == n - 1 and y.flip(i) != xbar:
            return 0
        if w >= n + 2:
            return 1
        if w <= n - 2:
            return 0
        raise AssertionError("no case applies")

    table = {}
    for x, y in itertools.product(states(n), repeat=2):
        out = [first_half(i, x, y) for i in range(1, n + 1)]
        out += [1 - first_half(i, y.complement(), x.complement()) for i in range(1, n + 1)]
        table[(x.bits, y.bits)] = out
    return table

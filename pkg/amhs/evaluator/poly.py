import itertools
from typing import List, Tuple

from .modes import inverse_powers


def _marked_weights(a: int, p: int, alternating: bool) -> List[int]:
    weights = list(inverse_powers(a, p - 1, p))
    if alternating:
        for j in range(1, p, 2):
            weights[j] = -weights[j] % p
    return weights


def poly_coefficients(
    a: int, d: int, k: int, p: int, weak: bool = False, alternating: bool = False
) -> Tuple[int, ...]:
    """
    Coefficients in F_p[x] of the marked-index polynomial

        sum over 0 < i_1 < ... < i_d < p of sigma(i) x^(i_k) / (i_1 ... i_d)^a

    (weakly increasing indices when ``weak``; sigma(i) = (-1)^(i_1+...+i_d)
    when ``alternating``, else 1). Entry m is the coefficient of x^m.
    """
    if not 1 <= k <= d:
        raise ValueError(f"Marked position must lie in 1..{d}, got {k}")
    w = _marked_weights(a, p, alternating)

    prefix = [0] * p
    state = [1] + [0] * (k - 1)
    for j in range(1, p):
        if weak:
            for i in range(1, k):
                state[i] = (state[i] + state[i - 1] * w[j]) % p
            prefix[j] = state[k - 1]
        else:
            prefix[j] = state[k - 1]
            for i in range(k - 1, 0, -1):
                state[i] = (state[i] + state[i - 1] * w[j]) % p

    suffix = [0] * p
    state = [1] + [0] * (d - k)
    for j in range(p - 1, 0, -1):
        if weak:
            for i in range(1, d - k + 1):
                state[i] = (state[i] + state[i - 1] * w[j]) % p
            suffix[j] = state[d - k]
        else:
            suffix[j] = state[d - k]
            for i in range(d - k, 0, -1):
                state[i] = (state[i] + state[i - 1] * w[j]) % p

    return (0,) + tuple(prefix[j] * w[j] * suffix[j] % p for j in range(1, p))


def poly_value(coefficients: Tuple[int, ...], x: int, p: int) -> int:
    total = 0
    for c in reversed(coefficients):
        total = (total * x + c) % p
    return total


def poly_value_direct(
    a: int, d: int, k: int, p: int, x: int, weak: bool = False, alternating: bool = False
) -> int:
    """Pointwise evaluation straight from the definition (small p only)"""
    w = _marked_weights(a, p, alternating)
    if weak:
        tuples = itertools.combinations_with_replacement(range(1, p), d)
    else:
        tuples = itertools.combinations(range(1, p), d)
    total = 0
    for indices in tuples:
        term = pow(x, indices[k - 1], p)
        for i in indices:
            term = term * w[i] % p
        total += term
    return total % p

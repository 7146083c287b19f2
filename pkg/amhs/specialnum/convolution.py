from threading import RLock

import gmpy2
from cachetools import LRUCache, cached
from pydantic import BaseModel, ConfigDict

from ..residue import Residue
from .bernoulli import bernoulli_residues


class ConvolutionConstants(BaseModel):
    """
    Weighted Bernoulli convolutions sum_{k=2}^{p-3} w(k) B_k B_{p-3-k} modulo p

    ===  ==================
    A    1
    B    2^k
    C    2^(p-3-k)
    D    1/k
    E    2^k / k
    F    2^(p-3-k) / k
    G    k
    J    2^k k
    K    2^(p-3-k) k
    ===  ==================
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    p: int
    A: Residue
    B: Residue
    C: Residue
    D: Residue
    E: Residue
    F: Residue
    G: Residue
    J: Residue
    K: Residue


@cached(LRUCache(maxsize=64), lock=RLock())
def convolution_constants(p: int) -> ConvolutionConstants:
    if p < 7 or not gmpy2.is_prime(p):
        raise ValueError(f"Convolution constants need a prime p >= 7, got {p}")
    b = bernoulli_residues(p)
    sums = dict.fromkeys("ABCDEFGJK", 0)
    for k in range(2, p - 2):
        product = b[k] * b[p - 3 - k]
        if product % p == 0:
            continue
        up = pow(2, k, p)
        down = pow(2, p - 3 - k, p)
        inv_k = int(gmpy2.invert(k, p))
        sums["A"] += product
        sums["B"] += up * product
        sums["C"] += down * product
        sums["D"] += inv_k * product
        sums["E"] += up * inv_k * product
        sums["F"] += down * inv_k * product
        sums["G"] += k * product
        sums["J"] += up * k * product
        sums["K"] += down * k * product
    return ConvolutionConstants(
        p=p, **{name: Residue(value, p) for name, value in sums.items()}
    )

"""Random cyclic-quiver representations for the tests."""

import random

from dessins import ratmat
from dessins.lusztig import CyclicQuiverRep


def random_rep(rng: random.Random, n: int, max_total: int = 6, nilpotent_bias: bool = True):
    while True:
        dims = [rng.randint(0, 2) for _ in range(n)]
        if 0 < sum(dims) <= max_total:
            break
    maps = []
    for i in range(1, n + 1):
        r, c = dims[(i - 2) % n], dims[i - 1]
        pool = [0, 0, 0, 1, -1, 2] if nilpotent_bias else [0, 1, -1, 2]
        maps.append([[rng.choice(pool) for _ in range(c)] for _ in range(r)])
    return CyclicQuiverRep(tuple(dims), tuple(maps))


def random_gs(rng: random.Random, rep: CyclicQuiverRep):
    return [ratmat.random_invertible(d, rng) if d else () for d in rep.dims]

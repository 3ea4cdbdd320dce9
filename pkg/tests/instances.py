"""Seeded test instances shared by the unit and acceptance tests."""

from functools import lru_cache

import numpy as np

from qhgb.affine import AffineSystem, is_affine_regular
from qhgb.checks import gen_generic, gen_regular
from qhgb.monomials import WeightSystem

# hand-picked shapes, including degrees not divisible by the weights
FIXED = [
    ((2, 3), (6, 6)),
    ((2, 3), (5, 6)),
    ((1, 2), (3, 4)),
    ((3, 2, 1), (6, 6, 6)),
    ((1, 2, 3), (6, 6, 6)),
    ((1, 1, 2), (3, 4, 4)),
    ((2, 2, 1), (4, 4, 5)),
]


def sampled_shapes(count, seed=2024):
    """n in {2, 3}, weights in 1..3, d_i a multiple of w_i with 2 w_i <= d_i <= 8."""
    rng = np.random.Generator(np.random.PCG64(seed))
    out = []
    while len(out) < count:
        n = int(rng.integers(2, 4))
        ws = tuple(int(w) for w in rng.integers(1, 4, size=n))
        ds = []
        for w in ws:
            ks = [k for k in range(2, 9) if k * w <= 8]
            ds.append(int(w * rng.choice(ks)))
        shape = (ws, tuple(ds))
        if shape not in out and shape not in FIXED:
            out.append(shape)
    return out


SHAPES = FIXED + sampled_shapes(25 - len(FIXED))


@lru_cache(maxsize=None)
def regular_systems():
    return tuple(gen_regular(len(W), WeightSystem(W), D, seed=100 + k) for k, (W, D) in enumerate(SHAPES))


AFFINE_SHAPES = [
    ((2, 3), (6, 6), "whomog_plus_constant"),
    ((2, 3), (5, 6), "affine_up_to_degree"),
    ((1, 2), (4, 4), "affine_up_to_degree"),
    ((2, 2), (4, 4), "whomog_plus_constant"),
    ((2, 2), (4, 6), "whomog_plus_constant"),
    ((1, 2, 3), (6, 6, 6), "whomog_plus_constant"),
    ((3, 2, 1), (6, 6, 6), "whomog_plus_constant"),
    ((2, 1, 1), (4, 4, 4), "affine_up_to_degree"),
    ((1, 1, 1), (2, 3, 3), "affine_up_to_degree"),
    ((1, 1, 2), (3, 4, 4), "affine_up_to_degree"),
]


@lru_cache(maxsize=None)
def affine_systems():
    out = []
    for k, (W, D, shape) in enumerate(AFFINE_SHAPES):
        for s in range(20):
            F = gen_generic(len(W), WeightSystem(W), D, 500 + 31 * k + s, shape)
            A = AffineSystem.from_polys(F.polys)
            if is_affine_regular(A):
                out.append((F, A))
                break
        else:
            raise RuntimeError(f"no affine-regular system for {W}, {D}")
    return tuple(out)

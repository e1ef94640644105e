"""Brute-force oracle over the dual algebra.

A corepresentation u of H makes its carrier space a module over the dual
*-algebra A^: the generator f_a acts by the coefficient slice u[:, :, a].
Decomposing modules and counting module homs uses nothing but dense linear
algebra (no characters, no Haar pairings), which makes this layer an
independent cross-check for the classification and fusion pipelines.
"""

from __future__ import annotations

import numpy as np

from ._linalg import DEFAULT_SEED, module_hom_basis, split_invariant_subspaces
from .corep import Corep, regular_corep, tensor
from .errors import PeterWeylMismatch
from .hopf import HopfData


def module_hom_dim(u: Corep, w: Corep) -> int:
    """dim of module homomorphisms between the slice modules of two coreps."""
    return len(module_hom_basis(u.coeff_slices(), w.coeff_slices()))


def _compress_slices(slices: list[np.ndarray], q: np.ndarray) -> list[np.ndarray]:
    return [q.conj().T @ s @ q for s in slices]


def module_decompose(u: Corep, seed: int = DEFAULT_SEED):
    """Irreducible submodules of u's slice module, with multiplicities.

    Returns a list of (slices, multiplicity). Equivalence is decided by
    module-hom dimension, never by characters.
    """
    rng = np.random.default_rng(seed)
    factors: list[list[np.ndarray]] = []
    stack = [u.coeff_slices()]
    while stack:
        cur = stack.pop()
        comm = module_hom_basis(cur, cur)
        if len(comm) == 1:
            factors.append(cur)
            continue
        dim = cur[0].shape[0]
        for q in split_invariant_subspaces(comm, dim, rng):
            stack.append(_compress_slices(cur, q))
    grouped: list[tuple[list[np.ndarray], int]] = []
    for f in factors:
        for i, (g0, mult) in enumerate(grouped):
            if g0[0].shape == f[0].shape and len(module_hom_basis(g0, f)) >= 1:
                grouped[i] = (g0, mult + 1)
                break
        else:
            grouped.append((f, 1))
    return grouped


def module_irreducible_dims(u: Corep, seed: int = DEFAULT_SEED) -> list[int]:
    return sorted(f[0].shape[0] for f, _ in module_decompose(u, seed))


def oracle_irr_dims(h: HopfData, seed: int = DEFAULT_SEED) -> list[int]:
    """Dimensions of Irr(H) from the regular module, certified by Peter-Weyl."""
    dims = module_irreducible_dims(regular_corep(h), seed)
    if sum(d * d for d in dims) != h.dim:
        raise PeterWeylMismatch(
            f"dual-algebra blocks give sum dim^2 = {sum(d * d for d in dims)}"
            f" != {h.dim}")
    return dims


def oracle_fusion_dim(w1: Corep, w2: Corep, w3: Corep) -> int:
    """Multiplicity of w1 in w2 (x) w3, counted by module homs alone."""
    return module_hom_dim(w1, tensor(w2, w3))

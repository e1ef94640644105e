"""Shared numerical helpers: tolerances, nullspaces, module homs, spectral splitting."""

from __future__ import annotations

import numpy as np

from .errors import IntegerRecoveryError

# Tolerance ladder: constructions should be exact to TOL_BUILD, verified
# invariants hold to TOL_VERIFY, and fuzzy acceptance (equivalence tests on
# floating data) uses TOL_ACCEPT.
TOL_BUILD = 1e-12
TOL_VERIFY = 1e-9
TOL_ACCEPT = 1e-6

EIG_CLUSTER_TOL = 1e-7
INT_ROUND_TOL = 0.1
DEFAULT_SEED = 7

# Above this size for dim(H1)*dim(H2), intertwiner spaces are computed with the
# Haar-averaging projector instead of a stacked SVD (memory).
DENSE_NULLSPACE_LIMIT = 1024


def as_int(value, tol: float = INT_ROUND_TOL) -> int:
    """Round a float/complex known to be an integer, failing loudly otherwise."""
    x = complex(value)
    n = int(round(x.real))
    if abs(x.real - n) > tol or abs(x.imag) > tol:
        raise IntegerRecoveryError(f"value {x} is not within {tol} of an integer")
    return n


def nullspace(mat: np.ndarray, rtol: float = 1e-9) -> np.ndarray:
    """Orthonormal basis of the nullspace of `mat`, as rows of the result."""
    mat = np.asarray(mat, dtype=complex)
    if mat.size == 0:
        return np.eye(mat.shape[1], dtype=complex)
    _, s, vh = np.linalg.svd(mat, full_matrices=True)
    cutoff = rtol * max(1.0, s[0] if len(s) else 0.0)
    rank = int(np.sum(s > cutoff))
    return vh[rank:].conj()


def module_hom_basis(mats1, mats2, rtol: float = 1e-9) -> list[np.ndarray]:
    """Basis of {T : T m1_a = m2_a T for all a}, i.e. homs of matrix families.

    mats1 acts on C^{n1}, mats2 on C^{n2}; returned T's are n2 x n1,
    orthonormal in the Hilbert-Schmidt inner product. Large systems switch to
    a two-stage solve: the nullspace of a few random slice combinations (a
    superset of the hom space), refined by imposing every equation exactly
    within that candidate span.
    """
    mats1 = [np.asarray(m, dtype=complex) for m in mats1]
    mats2 = [np.asarray(m, dtype=complex) for m in mats2]
    n1 = mats1[0].shape[0]
    n2 = mats2[0].shape[0]
    eye1 = np.eye(n1)
    eye2 = np.eye(n2)

    def sylvester_block(m1, m2):
        # vec(m2 T - T m1) = (m2 (x) I - I (x) m1^T) vec(T), row-major vec.
        return np.kron(m2, eye1) - np.kron(eye2, m1.T)

    if len(mats1) * n1 * n2 <= 8 * DENSE_NULLSPACE_LIMIT:
        system = np.vstack([sylvester_block(m1, m2)
                            for m1, m2 in zip(mats1, mats2)])
        basis = nullspace(system, rtol=rtol)
        return [vec.reshape(n2, n1) for vec in basis]

    # Stage 1: candidates from random combinations (deterministic seed).
    rng = np.random.default_rng(DEFAULT_SEED)
    blocks = []
    for _ in range(3):
        c = rng.standard_normal(len(mats1)) + 1j * rng.standard_normal(len(mats1))
        m1c = sum(ci * m for ci, m in zip(c, mats1))
        m2c = sum(ci * m for ci, m in zip(c, mats2))
        blocks.append(sylvester_block(m1c, m2c))
    cands = nullspace(np.vstack(blocks), rtol=rtol)
    if cands.shape[0] == 0:
        return []
    cand_mats = [vec.reshape(n2, n1) for vec in cands]
    # Stage 2: exact refinement against every slice equation.
    m = len(cand_mats)
    gram = np.zeros((m, m), dtype=complex)
    images = np.empty((len(mats1), m, n2, n1), dtype=complex)
    for a, (m1, m2) in enumerate(zip(mats1, mats2)):
        for i, t in enumerate(cand_mats):
            images[a, i] = m2 @ t - t @ m1
    for i in range(m):
        for j in range(m):
            gram[i, j] = np.sum(np.conj(images[:, i]) * images[:, j])
    vals, vecs = np.linalg.eigh((gram + gram.conj().T) / 2)
    scale = max(1.0, float(vals.max()) if m else 1.0)
    out = []
    for idx in np.where(vals < rtol * scale)[0]:
        t = sum(vecs[k, idx] * cand_mats[k] for k in range(m))
        out.append(t / np.linalg.norm(t))
    # re-orthonormalize (numerically) via QR on the flattened vectors
    if out:
        q, _ = np.linalg.qr(np.stack([t.reshape(-1) for t in out], axis=1))
        out = [q[:, k].reshape(n2, n1) for k in range(q.shape[1])]
    return out


def hermitian_basis(basis: list[np.ndarray]) -> list[np.ndarray]:
    """Self-adjoint spanning set of a *-closed operator space."""
    out = []
    for t in basis:
        out.append((t + t.conj().T) / 2)
        out.append((t - t.conj().T) / 2j)
    return out


def random_selfadjoint(basis: list[np.ndarray], rng: np.random.Generator) -> np.ndarray:
    coeffs = rng.standard_normal(len(basis)) + 1j * rng.standard_normal(len(basis))
    acc = sum(c * t for c, t in zip(coeffs, basis))
    return (acc + acc.conj().T) / 2


def cluster_eigvals(vals: np.ndarray, tol: float = EIG_CLUSTER_TOL) -> list[np.ndarray]:
    """Indices of eigenvalues grouped by proximity (vals assumed real, sorted)."""
    order = np.argsort(vals)
    groups = [[order[0]]]
    for idx in order[1:]:
        if abs(vals[idx] - vals[groups[-1][-1]]) <= tol:
            groups[-1].append(idx)
        else:
            groups.append([idx])
    return [np.array(g) for g in groups]


def split_invariant_subspaces(commutant: list[np.ndarray], dim: int,
                              rng: np.random.Generator) -> list[np.ndarray]:
    """Isometries onto the spectral subspaces of a random commutant element.

    Each returned Q is dim x m with orthonormal columns. A single round of
    splitting; callers recurse until the commutant is trivial.
    """
    herm = hermitian_basis(commutant)
    r = random_selfadjoint(herm, rng)
    vals, vecs = np.linalg.eigh(r)
    return [vecs[:, g] for g in cluster_eigvals(vals)]


def unitary_part(t: np.ndarray, tol: float = TOL_VERIFY) -> np.ndarray:
    """Rescale an operator known to be a scalar multiple of a unitary."""
    n = t.shape[0]
    scale = np.linalg.norm(t) / np.sqrt(n)
    if scale < tol:
        raise ValueError("operator is numerically zero, cannot unitarize")
    u = t / scale
    return u


def first_entry_phase(mat: np.ndarray, threshold: float = 1e-8):
    """Phase of the first row-major entry above threshold, or None."""
    flat = mat.reshape(-1)
    for entry in flat:
        if abs(entry) > threshold:
            return entry / abs(entry)
    return None


def kron_many(mats: list[np.ndarray]) -> np.ndarray:
    acc = mats[0]
    for m in mats[1:]:
        acc = np.kron(acc, m)
    return acc


def max_abs(arr) -> float:
    arr = np.asarray(arr)
    return float(np.max(np.abs(arr))) if arr.size else 0.0

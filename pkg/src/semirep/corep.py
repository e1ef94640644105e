"""Unitary corepresentations of a HopfData quantum group.

A Corep of dimension n over H stores entries as an (n, n, d) array: slice
[i, j, :] is the coefficient vector of the algebra element u_{ij}. Morphism
spaces are computed two independent ways (Haar pairing of characters vs.
nullspace of the intertwiner system) and must agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._linalg import (DEFAULT_SEED, DENSE_NULLSPACE_LIMIT, TOL_VERIFY, as_int,
                      max_abs, module_hom_basis, split_invariant_subspaces)
from .errors import (NoPositiveIntertwiner, OracleDisagreement,
                     OrbitResolutionFailure, PeterWeylMismatch, ValidationError)
from .groups import FiniteGroup, GroupAction
from .hopf import AlgebraElement, HopfData, QAutomorphism, is_kac


@dataclass(frozen=True, eq=False)
class Corep:
    parent: HopfData
    entries: np.ndarray = field(repr=False)  # (n, n, d)

    def __post_init__(self):
        arr = np.asarray(self.entries, dtype=complex)
        object.__setattr__(self, "entries", arr)
        if arr.ndim != 3 or arr.shape[0] != arr.shape[1] or arr.shape[2] != self.parent.dim:
            raise ValidationError(f"corep entries have shape {arr.shape}")

    @property
    def dim(self) -> int:
        return int(self.entries.shape[0])

    def character(self) -> AlgebraElement:
        return AlgebraElement(self.parent, np.einsum("iic->c", self.entries))

    def char_vec(self) -> np.ndarray:
        return np.einsum("iic->c", self.entries)

    def coeff_slices(self) -> list[np.ndarray]:
        """The matrices (id (x) f_a)(u), i.e. the dual-algebra module action."""
        return [self.entries[:, :, a] for a in range(self.parent.dim)]


def trivial_corep(h: HopfData, dim: int = 1) -> Corep:
    entries = np.zeros((dim, dim, h.dim), dtype=complex)
    for i in range(dim):
        entries[i, i] = h.unit
    return Corep(h, entries)


def verify_corep(u: Corep, tol: float = TOL_VERIFY) -> dict:
    """Residuals for the comodule law, counit normalization and unitarity."""
    h = u.parent
    e = u.entries
    res: dict[str, float] = {}
    lhs = np.einsum("ijc,cab->ijab", e, h.comult)
    rhs = np.einsum("ika,kjb->ijab", e, e)
    res["comodule"] = max_abs(lhs - rhs)
    res["counit"] = max_abs(np.einsum("ijc,c->ij", e, h.counit) - np.eye(u.dim))
    star_e = np.einsum("pc,ijc->ijp", h.star, np.conj(e))
    # row orthogonality: sum_k u_{ik} u_{jk}^* = delta_{ij} 1, columns likewise
    row = np.einsum("ika,jkb,abp->ijp", e, star_e, h.mult, optimize=True)
    col = np.einsum("kia,kjb,abp->ijp", star_e, e, h.mult, optimize=True)
    target = np.einsum("ij,p->ijp", np.eye(u.dim), h.unit)
    res["unitary_rows"] = max_abs(row - target)
    res["unitary_cols"] = max_abs(col - target)
    res["max"] = max(res.values())
    res["pass"] = res["max"] < tol
    return res


def tensor(u: Corep, w: Corep) -> Corep:
    """(u x w)_{(i,k),(j,l)} = u_{ij} w_{kl}, row-major pair indexing."""
    if u.parent is not w.parent:
        raise ValidationError("tensor product requires a common parent algebra")
    h = u.parent
    prod = np.einsum("ija,klb,abc->ikjlc", u.entries, w.entries, h.mult, optimize=True)
    n = u.dim * w.dim
    return Corep(h, prod.reshape(n, n, h.dim))


def direct_sum(u: Corep, w: Corep) -> Corep:
    h = u.parent
    n1, n2 = u.dim, w.dim
    entries = np.zeros((n1 + n2, n1 + n2, h.dim), dtype=complex)
    entries[:n1, :n1] = u.entries
    entries[n1:, n1:] = w.entries
    return Corep(h, entries)


def character(u: Corep) -> AlgebraElement:
    return u.character()


# -- morphism spaces -----------------------------------------------------------

def _char_mor_dim(u: Corep, w: Corep) -> int:
    h = u.parent
    chi_u_star = h.star_vec(u.char_vec())
    val = h.haar_vec(h.product(chi_u_star, w.char_vec()))
    return as_int(val)


def _averaged_mor_basis(u: Corep, w: Corep, tol: float) -> list[np.ndarray]:
    """Basis of Mor(u, w) from the Haar-averaging projector.

    E(T) = (id (x) h)(w (T (x) 1) u^*) projects onto Mor(u, w) for unitary
    coreps of a Kac-type algebra; used when the stacked nullspace would be
    too large. Each basis element is re-verified against the intertwiner
    equations.
    """
    h = u.parent
    star_u = np.einsum("pc,ijc->ijp", h.star, np.conj(u.entries))
    hb = np.einsum("abk,k->ab", h.mult, h.haar)
    # Emat[(i,j),(k,l)] = h(w_{ik} u_{jl}^*)
    m1 = np.einsum("ika,ab->ikb", w.entries, hb)
    emat = np.einsum("ikb,jlb->ijkl", m1, star_u, optimize=True)
    nw, nu = w.dim, u.dim
    emat = emat.reshape(nw * nu, nw * nu)
    herm = (emat + emat.conj().T) / 2
    vals, vecs = np.linalg.eigh(herm)
    basis = []
    for idx in np.where(vals > 0.5)[0]:
        t = vecs[:, idx].reshape(nw, nu)
        basis.append(t)
    for t in basis:
        res = _intertwiner_residual(u, w, t)
        if res > tol:
            raise OracleDisagreement(
                f"averaged morphism basis fails intertwiner check ({res:.2e})")
    return basis


def _intertwiner_residual(u: Corep, w: Corep, t: np.ndarray) -> float:
    lhs = np.einsum("ik,kjc->ijc", t, u.entries)
    rhs = np.einsum("ikc,kj->ijc", w.entries, t)
    return max_abs(lhs - rhs)


def intertwiner_basis(u: Corep, w: Corep, tol: float = TOL_VERIFY) -> list[np.ndarray]:
    """Orthonormal basis of Mor(u, w) = {T : (T (x) 1) u = w (T (x) 1)}."""
    if u.parent is not w.parent:
        raise ValidationError("intertwiners require a common parent algebra")
    if u.dim * w.dim > DENSE_NULLSPACE_LIMIT:
        return _averaged_mor_basis(u, w, tol)
    return module_hom_basis(u.coeff_slices(), w.coeff_slices())


def mor_dim(u: Corep, w: Corep) -> int:
    """dim Mor(u, w), computed twice (characters and nullspace), must agree."""
    via_char = _char_mor_dim(u, w)
    via_null = len(intertwiner_basis(u, w))
    if via_char != via_null:
        raise OracleDisagreement(
            f"mor_dim mismatch: characters give {via_char}, nullspace gives {via_null}")
    return via_char


# -- conjugates ----------------------------------------------------------------

def contragredient(u: Corep) -> Corep:
    """u^c = (j (x) id)(u^*): entrywise star of the coefficients."""
    h = u.parent
    entries = np.einsum("pc,ijc->ijp", h.star, np.conj(u.entries))
    return Corep(h, entries)


def double_contragredient(u: Corep) -> Corep:
    """u^{cc}: entrywise S^2; equals u exactly in the Kac case."""
    h = u.parent
    s2 = h.antipode @ h.antipode
    return Corep(h, np.einsum("pc,ijc->ijp", s2, u.entries))


@dataclass(frozen=True, eq=False)
class ModularOperator:
    rho: np.ndarray = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "rho", np.asarray(self.rho, dtype=complex))


def conjugate(u: Corep, tol: float = TOL_VERIFY) -> tuple[Corep, ModularOperator]:
    """The unitary conjugate u-bar and its modular operator.

    rho is the positive invertible element of Mor(u, u^{cc}) normalized by
    tr(rho) = tr(rho^{-1}); u-bar = (j(rho)^{1/2} (x) 1) u^c (j(rho)^{-1/2} (x) 1)
    with j realized as the transpose. For Kac-type algebras rho = id and
    u-bar = u^c.
    """
    h = u.parent
    ucc = double_contragredient(u)
    if is_kac(h) and max_abs(ucc.entries - u.entries) < tol:
        rho = np.eye(u.dim, dtype=complex)
    else:
        basis = intertwiner_basis(u, ucc)
        rho = None
        for t in basis:
            # for irreducible u the space is C*rho with rho positive definite
            cand = t * np.exp(-1j * np.angle(np.trace(t)))
            cand = (cand + cand.conj().T) / 2
            eigs = np.linalg.eigvalsh(cand)
            if eigs.min() > tol:
                scale = np.sqrt(np.sum(1.0 / np.linalg.eigvalsh(cand)) / np.sum(
                    np.linalg.eigvalsh(cand)))
                rho = cand * scale
                break
        if rho is None:
            raise NoPositiveIntertwiner("no positive invertible element in Mor(u, u^cc)")
        if abs(np.trace(rho) - np.trace(np.linalg.inv(rho))) > 1e-6:
            raise NoPositiveIntertwiner("modular normalization tr(rho) = tr(rho^-1) failed")
    jrho = rho.T
    vals, vecs = np.linalg.eigh((jrho + jrho.conj().T) / 2)
    half = vecs @ np.diag(np.sqrt(vals)) @ vecs.conj().T
    half_inv = vecs @ np.diag(1.0 / np.sqrt(vals)) @ vecs.conj().T
    uc = contragredient(u)
    entries = np.einsum("ia,abc,bj->ijc", half, uc.entries, half_inv)
    ubar = Corep(h, entries)
    report = verify_corep(ubar, tol)
    if not report["pass"]:
        raise NoPositiveIntertwiner(
            f"conjugate corep fails verification (max residual {report['max']:.2e})")
    return ubar, ModularOperator(rho)


# -- decomposition and enumeration ---------------------------------------------

def _compress(u: Corep, q: np.ndarray) -> Corep:
    entries = np.einsum("ia,ijc,jb->abc", np.conj(q), u.entries, q)
    return Corep(u.parent, entries)


def irr_decompose(u: Corep, seed: int = DEFAULT_SEED) -> list[tuple[Corep, int]]:
    """Pairwise-inequivalent irreducible factors with multiplicities."""
    rng = np.random.default_rng(seed)
    factors: list[Corep] = []
    stack = [u]
    while stack:
        cur = stack.pop()
        comm = intertwiner_basis(cur, cur)
        if len(comm) == 1:
            factors.append(cur)
            continue
        for q in split_invariant_subspaces(comm, cur.dim, rng):
            stack.append(_compress(cur, q))
    grouped: list[tuple[Corep, int]] = []
    for f in factors:
        for i, (g0, mult) in enumerate(grouped):
            if g0.dim == f.dim and mor_dim(g0, f) >= 1:
                grouped[i] = (g0, mult + 1)
                break
        else:
            grouped.append((f, 1))
    return grouped


def regular_corep(h: HopfData) -> Corep:
    """The right regular corepresentation on an h-orthonormal basis."""
    gram = h.gram()
    vals, vecs = np.linalg.eigh((gram + gram.conj().T) / 2)
    if vals.min() < 1e-10:
        raise ValidationError("Haar inner product is degenerate; no regular corep")
    b = vecs @ np.diag(1.0 / np.sqrt(vals))  # columns: orthonormal basis coeffs
    # f_i^* coefficient vectors
    bs = h.star @ np.conj(b)
    # hmat[i, p] = h(f_i^* e_p)
    hmat = np.einsum("li,lpk,k->ip", bs, h.mult, h.haar)
    # Delta(f_j) coefficients: dj[j, p, q]
    dj = np.einsum("ij,ipq->jpq", b, h.comult)
    entries = np.einsum("ip,jpq->ijq", hmat, dj)
    u = Corep(h, entries)
    return u


def _char_sort_key(u: Corep):
    chi = np.round(u.char_vec(), 6)
    return (u.dim, tuple((c.real, c.imag) for c in chi))


def irr_enumerate(h: HopfData, seed: int = DEFAULT_SEED) -> list[Corep]:
    """All irreducible unitary corepresentations, canonically ordered.

    Brute-force oracle: decompose the regular corepresentation; certified by
    the Peter-Weyl identity sum(dim^2) = dim(H).
    """
    key = ("irr_enumerate", seed)
    if key in h._cache:
        return h._cache[key]
    reg = regular_corep(h)
    grouped = irr_decompose(reg, seed)
    irreps = sorted((f for f, _ in grouped), key=_char_sort_key)
    total = sum(f.dim ** 2 for f in irreps)
    if total != h.dim:
        raise PeterWeylMismatch(f"sum dim^2 = {total} != dim(H) = {h.dim}")
    h._cache[key] = irreps
    return irreps


# -- the action of Lambda on coreps and on Irr ----------------------------------

def act(r: int, u: Corep, alpha: list[QAutomorphism], lam: FiniteGroup) -> Corep:
    """r . u = (id (x) alpha*_{r^{-1}})(u)."""
    m = alpha[lam.inverse(r)].matrix
    return Corep(u.parent, np.einsum("pc,ijc->ijp", m, u.entries))


def irr_action(h: HopfData, lam: FiniteGroup, alpha: list[QAutomorphism],
               seed: int = DEFAULT_SEED) -> GroupAction:
    """The permutation action of Lambda on the canonical list irr_enumerate(h)."""
    irreps = irr_enumerate(h, seed)
    n = len(irreps)
    perm = np.zeros((lam.order, n), dtype=int)
    for r in lam.elements():
        for i, x in enumerate(irreps):
            moved = act(r, x, alpha, lam)
            matches = [j for j, y in enumerate(irreps)
                       if y.dim == moved.dim and mor_dim(moved, y) >= 1]
            if len(matches) != 1:
                raise OrbitResolutionFailure(
                    f"r={r} moves irrep {i} to {len(matches)} candidates")
            perm[r, i] = matches[0]
    return GroupAction(lam, perm)

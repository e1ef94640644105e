"""Unitary projective representations of finite groups.

A ProjectiveRep stores one unitary matrix per group element together with its
2-cocycle. Enumeration of the irreducibles with a prescribed cocycle goes
through the left regular representation of the twisted group algebra.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._linalg import (DEFAULT_SEED, as_int, max_abs, module_hom_basis,
                      split_invariant_subspaces)
from .cohomology import (Cochain1, Cochain2, coboundary, cocycle_inverse,
                         cocycle_product, is_cocycle, restrict_cocycle,
                         trivial_cochain2)
from .errors import (CocycleMismatch, NotProjective, NotScalarRelated,
                     ValidationError)
from .groups import FiniteGroup, Subgroup


@dataclass(frozen=True, eq=False)
class ProjectiveRep:
    group: FiniteGroup
    mats: np.ndarray = field(repr=False)  # (order, dim, dim)
    cocycle: Cochain2 = field(repr=False)

    def __post_init__(self):
        mats = np.asarray(self.mats, dtype=complex)
        object.__setattr__(self, "mats", mats)
        if mats.shape[0] != self.group.order or mats.shape[1] != mats.shape[2]:
            raise ValidationError("need one square matrix per group element")

    @property
    def dim(self) -> int:
        return int(self.mats.shape[1])

    def __call__(self, r: int) -> np.ndarray:
        return self.mats[r]

    def character(self) -> np.ndarray:
        return np.einsum("rii->r", self.mats)

    def verify(self, tol: float = 1e-9) -> float:
        """Max residual over: V(e)=1, unitarity, V(r)V(s) = w(r,s)V(rs)."""
        g = self.group
        eye = np.eye(self.dim)
        worst = max_abs(self.mats[g.identity] - eye)
        for r in g.elements():
            worst = max(worst, max_abs(self.mats[r] @ self.mats[r].conj().T - eye))
            for s in g.elements():
                res = self.mats[r] @ self.mats[s] - self.cocycle(r, s) * self.mats[g.mul(r, s)]
                worst = max(worst, max_abs(res))
        return worst


def cocycle_of(group: FiniteGroup, mats, tol: float = 1e-6) -> Cochain2:
    """Extract the unique cocycle with V(r)V(s) = w(r,s) V(rs)."""
    mats = np.asarray(mats, dtype=complex)
    dim = mats.shape[1]
    n = group.order
    vals = np.empty((n, n), dtype=complex)
    worst = 0.0
    for r in range(n):
        for s in range(n):
            rs = group.mul(r, s)
            prod = mats[r] @ mats[s]
            w = np.trace(mats[rs].conj().T @ prod) / dim
            if abs(w) < 1e-8:
                raise NotProjective(f"V({r})V({s}) is orthogonal to V({r}*{s})")
            w /= abs(w)
            worst = max(worst, max_abs(prod - w * mats[rs]))
            vals[r, s] = w
    if worst > tol:
        raise NotProjective(f"projectivity residual {worst} exceeds {tol}")
    omega = Cochain2(group, vals)
    ok, res, triple = is_cocycle(omega)
    if not ok:
        raise NotProjective(f"extracted cochain fails cocycle law at {triple} ({res})")
    return omega


def projective_rep(group: FiniteGroup, mats) -> ProjectiveRep:
    """Build a ProjectiveRep, computing and checking its cocycle."""
    return ProjectiveRep(group, mats, cocycle_of(group, mats))


def trivial_rep(group: FiniteGroup, dim: int = 1) -> ProjectiveRep:
    mats = np.broadcast_to(np.eye(dim), (group.order, dim, dim)).copy()
    return ProjectiveRep(group, mats, trivial_cochain2(group))


def ordinary_rep(group: FiniteGroup, mats) -> ProjectiveRep:
    """An honest (cocycle-free) representation; projectivity residual must vanish."""
    rep = projective_rep(group, mats)
    if max_abs(rep.cocycle.values - 1.0) > 1e-6:
        raise NotProjective("matrices form a projective, not ordinary, representation")
    return ProjectiveRep(group, rep.mats, trivial_cochain2(group))


def rescale(b: Cochain1, v: ProjectiveRep) -> ProjectiveRep:
    """(bV)(r) = b(r) V(r); the cocycle picks up the coboundary of b."""
    if b.group != v.group:
        raise ValidationError("rescaling requires the same group")
    mats = b.values[:, None, None] * v.mats
    return ProjectiveRep(v.group, mats, cocycle_product(coboundary(b), v.cocycle))


def proj_char_pairing(v1: ProjectiveRep, v2: ProjectiveRep) -> complex:
    chi1 = v1.character()
    chi2 = v2.character()
    return complex(np.vdot(chi1, chi2) / v1.group.order)


def proj_mor_dim(v1: ProjectiveRep, v2: ProjectiveRep, tol: float = 1e-6) -> int:
    """dim Mor(v1, v2) by the character inner product (same cocycle required)."""
    if v1.group != v2.group:
        raise ValidationError("morphism spaces need a common group")
    if max_abs(v1.cocycle.values - v2.cocycle.values) > tol:
        raise CocycleMismatch("projective representations have different cocycles")
    return as_int(proj_char_pairing(v1, v2))


def proj_intertwiner_basis(v1: ProjectiveRep, v2: ProjectiveRep) -> list[np.ndarray]:
    """Basis of {T : T v1(r) = v2(r) T}; the nullspace cross-check for proj_mor_dim."""
    return module_hom_basis(list(v1.mats), list(v2.mats))


def tensor(v1: ProjectiveRep, v2: ProjectiveRep) -> ProjectiveRep:
    if v1.group != v2.group:
        raise ValidationError("tensor product requires the same group")
    mats = np.stack([np.kron(v1.mats[r], v2.mats[r]) for r in v1.group.elements()])
    return ProjectiveRep(v1.group, mats, cocycle_product(v1.cocycle, v2.cocycle))


def restrict(v: ProjectiveRep, sub: Subgroup) -> ProjectiveRep:
    """Restriction to a subgroup of v.group, reindexed to sub.group."""
    idx = np.asarray(sub.elements)
    return ProjectiveRep(sub.group, v.mats[idx], restrict_cocycle(v.cocycle, sub))


def contragredient(v: ProjectiveRep) -> ProjectiveRep:
    """V^c(r) = conj(V(r)); the cocycle is inverted."""
    return ProjectiveRep(v.group, np.conj(v.mats), cocycle_inverse(v.cocycle))


def direct_sum(v1: ProjectiveRep, v2: ProjectiveRep, tol: float = 1e-6) -> ProjectiveRep:
    if max_abs(v1.cocycle.values - v2.cocycle.values) > tol:
        raise CocycleMismatch("direct sum requires equal cocycles")
    n1, n2 = v1.dim, v2.dim
    mats = np.zeros((v1.group.order, n1 + n2, n1 + n2), dtype=complex)
    mats[:, :n1, :n1] = v1.mats
    mats[:, n1:, n1:] = v2.mats
    return ProjectiveRep(v1.group, mats, v1.cocycle)


def transitional_map(v1: ProjectiveRep, v2: ProjectiveRep, tol: float = 1e-6) -> Cochain1:
    """The unique b with V2 = b V1, if V2(r)V1(r)^{-1} is scalar for every r."""
    if v1.group != v2.group or v1.dim != v2.dim:
        raise ValidationError("transitional map needs equal groups and dimensions")
    g = v1.group
    vals = np.empty(g.order, dtype=complex)
    for r in g.elements():
        ratio = np.trace(v2.mats[r] @ v1.mats[r].conj().T) / v1.dim
        if abs(ratio) < 1e-8:
            raise NotScalarRelated(f"V2({r}) is orthogonal to V1({r})")
        ratio /= abs(ratio)
        if max_abs(v2.mats[r] - ratio * v1.mats[r]) > tol:
            raise NotScalarRelated(f"V2({r}) is not a scalar multiple of V1({r})")
        vals[r] = ratio
    return Cochain1(g, vals)


def regular_twisted_rep(group: FiniteGroup, omega: Cochain2) -> ProjectiveRep:
    """Left regular omega-representation: L(r) e_s = w(r, s) e_{rs}."""
    n = group.order
    mats = np.zeros((n, n, n), dtype=complex)
    for r in group.elements():
        for s in group.elements():
            mats[r, group.mul(r, s), s] = omega(r, s)
    return ProjectiveRep(group, mats, omega)


def _subrep(v: ProjectiveRep, q: np.ndarray) -> ProjectiveRep:
    mats = np.einsum("ia,rij,jb->rab", np.conj(q), v.mats, q)
    return ProjectiveRep(v.group, mats, v.cocycle)


def decompose_projective(v: ProjectiveRep, rng=None) -> list[tuple[ProjectiveRep, int]]:
    """Split into pairwise-inequivalent irreducibles with multiplicities."""
    if rng is None:
        rng = np.random.default_rng(DEFAULT_SEED)
    factors: list[ProjectiveRep] = []
    stack = [v]
    while stack:
        cur = stack.pop()
        comm = module_hom_basis(list(cur.mats), list(cur.mats))
        if len(comm) == 1:
            factors.append(cur)
            continue
        for q in split_invariant_subspaces(comm, cur.dim, rng):
            stack.append(_subrep(cur, q))
    grouped: list[tuple[ProjectiveRep, int]] = []
    for f in factors:
        for i, (g0, mult) in enumerate(grouped):
            if g0.dim == f.dim and proj_mor_dim(g0, f) >= 1:
                grouped[i] = (g0, mult + 1)
                break
        else:
            grouped.append((f, 1))
    return grouped


def _char_sort_key(v: ProjectiveRep):
    chi = np.round(v.character(), 6)
    return (v.dim, tuple((c.real, c.imag) for c in chi))


def irreducible_projreps(group: FiniteGroup, omega: Cochain2, seed: int = DEFAULT_SEED,
                         ) -> list[ProjectiveRep]:
    """All irreducible omega-projective representations, up to equivalence.

    Obtained by decomposing the left regular representation of the twisted
    group algebra C_omega[G]; completeness is certified by sum(dim^2) = |G|.
    """
    ok, res, triple = is_cocycle(omega)
    if not ok:
        raise ValidationError(f"not a cocycle (residual {res} at {triple})")
    reg = regular_twisted_rep(group, omega)
    rng = np.random.default_rng(seed)
    grouped = decompose_projective(reg, rng)
    irreps = sorted((f for f, _ in grouped), key=_char_sort_key)
    total = sum(f.dim ** 2 for f in irreps)
    if total != group.order:
        raise ValidationError(
            f"twisted Peter-Weyl failure: sum dim^2 = {total} != |G| = {group.order}")
    return irreps

"""The semidirect product of a finite quantum group with a finite group.

The product Hopf algebra lives on the basis e_i (x) delta_r, indexed as
r * dim(base) + i (blocks by group element, base index fastest). Sub-instances
over principal subgroups are cached on the top-level instance; all coset and
conjugation bookkeeping happens in global Lambda coordinates.
"""

from __future__ import annotations

import numpy as np

from ._linalg import TOL_VERIFY, max_abs
from .corep import Corep
from .errors import NotCovariant, ValidationError
from .groups import FiniteGroup, Subgroup, conjugate_subgroup, full_subgroup
from .hopf import HopfData, QAutomorphism, verify_axioms
from .projective import ProjectiveRep, ordinary_rep


def _product_hopf(base: HopfData, lam: FiniteGroup, alpha_mats: list[np.ndarray]) -> HopfData:
    d = base.dim
    n = lam.order
    dd = d * n

    def ix(r, i):
        return r * d + i

    mult = np.zeros((dd, dd, dd), dtype=complex)
    comult = np.zeros((dd, dd, dd), dtype=complex)
    antipode = np.zeros((dd, dd), dtype=complex)
    star = np.zeros((dd, dd), dtype=complex)
    unit = np.zeros(dd, dtype=complex)
    counit = np.zeros(dd, dtype=complex)
    haar = np.zeros(dd, dtype=complex)

    for r in lam.elements():
        sl = slice(r * d, (r + 1) * d)
        mult[sl, sl, sl] = base.mult
        unit[sl] = base.unit
        haar[sl] = base.haar / n
        star[sl, sl] = base.star
        rinv = lam.inverse(r)
        antipode[rinv * d:(rinv + 1) * d, sl] = alpha_mats[r] @ base.antipode
    counit[lam.identity * d:(lam.identity + 1) * d] = base.counit

    # Delta(e_i (x) delta_r) = sum_s [ (id (x) alpha*_s) Delta(e_i) ]_{13}
    #                                 (delta_s (x) delta_{s^{-1} r})_{24}
    for s in lam.elements():
        twisted = np.einsum("ijk,lk->ijl", base.comult, alpha_mats[s])
        for r in lam.elements():
            t = lam.mul(lam.inverse(s), r)
            comult[r * d:(r + 1) * d, s * d:(s + 1) * d, t * d:(t + 1) * d] += twisted
    return HopfData(mult, unit, comult, counit, antipode, star, haar)


class SemidirectInstance:
    """A quantum group G x| Lambda0 together with its building data.

    For the top-level instance, subgroup covers all of Lambda. Sub-instances
    share the same base algebra and draw their automorphisms from the parent.
    """

    def __init__(self, base: HopfData, lam_full: FiniteGroup,
                 alpha: list[QAutomorphism], subgroup: Subgroup,
                 top: "SemidirectInstance | None" = None, check: bool = True,
                 tol: float = TOL_VERIFY):
        self.base = base
        self.lam_full = lam_full
        self.alpha = alpha  # indexed by *global* Lambda elements
        self.subgroup = subgroup
        self.lam = subgroup.group
        local_mats = [alpha[p].matrix for p in subgroup.elements]
        self.product = _product_hopf(base, self.lam, local_mats)
        self.top = top if top is not None else self
        self._principal_cache: dict = {self.subgroup.elements: self}
        if check:
            report = verify_axioms(self.product, tol)
            if not report["pass"]:
                raise ValidationError(
                    f"semidirect product fails Hopf axioms (max {report['max']:.2e})")

    # -- indexing ---------------------------------------------------------------

    @property
    def dim(self) -> int:
        return self.product.dim

    def basis_index(self, r_local: int, i: int) -> int:
        return r_local * self.base.dim + i

    def block(self, vec: np.ndarray, r_local: int) -> np.ndarray:
        d = self.base.dim
        return vec[..., r_local * d:(r_local + 1) * d]

    def alpha_local(self, r_local: int) -> np.ndarray:
        return self.alpha[self.subgroup.to_parent(r_local)].matrix

    # -- principal subgroups ----------------------------------------------------

    def principal(self, sub: Subgroup) -> "SemidirectInstance":
        """The (cached) instance over a subgroup, given in global coordinates."""
        top = self.top
        if not sub.is_subset_of(top.subgroup):
            raise ValidationError("subgroup is not contained in Lambda")
        cached = top._principal_cache.get(sub.elements)
        if cached is None:
            cached = SemidirectInstance(top.base, top.lam_full, top.alpha, sub,
                                        top=top, check=False)
            top._principal_cache[sub.elements] = cached
        return cached

    def __repr__(self):
        return (f"SemidirectInstance(base dim {self.base.dim}, "
                f"Lambda0 {list(self.subgroup.elements)})")


def build(base: HopfData, lam: FiniteGroup, alpha: list[QAutomorphism],
          tol: float = TOL_VERIFY) -> SemidirectInstance:
    """Assemble G x| Lambda and verify all Hopf axioms."""
    return SemidirectInstance(base, lam, alpha, full_subgroup(lam), check=True, tol=tol)


def restrict_principal(inst: SemidirectInstance, sub: Subgroup) -> SemidirectInstance:
    return inst.principal(sub)


def restrict_corep(inst: SemidirectInstance, u: Corep, sub: Subgroup) -> Corep:
    """Drop the delta_r components with r outside the subgroup (the map phi)."""
    if u.parent is not inst.product:
        raise ValidationError("corep does not live on this instance")
    if not sub.is_subset_of(inst.subgroup):
        raise ValidationError("can only restrict to smaller principal subgroups")
    target = inst.principal(sub)
    d = inst.base.dim
    cols = []
    for p in sub.elements:
        r_local = inst.subgroup.to_local(p)
        cols.append(u.entries[:, :, r_local * d:(r_local + 1) * d])
    return Corep(target.product, np.concatenate(cols, axis=2))


def embed_base_corep(inst: SemidirectInstance, u: Corep) -> Corep:
    """View a corep of G as a corep of G x| {e} (the trivial principal piece)."""
    from .groups import trivial_subgroup
    sub = trivial_subgroup(inst.top.lam_full)
    target = inst.principal(sub)
    if u.parent is not inst.base:
        raise ValidationError("expected a corepresentation of the base")
    return Corep(target.product, u.entries.copy())


# -- covariant pairs -------------------------------------------------------------

def split_covariant(inst: SemidirectInstance, u: Corep) -> tuple[Corep, ProjectiveRep]:
    """U -> (U_G, U_Lambda) via the counits of the two factors."""
    d = inst.base.dim
    e_local = inst.lam.identity
    ug = Corep(inst.base, inst.block(u.entries, e_local).copy())
    mats = np.einsum("ijrc,c->rij",
                     u.entries.reshape(u.dim, u.dim, inst.lam.order, d),
                     inst.base.counit)
    ul = ordinary_rep(inst.lam, mats)
    return ug, ul


def check_covariant(inst: SemidirectInstance, ug: Corep, ul: ProjectiveRep,
                    tol: float = TOL_VERIFY):
    """Residual of sum_k f_ik(r) u_kj = sum_k f_kj(r) alpha*_r(u_ik), with witness."""
    worst, witness = 0.0, None
    for r_local in inst.lam.elements():
        f = ul.mats[r_local]
        m = inst.alpha_local(r_local)
        lhs = np.einsum("ik,kjc->ijc", f, ug.entries)
        rhs = np.einsum("kj,ikc,pc->ijp", f, ug.entries, m, optimize=True)
        res = np.abs(lhs - rhs)
        local_worst = float(res.max())
        if local_worst > worst:
            ij = np.unravel_index(np.argmax(res.max(axis=-1)), (ug.dim, ug.dim))
            worst, witness = local_worst, (r_local, int(ij[0]), int(ij[1]))
    return worst <= tol, worst, witness


def join_covariant(inst: SemidirectInstance, ug: Corep, ul: ProjectiveRep,
                   tol: float = TOL_VERIFY) -> Corep:
    """U = (U_G)_12 (U_Lambda)_13 for a covariant pair; U_ij = sum_k u_ik (x) f_kj."""
    if max_abs(ul.cocycle.values - 1.0) > tol:
        raise NotCovariant("the Lambda part must be an ordinary representation")
    ok, worst, witness = check_covariant(inst, ug, ul, tol)
    if not ok:
        raise NotCovariant(f"covariance residual {worst:.2e} at (r, i, j) = {witness}")
    d = inst.base.dim
    n = ug.dim
    entries = np.zeros((n, n, inst.lam.order, d), dtype=complex)
    for r_local in inst.lam.elements():
        entries[:, :, r_local, :] = np.einsum("ikc,kj->ijc", ug.entries,
                                              ul.mats[r_local])
    return Corep(inst.product, entries.reshape(n, n, inst.dim))


# -- conjugation isomorphisms and the r. action ----------------------------------

class ConjugationIso:
    """The Hopf *-isomorphism alpha*_r (x) Adj*_r from G x| Lambda0 to G x| rLambda0r^-1.

    `matrix` maps coefficient vectors on the *target* instance (over
    r Lambda0 r^{-1}) to coefficient vectors on the source (over Lambda0),
    implementing the pullback e_i (x) delta_{r s r^{-1}} -> alpha*_r(e_i) (x) delta_s.
    """

    def __init__(self, inst: SemidirectInstance, sub: Subgroup, r: int):
        self.source = inst.principal(sub)
        self.target = inst.principal(conjugate_subgroup(sub, r))
        self.r = r
        lam_full = inst.top.lam_full
        d = inst.base.dim
        m_r = inst.top.alpha[r].matrix
        mat = np.zeros((self.source.dim, self.target.dim), dtype=complex)
        for s_local, s in enumerate(sub.elements):
            t = lam_full.conjugate(r, s)
            t_local = self.target.subgroup.to_local(t)
            mat[s_local * d:(s_local + 1) * d, t_local * d:(t_local + 1) * d] = m_r
        self.matrix = mat

    def pullback(self, vec: np.ndarray) -> np.ndarray:
        return self.matrix @ vec


def conj_iso(inst: SemidirectInstance, sub: Subgroup, r: int) -> ConjugationIso:
    return ConjugationIso(inst, sub, r)


def instance_of_corep(inst: SemidirectInstance, u: Corep) -> SemidirectInstance:
    for cand in inst.top._principal_cache.values():
        if cand.product is u.parent:
            return cand
    raise ValidationError("corep does not belong to any cached principal instance")


def act_corep(inst: SemidirectInstance, r: int, u: Corep) -> Corep:
    """r . U = (id (x) alpha*_{r^{-1}} (x) Adj*_{r^{-1}})(U).

    U is a corep of G x| Lambda0 (where Lambda0 = inst_of(u).subgroup); the
    result is a corep of G x| r Lambda0 r^{-1}.
    """
    top = inst.top
    sub = instance_of_corep(inst, u).subgroup
    # The pullback by (alpha*_{r^{-1}} (x) Adj*_{r^{-1}}) from the instance over
    # Lambda0 is exactly the conjugation iso of r Lambda0 r^{-1} along r^{-1}.
    iso = ConjugationIso(top, conjugate_subgroup(sub, r), top.lam_full.inverse(r))
    entries = np.einsum("pc,ijc->ijp", iso.matrix, u.entries)
    return Corep(iso.source.product, entries)


def extend(inst: SemidirectInstance, sub_inst: SemidirectInstance,
           vec: np.ndarray) -> np.ndarray:
    """Zero-fill an element of A (x) C(Lambda0) into A (x) C(Lambda)."""
    d = inst.base.dim
    out = np.zeros(inst.dim, dtype=complex)
    for s_local, p in enumerate(sub_inst.subgroup.elements):
        r_local = inst.subgroup.to_local(p)
        out[r_local * d:(r_local + 1) * d] = vec[s_local * d:(s_local + 1) * d]
    return out

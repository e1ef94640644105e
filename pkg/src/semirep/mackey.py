"""Representation parameters and the classification/fusion pipeline.

A representation parameter (u, V, v) over an isotropy subgroup Lambda0 packs
an irreducible corep u of the base, a covariant projective representation V
of Lambda0 on the space of u, and a projective representation v with the
opposite cocycle. Distinguished parameters (Lambda0 = the full stabilizer of
[u]) induce exactly the irreducibles of G x| Lambda; fusion is computed from
incidence numbers over triple coset sums and cross-checked against two
independent oracles.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._linalg import TOL_ACCEPT, TOL_VERIFY, as_int, first_entry_phase, max_abs
from .cohomology import Cochain2, cocycle_inverse, cocycle_product
from .corep import (Corep, act, conjugate, intertwiner_basis, irr_action,
                    irr_enumerate, mor_dim, tensor as corep_tensor)
from .errors import (CompletenessFailure, GramFailure, NonIntegerCoefficient,
                     NonUnitaryExtraction, NotCovariant, NotStabilized,
                     OracleDisagreement, GaugeFailure, ValidationError)
from .groups import (Subgroup, conjugate_intersection, conjugate_subgroup,
                     left_cosets, orbits, stabilizer)
from .induction import induce
from .oracle import module_hom_dim
from .projective import (ProjectiveRep, cocycle_of, contragredient,
                         irreducible_projreps, ordinary_rep, proj_mor_dim,
                         rescale, tensor as proj_tensor, transitional_map)
from .semidirect import (SemidirectInstance, act_corep, instance_of_corep,
                         join_covariant, restrict_corep)


# -- parameters -----------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class GRParameter:
    """Generalized representation parameter: u need not be irreducible."""

    u: Corep
    V: ProjectiveRep
    v: ProjectiveRep
    lambda0: Subgroup

    def validate(self, inst: SemidirectInstance, tol: float = TOL_VERIFY):
        if self.V.dim != self.u.dim:
            raise ValidationError("V must act on the carrier space of u")
        if self.V.group != self.lambda0.group or self.v.group != self.lambda0.group:
            raise ValidationError("V and v must be representations of lambda0")
        res = covariance_residual(inst, self.u, self.V, self.lambda0)
        if res > tol:
            raise NotCovariant(f"V is not covariant with u (residual {res:.2e})")
        opp = max_abs(self.V.cocycle.values * self.v.cocycle.values - 1.0)
        if opp > TOL_ACCEPT:
            raise ValidationError(f"V and v do not have opposing cocycles ({opp:.2e})")


@dataclass(frozen=True, eq=False)
class RepParameter(GRParameter):
    """A genuine parameter: u is additionally irreducible."""

    def validate(self, inst: SemidirectInstance, tol: float = TOL_VERIFY):
        super().validate(inst, tol)
        if mor_dim(self.u, self.u) != 1:
            raise ValidationError("parameter requires an irreducible u")


def act_base(inst: SemidirectInstance, r: int, u: Corep) -> Corep:
    """The base-level translate r . u = (id (x) alpha*_{r^{-1}})(u)."""
    return act(r, u, inst.top.alpha, inst.top.lam_full)


def covariance_residual(inst: SemidirectInstance, u: Corep, v: ProjectiveRep,
                        sub: Subgroup) -> float:
    worst = 0.0
    for local, r0 in enumerate(sub.elements):
        moved = act_base(inst, r0, u)
        t = v.mats[local]
        lhs = np.einsum("ik,kjc->ijc", t, moved.entries)
        rhs = np.einsum("ikc,kj->ijc", u.entries, t)
        worst = max(worst, max_abs(lhs - rhs))
    return worst


def stabilizer_of_class(inst: SemidirectInstance, u: Corep) -> Subgroup:
    lam = inst.top.lam_full
    elems = tuple(r for r in lam.elements()
                  if mor_dim(act_base(inst, r, u), u) >= 1)
    return Subgroup(lam, elems)


def covariant_projective(inst: SemidirectInstance, u: Corep, sub: Subgroup,
                         tol: float = TOL_VERIFY) -> ProjectiveRep:
    """The covariant projective representation of Lambda0 attached to u.

    For each r0 the unitary spanning Mor(r0 . u, u), gauged so that the first
    entry above 1e-8 (row-major) is real positive; V(e) is the identity.
    """
    lam = inst.top.lam_full
    mats = np.zeros((sub.order, u.dim, u.dim), dtype=complex)
    for local, r0 in enumerate(sub.elements):
        if r0 == lam.identity:
            mats[local] = np.eye(u.dim)
            continue
        basis = intertwiner_basis(act_base(inst, r0, u), u)
        if not basis:
            raise NotStabilized(f"Mor(r0 . u, u) = 0 for r0 = {r0}")
        t = basis[0]
        t = t * np.sqrt(u.dim) / np.linalg.norm(t)
        phase = first_entry_phase(t)
        if phase is None:
            raise GaugeFailure("no matrix entry above the gauge threshold")
        t = t * np.conj(phase)
        if max_abs(t @ t.conj().T - np.eye(u.dim)) > tol:
            raise NotStabilized(f"intertwiner for r0 = {r0} is not unitary")
        mats[local] = t
    v = ProjectiveRep(sub.group, mats, cocycle_of(sub.group, mats))
    res = covariance_residual(inst, u, v, sub)
    if res > tol:
        raise NotCovariant(f"constructed V fails covariance ({res:.2e})")
    return v


# -- moving parameters around ----------------------------------------------------

def restrict_projective(v: ProjectiveRep, sub_from: Subgroup,
                        sub_to: Subgroup) -> ProjectiveRep:
    """Restrict a projective rep between (global) subgroups, sub_to <= sub_from."""
    if not sub_to.is_subset_of(sub_from):
        raise ValidationError("restriction target is not a subgroup of the source")
    locs = [sub_from.to_local(p) for p in sub_to.elements]
    mats = v.mats[np.asarray(locs)]
    vals = v.cocycle.values[np.ix_(locs, locs)]
    return ProjectiveRep(sub_to.group, mats, Cochain2(sub_to.group, vals))


def translate_projective(v: ProjectiveRep, sub_from: Subgroup,
                         r: int) -> tuple[ProjectiveRep, Subgroup]:
    """(r . v)(r a r^{-1}) = v(a), a projective rep of r Lambda0 r^{-1}."""
    lam = sub_from.parent
    sub_to = conjugate_subgroup(sub_from, r)
    n = sub_from.order
    mats = np.zeros_like(v.mats)
    vals = np.zeros((n, n), dtype=complex)
    srcs = [sub_from.to_local(lam.conjugate(lam.inverse(r), p))
            for p in sub_to.elements]
    for i, si in enumerate(srcs):
        mats[i] = v.mats[si]
        for j, sj in enumerate(srcs):
            vals[i, j] = v.cocycle.values[si, sj]
    return ProjectiveRep(sub_to.group, mats, Cochain2(sub_to.group, vals)), sub_to


def translate_param(inst: SemidirectInstance, r: int, p: GRParameter) -> GRParameter:
    """r . (u, V, v) over r Lambda0 r^{-1}."""
    moved_u = act_base(inst, r, p.u)
    moved_v, sub_to = translate_projective(p.V, p.lambda0, r)
    moved_w, _ = translate_projective(p.v, p.lambda0, r)
    cls = RepParameter if isinstance(p, RepParameter) else GRParameter
    return cls(moved_u, moved_v, moved_w, sub_to)


def restrict_param(p: GRParameter, sub_to: Subgroup) -> GRParameter:
    cls = RepParameter if isinstance(p, RepParameter) else GRParameter
    return cls(p.u, restrict_projective(p.V, p.lambda0, sub_to),
               restrict_projective(p.v, p.lambda0, sub_to), sub_to)


# -- the CSR corepresentation ----------------------------------------------------

def csr_corep(inst: SemidirectInstance, p: GRParameter,
              tol: float = TOL_VERIFY) -> Corep:
    """The corep of G x| Lambda0 packaged by a (generalized) parameter."""
    sub_inst = inst.principal(p.lambda0)
    nv, nu = p.v.dim, p.u.dim
    eye = np.eye(nv)
    ug_entries = np.einsum("ab,ijc->aibjc", eye, p.u.entries).reshape(
        nv * nu, nv * nu, inst.base.dim)
    ug = Corep(inst.base, ug_entries)
    ul_mats = np.stack([np.kron(p.v.mats[s], p.V.mats[s])
                        for s in range(p.lambda0.order)])
    ul = ordinary_rep(sub_inst.lam, ul_mats)
    return join_covariant(sub_inst, ug, ul, tol)


def param_mor_dim(inst: SemidirectInstance, p1: RepParameter, p2: RepParameter,
                  verify: bool = True) -> int:
    """dim Mor(U1, U2) through the transitional-map route.

    Zero if [u1] != [u2]; otherwise transport V1 along a unitary intertwiner
    and count morphisms of the v's after rescaling. Optionally cross-checked
    against mor_dim of the packaged coreps.
    """
    if p1.lambda0.elements != p2.lambda0.elements:
        raise ValidationError("parameters live over different subgroups")
    if p1.u.dim != p2.u.dim or mor_dim(p1.u, p2.u) == 0:
        value = 0
    else:
        t = intertwiner_basis(p1.u, p2.u)[0]
        t = t * np.sqrt(p1.u.dim) / np.linalg.norm(t)
        moved = ProjectiveRep(p1.lambda0.group,
                              np.einsum("ia,rab,jb->rij", t, p1.V.mats, np.conj(t)),
                              p1.V.cocycle)
        b = transitional_map(moved, p2.V)
        value = proj_mor_dim(p1.v, rescale(b, p2.v))
    if verify:
        direct = mor_dim(csr_corep(inst, p1), csr_corep(inst, p2))
        if direct != value:
            raise OracleDisagreement(
                f"param_mor_dim gives {value}, corep mor_dim gives {direct}")
    return value


# -- classification ---------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class ClassifiedIrr:
    label: str
    parameter: RepParameter
    csr: Corep
    induced: Corep
    character: np.ndarray = field(repr=False)
    orbit: tuple[int, ...]
    orbit_rep: int
    cocycle_trivial: bool

    @property
    def dim(self) -> int:
        return int(self.induced.dim)


def classify(inst: SemidirectInstance, seed: int = 7,
             tol: float = TOL_VERIFY) -> list[ClassifiedIrr]:
    """All irreducibles of G x| Lambda via distinguished parameters.

    One orbit representative per Lambda-orbit on Irr(G), its full stabilizer,
    the attached covariant projective V, and every irreducible v with the
    opposite cocycle. Deduplication and completeness are certified by the
    character Gram matrix and the Peter-Weyl count.
    """
    top = inst.top
    lam = top.lam_full
    xs = irr_enumerate(top.base, seed)
    action = irr_action(top.base, lam, top.alpha, seed)
    h = top.product
    out: list[ClassifiedIrr] = []
    for orb in orbits(action):
        x = min(orb)
        u = xs[x]
        sub = stabilizer(action, x)
        v_big = covariant_projective(top, u, sub)
        vs = irreducible_projreps(sub.group, cocycle_inverse(v_big.cocycle), seed)
        trivial_class = any(w.dim == 1 for w in vs)
        for v in vs:
            p = RepParameter(u, v_big, v, sub)
            p.validate(top, tol)
            csr = csr_corep(top, p)
            ind = induce(top, csr, tol)
            chi = ind.result.char_vec()
            norm = h.haar_vec(h.product(h.star_vec(chi), chi))
            if as_int(norm) != 1:
                raise GramFailure(
                    f"induced corep from orbit {orb} has character norm {norm}")
            dup = False
            for kept in out:
                g = h.haar_vec(h.product(h.star_vec(kept.character), chi))
                if as_int(g) != 0:
                    dup = True
                    break
            if dup:
                continue
            out.append(ClassifiedIrr(
                label=f"W{len(out)}", parameter=p, csr=csr, induced=ind.result,
                character=chi, orbit=tuple(orb), orbit_rep=x,
                cocycle_trivial=trivial_class))
    total = sum(w.dim ** 2 for w in out)
    if total != top.dim:
        raise CompletenessFailure(
            f"classification is incomplete: sum dim^2 = {total} != {top.dim}")
    gram = np.array([[h.haar_vec(h.product(h.star_vec(a.character), b.character))
                      for b in out] for a in out])
    if max_abs(gram - np.eye(len(out))) > TOL_ACCEPT:
        raise GramFailure("character Gram matrix of classified irreps is not identity")
    return out


# -- conjugates --------------------------------------------------------------------

def conjugate_parameter(inst: SemidirectInstance, p: RepParameter) -> RepParameter:
    """(u-bar, V^c, v^c), the parameter of the conjugate representation."""
    ubar, _rho = conjugate(p.u)
    q = RepParameter(ubar, contragredient(p.V), contragredient(p.v), p.lambda0)
    q.validate(inst)
    return q


def conjugation_pairing(inst: SemidirectInstance, w: ClassifiedIrr,
                        candidates: list[ClassifiedIrr]) -> str:
    """Label of the classified irrep equivalent to the conjugate of w."""
    top = inst.top
    h = top.product
    pbar = conjugate_parameter(top, w.parameter)
    chi = induce(top, csr_corep(top, pbar)).result.char_vec()
    for cand in candidates:
        g = h.haar_vec(h.product(h.star_vec(cand.character), chi))
        if as_int(g) == 1:
            return cand.label
    raise OracleDisagreement(f"conjugate of {w.label} matches no classified irrep")


# -- GRP reduction -----------------------------------------------------------------

def reduce_grp(inst: SemidirectInstance, g: GRParameter, u0: Corep,
               v0: ProjectiveRep, tol: float = TOL_VERIFY):
    """Reduce a GRP along (u0, V0); returns a RepParameter, or None when the
    isotypic component of [u0] in g.u is empty (callers score incidence 0)."""
    basis = intertwiner_basis(u0, g.u)
    n = len(basis)
    if n == 0:
        return None
    d0 = u0.dim
    cols = np.zeros((g.u.dim, n * d0), dtype=complex)
    for a, t in enumerate(basis):
        cols[:, a * d0:(a + 1) * d0] = t * np.sqrt(d0)
    if max_abs(cols.conj().T @ cols - np.eye(n * d0)) > tol:
        raise NonUnitaryExtraction("isotypic isometry is not orthonormal")
    order = g.lambda0.order
    v1_mats = np.zeros((order, n, n), dtype=complex)
    for local in range(order):
        vp = cols.conj().T @ g.V.mats[local] @ cols
        block = vp.reshape(n, d0, n, d0)
        v1 = np.einsum("ki,akbi->ab", np.conj(v0.mats[local]), block) / d0
        if max_abs(block - np.einsum("ab,ij->aibj", v1, v0.mats[local])) > 1e-6:
            raise NonUnitaryExtraction(
                f"compressed V does not factor through V0 at local element {local}")
        if max_abs(v1 @ v1.conj().T - np.eye(n)) > tol:
            raise NonUnitaryExtraction("extracted factor is not unitary")
        v1_mats[local] = v1
    omega1 = cocycle_product(g.V.cocycle, cocycle_inverse(v0.cocycle))
    v1_rep = ProjectiveRep(g.lambda0.group, v1_mats, omega1)
    if v1_rep.verify() > 1e-6:
        raise NonUnitaryExtraction("extracted factor fails projectivity")
    result = RepParameter(u0, v0, proj_tensor(g.v, v1_rep), g.lambda0)
    result.validate(inst)
    # character check: the reduced CSR matches the isotypic block of the GRP's CSR
    red_chi = csr_corep(inst, result).char_vec()
    big = csr_corep(inst, g)
    nv = g.v.dim
    iso = np.kron(np.eye(nv), cols)
    compressed = np.einsum("ia,ijc,jb->abc", np.conj(iso), big.entries, iso)
    blk_chi = np.einsum("iic->c", compressed)
    if max_abs(red_chi - blk_chi) > 1e-6:
        raise OracleDisagreement("reduced CSR does not match the isotypic block")
    return result


# -- incidence numbers and fusion ---------------------------------------------------

def incidence(inst: SemidirectInstance, params, reps, verify: bool = True) -> int:
    """The incidence number of three parameters at coset representatives.

    Computed by the character route over G x| (cap r_i Lambda_i r_i^{-1}) and,
    when verify is set, re-derived through the GRP-reduction route; both must
    agree exactly.
    """
    top = inst.top
    p1, p2, p3 = params
    r1, r2, r3 = reps
    meet = conjugate_intersection([p.lambda0 for p in params], list(reps))
    h0 = top.principal(meet).product

    chis = []
    for p, r in zip(params, reps):
        moved = act_corep(top, r, csr_corep(top, p))
        restricted = restrict_corep(instance_of_corep(top, moved), moved, meet)
        chis.append(restricted.char_vec())
    val = h0.haar_vec(h0.product_many(h0.star_vec(chis[0]), chis[1], chis[2]))
    m_char = as_int(val)

    if verify:
        moved = [restrict_param(translate_param(top, r, p), meet)
                 for p, r in zip(params, reps)]
        q1, q2, q3 = moved
        grp = GRParameter(corep_tensor(q2.u, q3.u), proj_tensor(q2.V, q3.V),
                          proj_tensor(q2.v, q3.v), meet)
        red = reduce_grp(top, grp, q1.u, q1.V)
        m_proj = 0 if red is None else proj_mor_dim(q1.v, red.v)
        if m_proj != m_char:
            raise OracleDisagreement(
                f"incidence routes disagree: characters {m_char}, reduction {m_proj}")
    return m_char


@dataclass(frozen=True, eq=False)
class FusionTable:
    irreps: list[ClassifiedIrr]
    coefficients: np.ndarray = field(repr=False)  # int cube N[w1][w2][w3]
    methods_agree: int = 3

    def entry(self, i: int, j: int, k: int) -> int:
        return int(self.coefficients[i, j, k])


def fusion_entry(inst: SemidirectInstance, w1: ClassifiedIrr, w2: ClassifiedIrr,
                 w3: ClassifiedIrr, verify_incidence: bool = True) -> int:
    """N_{w2,w3}^{w1} by the triple coset sum of incidence numbers."""
    top = inst.top
    lam = top.lam_full
    total = 0.0
    for z1, _ in left_cosets(w1.parameter.lambda0):
        for z2, _ in left_cosets(w2.parameter.lambda0):
            for z3, _ in left_cosets(w3.parameter.lambda0):
                meet = conjugate_intersection(
                    [w.parameter.lambda0 for w in (w1, w2, w3)], [z1, z2, z3])
                m = incidence(top, (w1.parameter, w2.parameter, w3.parameter),
                              (z1, z2, z3), verify=verify_incidence)
                total += m * meet.order / lam.order
    try:
        return as_int(total, tol=1e-6)
    except Exception as exc:
        raise NonIntegerCoefficient(str(exc)) from exc


def fusion(inst: SemidirectInstance, classified: list[ClassifiedIrr],
           verify_incidence: bool = True) -> FusionTable:
    """The full fusion cube, three-way checked.

    Every entry is computed by (1) the coset-sum incidence formula, (2) the
    Haar pairing of characters on G x| Lambda, and (3) dual-algebra module
    homs; any disagreement raises.
    """
    top = inst.top
    h = top.product
    k = len(classified)
    cube = np.zeros((k, k, k), dtype=int)
    for i2, w2 in enumerate(classified):
        for i3, w3 in enumerate(classified):
            t = corep_tensor(w2.induced, w3.induced)
            chi_t = h.product(w2.character, w3.character)
            for i1, w1 in enumerate(classified):
                n_formula = fusion_entry(top, w1, w2, w3, verify_incidence)
                n_char = as_int(h.haar_vec(h.product(h.star_vec(w1.character),
                                                     chi_t)))
                n_module = module_hom_dim(w1.induced, t)
                if not (n_formula == n_char == n_module):
                    raise OracleDisagreement(
                        f"fusion N[{w1.label}][{w2.label}][{w3.label}]: formula "
                        f"{n_formula}, characters {n_char}, modules {n_module}")
                cube[i1, i2, i3] = n_formula
    return FusionTable(irreps=list(classified), coefficients=cube)

"""Induction from principal subgroups, induced characters, Mackey criterion."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._linalg import TOL_VERIFY, as_int, max_abs
from .corep import Corep, mor_dim, verify_corep
from .errors import (CovarianceFailure, FormulaMismatch, OracleDisagreement,
                     ProjectionNotInvariant, ValidationError)
from .groups import conjugate_intersection, left_cosets
from .projective import ordinary_rep
from .semidirect import (SemidirectInstance, act_corep, check_covariant, extend,
                         instance_of_corep, join_covariant, restrict_corep,
                         split_covariant)


@dataclass(frozen=True, eq=False)
class InducedRep:
    source: Corep
    result: Corep
    isometry: np.ndarray = field(repr=False)  # columns embed K into l2(Lambda) (x) H


def induce(inst: SemidirectInstance, u: Corep, tol: float = TOL_VERIFY) -> InducedRep:
    """Induce a corep of G x| Lambda0 up to G x| Lambda.

    Builds the right-regular Lambda part and the twisted direct sum of the
    G part on l2(Lambda) (x) H, checks the invariance of the projection onto
    the covariant subspace K, and compresses.
    """
    top = inst.top
    sub_inst = instance_of_corep(inst, u)
    sub = sub_inst.subgroup
    lam = top.lam_full
    n = u.dim
    nl = lam.order
    ug, ul = split_covariant(sub_inst, u)

    # W~_Lambda(s): delta_r (x) xi -> delta_{r s^{-1}} (x) xi
    wl_mats = np.zeros((nl, nl * n, nl * n), dtype=complex)
    eye = np.eye(n)
    for s in lam.elements():
        for r in lam.elements():
            t = lam.mul(r, lam.inverse(s))
            wl_mats[s, t * n:(t + 1) * n, r * n:(r + 1) * n] = eye
    wl = ordinary_rep(lam, wl_mats)

    # W~_G = sum_s e_{s,s} (x) (id (x) alpha*_s)(U_G)
    wg_entries = np.zeros((nl * n, nl * n, top.base.dim), dtype=complex)
    for s in lam.elements():
        block = np.einsum("pc,ijc->ijp", top.alpha[s].matrix, ug.entries)
        wg_entries[s * n:(s + 1) * n, s * n:(s + 1) * n, :] = block
    wg = Corep(top.base, wg_entries)

    ok, worst, witness = check_covariant(top, wg, wl, tol)
    if not ok:
        raise CovarianceFailure(
            f"(W~_G, W~_Lambda) not covariant: residual {worst:.2e} at {witness}")

    # pi = |Lambda0|^{-1} sum_{r0, s} e_{r0 s, s} (x) U_Lambda(r0)
    pi = np.zeros((nl * n, nl * n), dtype=complex)
    for r0_local, r0 in enumerate(sub.elements):
        for s in lam.elements():
            t = lam.mul(r0, s)
            pi[t * n:(t + 1) * n, s * n:(s + 1) * n] += ul.mats[r0_local]
    pi /= sub.order

    res = max_abs(pi @ pi - pi)
    if res > tol:
        raise ProjectionNotInvariant(f"pi is not a projection (residual {res:.2e})")
    for s in lam.elements():
        res = max_abs(pi @ wl.mats[s] - wl.mats[s] @ pi)
        if res > tol:
            raise ProjectionNotInvariant(
                f"pi does not commute with W~_Lambda({s}) ({res:.2e})")
    res = max_abs(np.einsum("ik,kjc->ijc", pi, wg.entries)
                  - np.einsum("ikc,kj->ijc", wg.entries, pi))
    if res > tol:
        raise ProjectionNotInvariant(f"pi does not commute with W~_G ({res:.2e})")

    # Explicit orthonormal basis of K = range(pi): one block per left coset.
    cosets = left_cosets(sub)
    cols = []
    for rep, _ in cosets:
        for a in range(n):
            vec = np.zeros(nl * n, dtype=complex)
            for r0_local, r0 in enumerate(sub.elements):
                t = lam.mul(r0, rep)
                vec[t * n:(t + 1) * n] += ul.mats[r0_local][:, a]
            cols.append(vec / np.sqrt(sub.order))
    isometry = np.array(cols).T
    if max_abs(isometry.conj().T @ isometry - np.eye(isometry.shape[1])) > tol:
        raise ProjectionNotInvariant("coset basis of K is not orthonormal")
    if max_abs(pi @ isometry - isometry) > tol:
        raise ProjectionNotInvariant("coset basis does not lie in range(pi)")

    big = join_covariant(top, wg, wl, tol)
    compressed = np.einsum("ia,ijc,jb->abc", np.conj(isometry), big.entries, isometry)
    result = Corep(top.product, compressed)
    report = verify_corep(result, tol)
    if not report["pass"]:
        raise CovarianceFailure(
            f"induced corep fails verification (max {report['max']:.2e})")
    return InducedRep(source=u, result=result, isometry=isometry)


def induced_character(inst: SemidirectInstance, u: Corep,
                      tol: float = TOL_VERIFY) -> np.ndarray:
    """Character of Ind(U), by the averaged sum over all of Lambda.

    Both the |Lambda0|^{-1}-weighted full sum and the coset-representative sum
    are evaluated and must agree to 1e-12.
    """
    top = inst.top
    sub_inst = instance_of_corep(inst, u)
    sub = sub_inst.subgroup
    lam = top.lam_full

    full = np.zeros(top.dim, dtype=complex)
    for r in lam.elements():
        moved = act_corep(top, r, u)
        target = instance_of_corep(top, moved)
        full += extend(top, target, moved.char_vec())
    full /= sub.order

    coset = np.zeros(top.dim, dtype=complex)
    for rep, _ in left_cosets(sub):
        moved = act_corep(top, rep, u)
        target = instance_of_corep(top, moved)
        coset += extend(top, target, moved.char_vec())

    if max_abs(full - coset) > 1e-12:
        raise FormulaMismatch(
            f"full-sum and coset-sum induced characters differ by "
            f"{max_abs(full - coset):.2e}")
    return full


def ind_mor_dim(inst: SemidirectInstance, u: Corep, w: Corep,
                verify: bool = True) -> int:
    """dim Mor(Ind(U), Ind(W)) by the double-sum intertwiner formula.

    With verify=True the value is cross-checked against mor_dim on the
    explicitly constructed induced corepresentations.
    """
    top = inst.top
    lam = top.lam_full
    theta = instance_of_corep(inst, u).subgroup
    xi = instance_of_corep(inst, w).subgroup
    total = 0.0
    translates_u = {}
    translates_w = {}
    for r in lam.elements():
        translates_u[r] = act_corep(top, r, u)
        translates_w[r] = act_corep(top, r, w)
    for r in lam.elements():
        for s in lam.elements():
            meet = conjugate_intersection([theta, xi], [r, s])
            meet_inst = top.principal(meet)
            ru = restrict_corep(instance_of_corep(top, translates_u[r]),
                                translates_u[r], meet)
            sw = restrict_corep(instance_of_corep(top, translates_w[s]),
                                translates_w[s], meet)
            h = meet_inst.product
            pairing = h.haar_vec(h.product(h.star_vec(ru.char_vec()), sw.char_vec()))
            total += pairing.real * meet.order / lam.order
            if abs(pairing.imag) > 1e-8:
                raise OracleDisagreement("character pairing has an imaginary part")
    total /= theta.order * xi.order
    value = as_int(total)
    if verify:
        direct = mor_dim(induce(inst, u).result, induce(inst, w).result)
        if direct != value:
            raise OracleDisagreement(
                f"intertwiner formula gives {value}, direct mor_dim gives {direct}")
    return value


def mackey_irreducible(inst: SemidirectInstance, u: Corep) -> bool:
    """Mackey's criterion for irreducibility of Ind(U), U irreducible required."""
    top = inst.top
    lam = top.lam_full
    sub_inst = instance_of_corep(inst, u)
    sub = sub_inst.subgroup
    if mor_dim(u, u) != 1:
        raise ValidationError("Mackey criterion requires an irreducible input")
    sub_set = set(sub.elements)
    translates = {r: act_corep(top, r, u) for r in lam.elements()}
    for r in lam.elements():
        for s in lam.elements():
            if lam.mul(lam.inverse(r), s) in sub_set:
                continue
            meet = conjugate_intersection([sub, sub], [r, s])
            ru = restrict_corep(instance_of_corep(top, translates[r]),
                                translates[r], meet)
            sw = restrict_corep(instance_of_corep(top, translates[s]),
                                translates[s], meet)
            h = top.principal(meet).product
            pairing = h.haar_vec(h.product(h.star_vec(ru.char_vec()), sw.char_vec()))
            if as_int(pairing) != 0:
                return False
    return True

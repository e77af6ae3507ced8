"""Exhaustive projective point counts, the ground truth everything else
is compared against.

Points of P^(n-1)(F_q) are enumerated in normalized form (first nonzero
coordinate equal to 1), so each point is visited exactly once.  Polynomials
are given as lists of (coefficient, exponent-vector) monomials and evaluated
through the field's dlog tables in vectorized chunks; no character sums or
algebraic identities are involved anywhere in this module.
"""

from __future__ import annotations

import numpy as np

from .errors import BadDegreeError, BudgetExceededError, NotHomogeneousError
from .field import FqElem, FqField

ENUMERATION_BUDGET = 10**9

Monomial = tuple[FqElem, tuple[int, ...]]


def projective_count(field: FqField, monomials: list[Monomial], nvars: int, *, chunk: int = 1 << 20) -> int:
    """Number of points of {poly = 0} in P^(nvars-1)(F_q).

    An empty monomial list means the zero polynomial, whose locus is all of
    projective space.  All monomials must share one total degree.
    """
    degs = {sum(exps) for _, exps in monomials}
    if len(degs) > 1:
        raise NotHomogeneousError(f"mixed total degrees {sorted(degs)}")
    if any(len(exps) != nvars for _, exps in monomials):
        raise NotHomogeneousError("exponent vector length does not match nvars")
    if field.q ** (nvars - 1) > ENUMERATION_BUDGET:
        raise BudgetExceededError(
            f"q**(nvars-1) = {field.q**(nvars-1)} exceeds {ENUMERATION_BUDGET}"
        )
    mons = [(c.id, exps) for c, exps in monomials if not c.is_zero]
    total = 0
    for lead in range(nvars):
        total += _stratum_count(field, mons, nvars, lead, chunk)
    return total


def _stratum_count(field: FqField, mons, nvars: int, lead: int, chunk: int) -> int:
    """Points with x_0 = ... = x_{lead-1} = 0, x_lead = 1, the rest free."""
    q = field.q
    nfree = nvars - lead - 1
    npoints = q**nfree
    if not mons:
        return npoints
    count = 0
    for start in range(0, npoints, chunk):
        stop = min(start + chunk, npoints)
        flat = np.arange(start, stop, dtype=np.int64)
        coords: list[np.ndarray | None] = [None] * nvars
        rest = flat
        for v in range(nvars - 1, lead, -1):
            coords[v] = rest % q
            rest = rest // q
        acc = np.zeros(stop - start, dtype=np.int64)  # running sum of monomials, as ids
        for coeff_id, exps in mons:
            vals = _monomial_values(field, coords, lead, coeff_id, exps)
            acc = field.add_id_arrays(acc, vals)
        count += int(np.count_nonzero(acc == 0))
    return count


def _monomial_values(field: FqField, coords, lead: int, coeff_id: int, exps) -> np.ndarray:
    q1 = field.q1
    dlog = field.dlog_table
    n = len(coords)
    shape = None
    for v in range(lead + 1, n):
        shape = coords[v].shape
        break
    exp_acc = np.zeros(shape if shape else (1,), dtype=np.int64)
    nonzero = np.ones(shape if shape else (1,), dtype=bool)
    exp_acc += dlog[coeff_id]
    for v, d in enumerate(exps):
        if d == 0:
            continue
        if v < lead:
            return np.zeros(shape if shape else (1,), dtype=np.int64)  # a zero coordinate
        if v == lead:
            continue  # x_lead = 1 contributes nothing
        dl = dlog[coords[v]]
        nonzero &= dl >= 0
        exp_acc += d * dl
    ids = field.exp_table[exp_acc % q1]
    return np.where(nonzero, ids, 0)


def dwork_polynomial(field: FqField, degree: int, lam: FqElem) -> list[Monomial]:
    """x_1**d + ... + x_d**d - d*lam*x_1*...*x_d in d variables."""
    one = field.one
    mons: list[Monomial] = []
    for i in range(degree):
        exps = [0] * degree
        exps[i] = degree
        mons.append((one, tuple(exps)))
    coeff = -(field.elem(degree) * lam)
    mons.append((coeff, (1,) * degree))
    return mons


def deformed_diagonal_polynomial(field: FqField, d: int, h: tuple[int, ...], lam: FqElem) -> list[Monomial]:
    """x_1**d + ... + x_n**d - d*lam*x**h for a general weight vector h."""
    n = len(h)
    one = field.one
    mons: list[Monomial] = []
    for i in range(n):
        exps = [0] * n
        exps[i] = d
        mons.append((one, tuple(exps)))
    coeff = -(field.elem(d) * lam)
    mons.append((coeff, tuple(h)))
    return mons


def dwork_counts_by_lambda(field: FqField, degree: int, *, chunk: int = 1 << 20) -> np.ndarray:
    """Point count of the degree-d family member for every lambda, in one scan.

    Returns an integer array indexed by the element id of lambda.  Each
    projective point (x_1 : ... : x_d) is classified by S = sum x_i**d and
    P = prod x_i: when P = 0 the point lies on every fibre with S = 0 and on
    none otherwise; when P != 0 it lies on exactly the fibre
    lambda = S / (d P).  This is the same exhaustive scan as
    projective_count, shared across all fibres.
    """
    q, q1 = field.q, field.q1
    if q ** (degree - 1) > ENUMERATION_BUDGET:
        raise BudgetExceededError("enumeration larger than the budget")
    if field.elem(degree).is_zero:
        raise BadDegreeError("degree divisible by the characteristic")
    counts = np.zeros(q, dtype=np.int64)
    base_zero = 0  # points with P = 0, S = 0: on every fibre
    pow_d = np.zeros(q, dtype=np.int64)
    pow_d[field.exp_table] = field.exp_table[
        (np.arange(q1, dtype=np.int64) * degree) % q1
    ]
    d_exp = field.elem(degree).exp
    for lead in range(degree):
        nfree = degree - lead - 1
        npoints = q**nfree
        for start in range(0, npoints, chunk):
            stop = min(start + chunk, npoints)
            ssum = np.full(stop - start, 1, dtype=np.int64)  # id of x_lead**d = 1
            pexp = np.zeros(stop - start, dtype=np.int64)  # dlog of the product
            # strata after the first carry leading zero coordinates, so P = 0
            pzero = np.full(stop - start, lead > 0, dtype=bool)
            rest = np.arange(start, stop, dtype=np.int64)
            for _ in range(nfree):
                ids = rest % q
                rest = rest // q
                ssum = field.add_id_arrays(ssum, pow_d[ids])
                dl = field.dlog_table[ids]
                pzero |= dl < 0
                pexp += np.where(dl < 0, 0, dl)
            base_zero += int(np.count_nonzero(pzero & (ssum == 0)))
            live = ~pzero
            s_live = ssum[live]
            # lambda = S * (d * P)**(-1); S = 0 maps to lambda = 0
            lam_exp = (field.dlog_table[s_live] - d_exp - pexp[live]) % q1
            lam_ids = np.where(s_live == 0, 0, field.exp_table[lam_exp])
            counts += np.bincount(lam_ids, minlength=q)
    counts += base_zero
    return counts

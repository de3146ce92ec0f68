"""Deciding local-unitary equivalence through invariant comparison.

Two tuples of normal matrices are LU-equivalent exactly when all their
trace-monomial invariants agree, and finitely many suffice: the degree
bounds below give an explicit (astronomically loose) cutoff, while in
practice low degrees already separate inequivalent states.  For non-normal
tuples agreement is necessary but not known to be sufficient, so the
verdict carries a normality flag.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, log

import numpy as np

from .core import DEFAULT_TOL, OperatorTuple, as_dims, is_normal, partial_trace
from .evaluate import eval_contract
from .perms import TraceMonomial, enumerate_monomials, generator_girth_cap, identity_perm


def lu_degree_bound(dims, m=1) -> int:
    """Degree at which the trace-monomial invariants are guaranteed to
    generate, for m operators on subsystems of the given dimensions.

    max{2, ceil((3/8) * max d_i * m^2 * D^4 * (2n)^(2*delta))} with
    D = prod d_i and delta = sum (d_i - 1).  Exact integer arithmetic.
    """
    dims = as_dims(dims)
    if m < 1:
        raise ValueError("m must be >= 1")
    delta = sum(d - 1 for d in dims.sizes)
    val = Fraction(3, 8) * max(dims.sizes) * m**2 * dims.total**4 * (2 * dims.n) ** (2 * delta)
    return max(2, ceil(val))


def slocc_degree_bound(n, m=1) -> int:
    """Generating-degree cutoff for the SLOCC invariants of m pure n-qubit
    states: max{2, ceil((3/2) * m^2 * (2^n)^2 * n^(6n))}."""
    if n < 1 or m < 1:
        raise ValueError("n and m must be >= 1")
    val = Fraction(3, 2) * m**2 * (2**n) ** 2 * n ** (6 * n)
    return max(2, ceil(val))


@dataclass(frozen=True)
class Fingerprint:
    """Values of all canonical monomials up to a degree, in enumeration order."""

    dims: tuple[int, ...]
    m: int
    max_degree: int
    entries: tuple[tuple[TraceMonomial, complex], ...]

    @property
    def values(self):
        return tuple(v for _, v in self.entries)


def fingerprint(ops: OperatorTuple, max_degree, girth_filter=True, connected_only=True) -> Fingerprint:
    """Evaluate every canonical trace monomial of the tuple up to max_degree.

    With the girth filter on, rows are capped at the generating girth for
    their subsystem dimension; with connected_only, product monomials are
    skipped (their values are determined by the connected ones).
    """
    dims = ops.dims
    cap = generator_girth_cap(dims) if girth_filter else None
    mons = enumerate_monomials(
        dims.n, ops.m, max_degree, girth_cap=cap, connected_only=connected_only
    )
    return Fingerprint(
        dims=dims.sizes,
        m=ops.m,
        max_degree=max_degree,
        entries=tuple((mon, eval_contract(mon, ops)) for mon in mons),
    )


@dataclass(frozen=True)
class Verdict:
    """Outcome of an invariant-comparison run.

    ``separated`` True means a monomial with differing values was found
    (witness + both values recorded); False means all compared invariants
    agreed up to the stated degree, which for normal tuples is evidence of
    equivalence and for non-normal ones (``normal_certified`` False) is
    weaker.
    """

    separated: bool
    max_degree: int
    tol: float
    normal_certified: bool
    witness: TraceMonomial | None = None
    values: tuple[complex, complex] | None = None


def decide_lu_equiv(
    a: OperatorTuple,
    b: OperatorTuple,
    max_degree=4,
    tol=DEFAULT_TOL,
    girth_filter=True,
    connected_only=True,
) -> Verdict:
    """Compare all canonical invariants of two operator tuples up to a degree.

    Returns a separated verdict at the first monomial (in enumeration
    order) where |v_a - v_b| > tol * (1 + max(|v_a|, |v_b|)); otherwise an
    indistinguishable-up-to verdict.  Tuples must share dims and length.
    """
    if a.dims != b.dims:
        raise ValueError(f"dimension mismatch: {a.dims.sizes} vs {b.dims.sizes}")
    if a.m != b.m:
        raise ValueError(f"tuple length mismatch: {a.m} vs {b.m}")
    normal = all(is_normal(M) for M in a.matrices) and all(is_normal(M) for M in b.matrices)
    if not normal:
        warnings.warn(
            "inputs are not certified normal: invariant agreement is necessary "
            "for local-unitary equivalence but may not be sufficient",
            stacklevel=2,
        )
    cap = generator_girth_cap(a.dims) if girth_filter else None
    mons = enumerate_monomials(
        a.dims.n, a.m, max_degree, girth_cap=cap, connected_only=connected_only
    )
    for mon in mons:
        va = eval_contract(mon, a)
        vb = eval_contract(mon, b)
        if abs(va - vb) > tol * (1 + max(abs(va), abs(vb))):
            return Verdict(
                separated=True,
                max_degree=max_degree,
                tol=tol,
                normal_certified=normal,
                witness=mon,
                values=(va, vb),
            )
    return Verdict(separated=False, max_degree=max_degree, tol=tol, normal_certified=normal)


def renyi_monomial(n, trace_out, q) -> TraceMonomial:
    """The trace monomial computing Tr((Tr_A rho)^q) for a single density.

    q boxes all holding the same operator; rows for traced-out subsystems
    (A) carry the identity, the remaining rows one common q-cycle.
    """
    trace_out = set(trace_out)
    cycle = tuple((j + 1) % q for j in range(q))
    perms = tuple(identity_perm(q) if i in trace_out else cycle for i in range(n))
    return TraceMonomial(labels=(0,) * q, perms=perms)


def renyi_entropy(rho, dims, trace_out, q, tol=DEFAULT_TOL) -> float:
    """Order-q Renyi entropy of the reduction of rho onto the subsystems
    not in ``trace_out``:  log Tr((Tr_A rho)^q) / (1 - q).

    q must be an integer >= 2 (so the quantity is itself a trace-monomial
    invariant); rho must be a density matrix within tol.
    """
    dims = as_dims(dims)
    if not (isinstance(q, (int, np.integer)) and q >= 2):
        raise ValueError(f"q must be an integer >= 2, got {q!r}")
    trace_out = sorted(set(int(i) for i in trace_out))
    if any(i < 0 or i >= dims.n for i in trace_out):
        raise ValueError(f"trace_out indices out of range for {dims.n} subsystems")
    if not 0 < len(trace_out) < dims.n:
        raise ValueError("trace_out must be a nonempty proper subset of the subsystems")
    rho = np.asarray(rho, dtype=complex)
    D = dims.total
    if rho.shape != (D, D):
        raise ValueError(f"expected shape ({D}, {D}), got {rho.shape}")
    if np.max(np.abs(rho - rho.conj().T)) > tol:
        raise ValueError("rho is not Hermitian within tolerance")
    if abs(np.trace(rho).real - 1) > max(tol, 1e-12):
        raise ValueError("rho does not have unit trace within tolerance")
    if np.linalg.eigvalsh(rho).min() < -max(tol, 1e-12):
        raise ValueError("rho is not positive semidefinite within tolerance")
    keep = [i for i in range(dims.n) if i not in trace_out]
    reduced = partial_trace(rho, dims, keep)
    power = np.trace(np.linalg.matrix_power(reduced, q)).real
    return log(power) / (1 - q)

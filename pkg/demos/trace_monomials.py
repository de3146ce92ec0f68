"""Evaluating trace monomials of a two-qubit density matrix.

A trace monomial picks a few copies of the state (the "boxes"), one
permutation per subsystem, and contracts: on product operators each row
contributes one trace per cycle.  Every such value is unchanged by local
unitary rotations, which is what makes them useful state invariants.
"""

import numpy as np

from traceinv import (
    Dims,
    OperatorTuple,
    TraceMonomial,
    eval_contract,
    eval_reference,
    girth_of,
    is_connected,
    partial_trace,
)

dims = Dims((2, 2))

bell = np.zeros(4, dtype=complex)
bell[0] = bell[3] = 1 / np.sqrt(2)
rho = np.outer(bell, bell.conj())
ops = OperatorTuple(dims, (rho,))

print("state: the Bell pair (|00> + |11>)/sqrt(2), as a density matrix")
print()

cases = [
    ("trace", TraceMonomial(labels=(0,), perms=((0,), (0,)))),
    ("purity Tr rho^2", TraceMonomial(labels=(0, 0), perms=((1, 0), (1, 0)))),
    ("purity of reduction, Tr (Tr_2 rho)^2", TraceMonomial(labels=(0, 0), perms=((1, 0), (0, 1)))),
    ("a degree-3 mixed monomial", TraceMonomial(labels=(0, 0, 0), perms=((0, 2, 1), (1, 0, 2)))),
]

for name, mon in cases:
    v1 = eval_contract(mon, ops)
    v2 = eval_reference(mon, ops)
    print(f"{name}:")
    print(f"  monomial      {mon}")
    print(f"  girth         {girth_of(mon)}   connected: {is_connected(mon)}")
    print(f"  network engine  {v1.real:.12f}")
    print(f"  brute force     {v2.real:.12f}")
    print()

# the third case really is the reduced purity
red = partial_trace(rho, dims, keep={0})
print("check: Tr_2 rho =")
print(np.round(red, 12))
print(f"Tr (Tr_2 rho)^2 = {np.trace(red @ red).real:.12f}")
print()
print("a pure entangled state has purity 1 but maximally mixed reductions,")
print("so the reduced purity 1/2 is the signature the monomials see.")

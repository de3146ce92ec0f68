"""Factorizing monomials and drawing their contraction networks.

A monomial whose network falls apart is literally a product of smaller
invariants.  A connected one can still be redundant: if every row's cycle
lengths split the same way, a relocated sibling with the same cycle
structure factors -- the sibling, not necessarily the original, as the
second example shows numerically.
"""

import numpy as np

from traceinv import (
    Dims,
    OperatorTuple,
    TraceMonomial,
    eval_contract,
    factorize,
    render_svg,
)

aligned = TraceMonomial(labels=(0,) * 4, perms=((1, 0, 3, 2), (1, 0, 3, 2)))
misaligned = TraceMonomial(labels=(0,) * 4, perms=((1, 0, 3, 2), (2, 3, 0, 1)))
blocked = TraceMonomial(labels=(0,) * 4, perms=((1, 2, 0, 3), (1, 0, 3, 2)))

for name, mon in [("aligned", aligned), ("misaligned", misaligned), ("3+1 vs 2+2", blocked)]:
    res = factorize(mon)
    print(f"{name}: {mon}")
    if res.reducible:
        print(f"  factors: [{res.left}] * [{res.right}]   relocated: {res.relocated}")
    else:
        print("  irreducible (no common cycle-length split)")
print()

# the misaligned monomial's own value differs from the product; the
# relocated sibling's value equals it
rng = np.random.default_rng(9)
M = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
ops = OperatorTuple(Dims((2, 2)), (M,))
res = factorize(misaligned)
print("on a random matrix:")
print(f"  misaligned original : {eval_contract(misaligned, ops):.6f}")
print(f"  relocated sibling   : {eval_contract(res.factored, ops):.6f}")
print(f"  product of factors  : {eval_contract(res.left, ops) * eval_contract(res.right, ops):.6f}")
print()

for name, mon in [("aligned", aligned), ("misaligned", misaligned)]:
    out = f"network_{name}.svg"
    render_svg(mon, path=out)
    print(f"wrote {out}")
print("open the files to see why one splits visually and the other only after relocation")

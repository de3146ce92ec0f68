"""Permutation tuples, trace-monomial bookkeeping, and monomial enumeration.

A permutation on ell box positions is a tuple of 0-based images: ``p[j]`` is
where position j is sent.  A trace monomial is a label vector P (entries are
0-based indices into an operator tuple) together with one permutation per
subsystem row; on a tuple of simple tensors it evaluates, row by row, to a
product of one trace per cycle, and extends multilinearly to everything else.

Cycle-notation strings (as accepted by the command line tools) are 1-based:
``"(2 3);(1 2)"`` has one parenthesized-cycle list per row, rows separated by
semicolons, omitted positions fixed.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from math import factorial

from .errors import UnsupportedSizeError

#: Hard cap on monomial degree for enumeration / canonicalization.
MAX_DEGREE = 6

#: Cap on brute-force box count for canonical forms.
MAX_BOXES = 8

#: Cap on raw (P, sigma) candidates visited in one enumeration call.
ENUM_BUDGET = 4_000_000


def identity_perm(size):
    return tuple(range(size))


def invert_perm(p):
    inv = [0] * len(p)
    for j, pj in enumerate(p):
        inv[pj] = j
    return tuple(inv)


def compose(p, q):
    """(p o q)(j) = p[q[j]]."""
    return tuple(p[qj] for qj in q)


def cycle_decomposition(p):
    """All cycles of p (fixed points included), each rotated to start at its
    minimum, listed in order of that minimum."""
    seen = [False] * len(p)
    cycles = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        j = p[start]
        while j != start:
            cyc.append(j)
            seen[j] = True
            j = p[j]
        cycles.append(tuple(cyc))
    return tuple(cycles)


def perm_from_cycles(cycles, size):
    p = list(range(size))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            if not 0 <= a < size:
                raise ValueError(f"cycle entry {a} out of range for size {size}")
            p[a] = b
    return tuple(p)


def format_perm(p):
    """1-based cycle notation, fixed points omitted; '()' for the identity."""
    parts = [
        "(" + " ".join(str(j + 1) for j in cyc) + ")"
        for cyc in cycle_decomposition(p)
        if len(cyc) > 1
    ]
    return "".join(parts) if parts else "()"


def format_perm_tuple(perms):
    return ";".join(format_perm(p) for p in perms)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_perm(text, size):
    """Parse one row of 1-based cycle notation into an image tuple."""
    text = text.strip()
    stripped = _CYCLE_RE.sub("", text)
    if stripped.strip():
        raise ValueError(f"unparseable permutation text: {text!r}")
    cycles = []
    used = set()
    for body in _CYCLE_RE.findall(text):
        entries = body.replace(",", " ").split()
        if not entries:
            continue
        try:
            cyc = tuple(int(e) - 1 for e in entries)
        except ValueError:
            raise ValueError(f"non-integer cycle entry in {text!r}") from None
        for e in cyc:
            if not 0 <= e < size:
                raise ValueError(f"cycle entry {e + 1} out of range 1..{size} in {text!r}")
            if e in used:
                raise ValueError(f"position {e + 1} repeated in {text!r}")
            used.add(e)
        if len(cyc) > 1:
            cycles.append(cyc)
    return perm_from_cycles(cycles, size)


def parse_perm_tuple(text, size):
    return tuple(parse_perm(row, size) for row in text.split(";"))


@dataclass(frozen=True)
class TraceMonomial:
    """A label vector plus one permutation per subsystem row.

    labels : tuple of 0-based operator indices, one per box position.
    perms  : tuple of n image tuples, each a permutation of range(len(labels)).
    """

    labels: tuple[int, ...]
    perms: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(int(x) for x in self.labels))
        object.__setattr__(self, "perms", tuple(tuple(int(x) for x in p) for p in self.perms))
        ell = len(self.labels)
        if ell == 0:
            raise ValueError("monomial needs at least one box")
        if len(self.perms) == 0:
            raise ValueError("monomial needs at least one subsystem row")
        if any(x < 0 for x in self.labels):
            raise ValueError(f"labels must be nonnegative, got {self.labels}")
        for i, p in enumerate(self.perms):
            if sorted(p) != list(range(ell)):
                raise ValueError(f"row {i} is not a permutation of {ell} positions: {p}")

    @property
    def n_boxes(self) -> int:
        return len(self.labels)

    @property
    def n_rows(self) -> int:
        return len(self.perms)

    @property
    def degree(self) -> int:
        return len(self.labels)

    def __str__(self):
        labels = ",".join(str(x + 1) for x in self.labels)
        return f"{labels} {format_perm_tuple(self.perms)}"


def girth_of(mon: TraceMonomial):
    """Per-row maximum cycle length."""
    return tuple(max(len(c) for c in cycle_decomposition(p)) for p in mon.perms)


def generator_girth_cap(dims):
    """Per-subsystem girth cap sufficient for a generating set of invariants.

    d*(d+1)/2 for d <= 3, d^2 otherwise.
    """
    sizes = dims.sizes if hasattr(dims, "sizes") else tuple(dims)
    return tuple(d * (d + 1) // 2 if d <= 3 else d * d for d in sizes)


def network_edges(mon: TraceMonomial):
    """Undirected edges {j, sigma_i(j)} over box positions, self-loops dropped."""
    edges = set()
    for p in mon.perms:
        for j, pj in enumerate(p):
            if j != pj:
                edges.add((min(j, pj), max(j, pj)))
    return edges


def is_connected(mon: TraceMonomial) -> bool:
    ell = mon.n_boxes
    if ell == 1:
        return True
    adj = {j: set() for j in range(ell)}
    for a, b in network_edges(mon):
        adj[a].add(b)
        adj[b].add(a)
    seen = {0}
    stack = [0]
    while stack:
        for nb in adj[stack.pop()]:
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == ell


def _relabel(labels, perms, tau, tau_inv):
    new_labels = tuple(labels[tau_inv[j]] for j in range(len(labels)))
    new_perms = tuple(
        tuple(tau[p[tau_inv[j]]] for j in range(len(labels))) for p in perms
    )
    return new_labels, new_perms


def _tau_pairs(ell):
    return [(tau, invert_perm(tau)) for tau in itertools.permutations(range(ell))]


def canonical_form(mon: TraceMonomial) -> TraceMonomial:
    """Lexicographically minimal representative under box relabeling.

    Relabeling by tau sends labels to labels o tau^{-1} and conjugates every
    row by tau; the value of the monomial on any operator tuple is unchanged.
    Brute force over all tau, so limited to MAX_BOXES positions.
    """
    ell = mon.n_boxes
    if ell > MAX_BOXES:
        raise UnsupportedSizeError(f"canonical form supports at most {MAX_BOXES} boxes, got {ell}")
    best = min(_relabel(mon.labels, mon.perms, tau, tau_inv) for tau, tau_inv in _tau_pairs(ell))
    return TraceMonomial(labels=best[0], perms=best[1])


def enumerate_monomials(
    n,
    m,
    max_degree,
    girth_cap=None,
    connected_only=False,
    canonical=True,
):
    """List trace monomials for n subsystem rows and m operator labels.

    With ``canonical=True`` (default) one representative per relabeling class
    is returned, in canonical form; with ``canonical=False`` the raw product
    listing is returned (every (P, sigma) pair, no dedup).  ``girth_cap`` is
    an optional per-row cap on the maximum cycle length; ``connected_only``
    keeps only monomials whose contraction network is connected (the rest are
    products of smaller ones).  Output is sorted by degree then lexicographic
    key, so it is deterministic.
    """
    if n < 1 or m < 1 or max_degree < 1:
        raise ValueError("n, m, max_degree must all be >= 1")
    if max_degree > MAX_DEGREE:
        raise UnsupportedSizeError(f"max_degree capped at {MAX_DEGREE}, got {max_degree}")
    if girth_cap is not None:
        girth_cap = tuple(girth_cap)
        if len(girth_cap) != n:
            raise ValueError(f"girth_cap must have one entry per row, got {girth_cap}")

    work = sum(factorial(ell) ** n * m**ell for ell in range(1, max_degree + 1))
    if work > ENUM_BUDGET:
        raise UnsupportedSizeError(
            f"enumeration would visit ~{work} candidates (budget {ENUM_BUDGET}); "
            "reduce max_degree, n, or m"
        )

    out = []
    for ell in range(1, max_degree + 1):
        perms_ell = list(itertools.permutations(range(ell)))
        taus = _tau_pairs(ell) if canonical else None
        seen = set()
        block = []
        for P in itertools.product(range(m), repeat=ell):
            for sigma in itertools.product(perms_ell, repeat=n):
                key = (P, sigma)
                if canonical:
                    if key in seen:
                        continue
                    orbit = {_relabel(P, sigma, tau, tau_inv) for tau, tau_inv in taus}
                    seen |= orbit
                    key = min(orbit)
                mon = TraceMonomial(labels=key[0], perms=key[1])
                if girth_cap is not None and any(
                    g > c for g, c in zip(girth_of(mon), girth_cap)
                ):
                    continue
                if connected_only and not is_connected(mon):
                    continue
                block.append(mon)
        block.sort(key=lambda mo: (mo.labels, mo.perms))
        out.extend(block)
    return out

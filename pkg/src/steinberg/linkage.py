"""Affine Weyl group orbits, alcove geometry, and special points.

The affine group at level p is the finite Weyl group extended by
translations by p times the root lattice, acting through the rho-shifted
dot action.  Orbit membership is decided exactly: two weights are linked
when some finite Weyl element carries one shifted weight onto the other
modulo p times the root lattice.  The closed bottom alcove is a fundamental
domain for the dot action, and every weight normalizes into it by
alternating dominant reflections with reflections in the level-p walls.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .rootdata import (
    Lattice,
    RootSystem,
    in_lattice,
    is_dominant,
    pairing,
    require_in_lattice,
)
from .weyl import generate, make_dominant


def _in_p_root_lattice(rs: RootSystem, delta, p: int) -> bool:
    # delta lies in p * ZR iff its exact simple-root coordinates are
    # integers divisible by p.
    den = rs.inv_den
    for row in rs.inv_num:
        if sum(row[j] * delta[j] for j in range(rs.rank)) % (den * p) != 0:
            return False
    return True


def linked_unchecked(rs: RootSystem, group, lam, mu, p: int) -> bool:
    shifted_mu = tuple(x + 1 for x in mu)
    shifted_lam = tuple(x + 1 for x in lam)
    for w in group.elements:
        img = w.act(shifted_lam)
        delta = tuple(a - b for a, b in zip(shifted_mu, img))
        if _in_p_root_lattice(rs, delta, p):
            return True
    return False


def linked(rs: RootSystem, lam, mu, p: int,
           lattice: Lattice = Lattice.SIMPLY_CONNECTED) -> bool:
    """Whether two weights lie in one dot orbit of the level-p affine group."""
    if p < 2:
        raise DomainError(f"linkage needs p >= 2, got {p}")
    lam, mu = tuple(lam), tuple(mu)
    require_in_lattice(rs, lam, lattice)
    require_in_lattice(rs, mu, lattice)
    return linked_unchecked(rs, generate(rs), lam, mu, p)


@dataclass(frozen=True)
class AlcovePosition:
    """A weight's pairings against the alcove walls at level p.

    ``wall_pairings`` lists the shifted pairings over the positive roots in
    root order; ``status`` is "interior", "wall", or "exterior-of-closure"
    relative to the closed bottom alcove.
    """

    weight: tuple
    wall_pairings: tuple
    status: str


def alcove_position(rs: RootSystem, weight, p: int) -> AlcovePosition:
    weight = tuple(weight)
    shifted = tuple(x + 1 for x in weight)
    vals = tuple(pairing(rs, shifted, i) for i in range(rs.num_positive_roots))
    if all(0 < v < p for v in vals):
        status = "interior"
    elif all(0 <= v <= p for v in vals):
        status = "wall"
    else:
        status = "exterior-of-closure"
    return AlcovePosition(weight=weight, wall_pairings=vals, status=status)


def fundamental_alcove_rep(rs: RootSystem, weight, p: int):
    """The unique point of the closed bottom alcove in the dot orbit.

    Alternates dominant normalization with reflections in the walls at
    level p; each wall reflection strictly shrinks the invariant norm of the
    shifted weight, so the walk terminates.
    """
    if p < 2:
        raise DomainError(f"alcove normalization needs p >= 2, got {p}")
    x = tuple(x + 1 for x in weight)
    nroots = rs.num_positive_roots
    while True:
        x, _ = make_dominant(rs, x)
        worst = None
        worst_val = p
        for i in range(nroots):
            v = pairing(rs, x, i)
            if v > worst_val:
                worst, worst_val = i, v
        if worst is None:
            return tuple(c - 1 for c in x)
        f = rs.positive_fund[worst]
        x = tuple(c - (worst_val - p) * a for c, a in zip(x, f))


def is_special_point(rs: RootSystem, weight, p: int) -> bool:
    """Whether every positive-root pairing of weight + rho is divisible by p."""
    if p < 2:
        raise DomainError(f"special-point test needs p >= 2, got {p}")
    shifted = tuple(x + 1 for x in weight)
    return all(
        pairing(rs, shifted, i) % p == 0 for i in range(rs.num_positive_roots)
    )


def st_level(rs: RootSystem, weight, p: int,
             lattice: Lattice = Lattice.SIMPLY_CONNECTED) -> int:
    """Largest r with weight = p^r . mu for a dominant lattice weight mu."""
    weight = tuple(weight)
    if not is_dominant(weight):
        raise DomainError(f"weight {list(weight)} is not dominant")
    if p < 2:
        raise DomainError(f"level needs p >= 2, got {p}")
    level = 0
    cur = weight
    while True:
        if any((x - p + 1) % p != 0 for x in cur):
            return level
        nxt = tuple((x - p + 1) // p for x in cur)
        if not is_dominant(nxt) or not in_lattice(rs, nxt, lattice):
            return level
        cur = nxt
        level += 1

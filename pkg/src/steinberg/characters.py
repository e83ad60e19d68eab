"""Formal characters: sparse integer functions on the weight lattice.

A :class:`Character` is a finitely supported map weight -> multiplicity, the
computational form of an element of the group ring Z[X].  Weyl-module
characters are produced by Freudenthal's multiplicity recursion on the
dominant cone and then spread over Weyl orbits; products are exact sparse
convolutions.  Signed characters (Euler characteristics, virtual
differences) are first-class values.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import DomainError
from .rootdata import (
    Lattice,
    RootSystem,
    is_dominant,
    require_steinberg_configuration,
    steinberg_weight,
)
from .weyl import make_dominant, dot_dominant, weyl_orbit


class Character:
    """Finitely supported integer-valued function on weights.

    Zero multiplicities are never stored, so equality is structural.
    Addition, negation, and integer scaling are pointwise; ``*`` between two
    characters is the convolution product (the ring product of Z[X]).
    """

    __slots__ = ("_mult",)

    def __init__(self, items=()):
        mult = {}
        if isinstance(items, dict):
            items = items.items()
        for w, m in items:
            if not m:
                continue
            w = tuple(w)
            new = mult.get(w, 0) + m
            if new:
                mult[w] = new
            else:
                del mult[w]
        self._mult = mult

    @classmethod
    def _raw(cls, mult: dict) -> "Character":
        # Internal constructor for maps already free of zeros.
        self = cls.__new__(cls)
        self._mult = mult
        return self

    def mult(self, weight) -> int:
        return self._mult.get(tuple(weight), 0)

    def items(self):
        return self._mult.items()

    def support(self):
        return self._mult.keys()

    def sorted_items(self):
        return sorted(self._mult.items())

    def dim(self) -> int:
        """Sum of multiplicities (the virtual dimension for signed inputs)."""
        return sum(self._mult.values())

    def __len__(self):
        return len(self._mult)

    def __bool__(self):
        return bool(self._mult)

    def __eq__(self, other):
        return isinstance(other, Character) and self._mult == other._mult

    def __add__(self, other):
        out = dict(self._mult)
        for w, m in other._mult.items():
            new = out.get(w, 0) + m
            if new:
                out[w] = new
            else:
                del out[w]
        return Character._raw(out)

    def __sub__(self, other):
        out = dict(self._mult)
        for w, m in other._mult.items():
            new = out.get(w, 0) - m
            if new:
                out[w] = new
            else:
                del out[w]
        return Character._raw(out)

    def __neg__(self):
        return Character._raw({w: -m for w, m in self._mult.items()})

    def __rmul__(self, scalar: int):
        if scalar == 0:
            return Character()
        return Character._raw({w: scalar * m for w, m in self._mult.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        return tensor(self, other)

    def __repr__(self):
        items = ", ".join(f"{list(w)}:{m}" for w, m in self.sorted_items()[:8])
        tail = ", ..." if len(self._mult) > 8 else ""
        return f"Character({{{items}{tail}}})"

    def to_dict(self) -> dict:
        return {"weights": [{"w": list(w), "mult": m} for w, m in self.sorted_items()]}

    @classmethod
    def from_dict(cls, data: dict, rank=None) -> "Character":
        try:
            entries = data["weights"]
            items = []
            for e in entries:
                w = tuple(_strict_int(x) for x in e["w"])
                if rank is not None and len(w) != rank:
                    raise ValueError(f"weight {list(w)} has wrong rank (expected {rank})")
                items.append((w, _strict_int(e["mult"])))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed character payload: {exc}") from exc
        return cls(items)


def _strict_int(value) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"expected an integer, got {value!r}")
    return value


def _freudenthal_data(rs: RootSystem):
    # Per-positive-root data for the recursion: fundamental coordinates and
    # the vector v with (x, alpha) = v . x in the scaled invariant form.
    t = rs.symmetrizer
    out = []
    for c, f in zip(rs.positive_roots, rs.positive_fund):
        v = tuple(c[j] * t[j] for j in range(rs.rank))
        out.append((f, v))
    return out


def _dominant_weights_below(rs: RootSystem, highest):
    """All dominant weights <= highest, with root coordinates of the gap.

    Walks downward by single positive-root steps inside the dominant cone;
    any two comparable dominant weights are joined by such a chain.
    """
    gaps = {tuple(highest): (0,) * rs.rank}
    queue = [tuple(highest)]
    while queue:
        mu = queue.pop()
        gap = gaps[mu]
        for c, f in zip(rs.positive_roots, rs.positive_fund):
            nu = tuple(mu[j] - f[j] for j in range(rs.rank))
            if min(nu) < 0 or nu in gaps:
                continue
            gaps[nu] = tuple(gap[j] + c[j] for j in range(rs.rank))
            queue.append(nu)
    return gaps


def _dominant_multiplicities(rs: RootSystem, highest) -> dict:
    """Weight multiplicities of the Weyl module at dominant weights.

    Freudenthal's recursion, processed by increasing depth below the highest
    weight; multiplicities at non-dominant weights are read off from their
    dominant representatives.
    """
    rank = rs.rank
    t = rs.symmetrizer
    cartan = rs.cartan
    gaps = _dominant_weights_below(rs, highest)
    # Increasing depth: every lookup in the recursion lands at smaller depth.
    order = sorted(gaps, key=lambda mu: (sum(gaps[mu]), mu))
    roots = _freudenthal_data(rs)
    mults = {tuple(highest): 1}
    get = mults.get
    for mu in order[1:]:
        num = 0
        for f, v in roots:
            k = 1
            while True:
                x = tuple(mu[j] + k * f[j] for j in range(rank))
                # Dominant representative of x, inline for speed.
                y = list(x)
                while True:
                    for i in range(rank):
                        yi = y[i]
                        if yi < 0:
                            for kk in range(rank):
                                y[kk] -= yi * cartan[kk][i]
                            break
                    else:
                        break
                m = get(tuple(y))
                if m is None:
                    break
                num += m * sum(v[j] * x[j] for j in range(rank))
                k += 1
        gap = gaps[mu]
        denom = sum(gap[j] * t[j] * (highest[j] + mu[j] + 2) for j in range(rank))
        assert denom > 0
        val = 2 * num
        assert val % denom == 0, "Freudenthal division must be exact"
        m = val // denom
        assert m > 0
        mults[mu] = m
    return mults


@lru_cache(maxsize=None)
def weyl_character(rs: RootSystem, highest) -> Character:
    """Character of the Weyl module with the given dominant highest weight."""
    highest = tuple(highest)
    if len(highest) != rs.rank:
        raise DomainError(f"weight {list(highest)} has wrong rank for {rs!r}")
    if not is_dominant(highest):
        raise DomainError(f"weight {list(highest)} is not dominant")
    out = {}
    for mu, m in _dominant_multiplicities(rs, highest).items():
        for w in weyl_orbit(rs, mu):
            out[w] = m
    return Character._raw(out)


def tensor(a: Character, b: Character) -> Character:
    """Convolution product: mult of nu is sum over lam of a(lam)*b(nu-lam)."""
    if a and b:
        ra = len(next(iter(a.support())))
        rb = len(next(iter(b.support())))
        if ra != rb:
            raise DomainError(f"cannot convolve characters of ranks {ra} and {rb}")
    if len(a) > len(b):
        a, b = b, a
    out = {}
    bitems = list(b.items())
    for w1, m1 in a.items():
        for w2, m2 in bitems:
            key = tuple(x + y for x, y in zip(w1, w2))
            new = out.get(key, 0) + m1 * m2
            if new:
                out[key] = new
            else:
                del out[key]
    return Character._raw(out)


def frobenius_twist(chi: Character, r: int, p: int) -> Character:
    """Dilate every weight by p^r, keeping multiplicities."""
    if r < 0:
        raise DomainError(f"twist degree must be >= 0, got {r}")
    if r == 0:
        return chi
    if p < 2:
        raise DomainError(f"twist needs p >= 2, got {p}")
    scale = p**r
    return Character._raw({tuple(scale * x for x in w): m for w, m in chi.items()})


def steinberg_character(rs: RootSystem, p: int, r: int = 1,
                        lattice: Lattice = Lattice.SIMPLY_CONNECTED) -> Character:
    """Character of the r-th Steinberg module, the Weyl module at (p^r-1)rho."""
    require_steinberg_configuration(rs, p, r, lattice)
    return weyl_character(rs, steinberg_weight(rs, p, r))


def euler_characteristic(rs: RootSystem, weight) -> Character:
    """Alternating sum of derived-induction characters of a line bundle.

    Equals the Weyl character at the dominant dot-representative up to the
    sign of the normalizing Weyl element, and vanishes when weight + rho is
    fixed by a reflection.
    """
    if len(weight) != rs.rank:
        raise DomainError(f"weight {list(weight)} has wrong rank for {rs!r}")
    dom, sign = dot_dominant(rs, tuple(weight))
    if dom is None:
        return Character()
    chi = weyl_character(rs, dom)
    return chi if sign == 1 else -chi


def contract_weights(chi: Character, p: int) -> Character:
    """Keep the weights divisible by p and divide them by p."""
    if p < 2:
        raise DomainError(f"contraction needs p >= 2, got {p}")
    out = {}
    for w, m in chi.items():
        if all(x % p == 0 for x in w):
            out[tuple(x // p for x in w)] = m
    return Character._raw(out)


def require_w_invariant(rs: RootSystem, chi: Character) -> None:
    """Reject characters that are not constant on full Weyl orbits."""
    counted = {}
    for w, m in chi.items():
        rep, _ = make_dominant(rs, w)
        prev = counted.get(rep)
        if prev is None:
            counted[rep] = [m, 1]
        else:
            if prev[0] != m:
                raise DomainError(
                    f"character is not Weyl-invariant: orbit of {list(rep)} mixes "
                    f"multiplicities {prev[0]} and {m}"
                )
            prev[1] += 1
    for rep, (_, count) in counted.items():
        if count != len(weyl_orbit(rs, rep)):
            raise DomainError(
                f"character is not Weyl-invariant: orbit of {list(rep)} is incomplete"
            )

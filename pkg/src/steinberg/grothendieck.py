"""Grothendieck-group calculus in the Weyl-module basis.

A :class:`KElement` is a finitely supported integer combination of classes
of Weyl modules, indexed by their dominant highest weights.  Characters
convert to classes through the alternating Weyl-orbit sum (with an
independent highest-weight peeling route), and back by summing Weyl
characters.  On top of the change of basis sit the Steinberg-block
operations: the dot-scaling equivalence and its inverse, Steinberg
multiplicities of a tensor product, Frobenius contraction, and projection
onto a linkage block.
"""

from __future__ import annotations

from .characters import Character, _strict_int, require_w_invariant, weyl_character
from .errors import DomainError
from .linkage import fundamental_alcove_rep, linked_unchecked
from .rootdata import (
    Lattice,
    RootSystem,
    dot_multiply,
    in_lattice,
    is_dominant,
    require_in_lattice,
    require_steinberg_configuration,
    root_coordinates,
)
from .weyl import dot_dominant, generate


class KElement:
    """Finitely supported integer combination of Weyl-module classes.

    Keys are dominant weights; coefficients may be negative (virtual
    classes).  Zero coefficients are never stored.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, items=()):
        coeffs = {}
        if isinstance(items, dict):
            items = items.items()
        for w, c in items:
            if not c:
                continue
            w = tuple(w)
            if not is_dominant(w):
                raise DomainError(f"class support must be dominant, got {list(w)}")
            new = coeffs.get(w, 0) + c
            if new:
                coeffs[w] = new
            else:
                del coeffs[w]
        self._coeffs = coeffs

    @classmethod
    def _raw(cls, coeffs: dict) -> "KElement":
        self = cls.__new__(cls)
        self._coeffs = coeffs
        return self

    def coeff(self, weight) -> int:
        return self._coeffs.get(tuple(weight), 0)

    def items(self):
        return self._coeffs.items()

    def support(self):
        return self._coeffs.keys()

    def sorted_items(self):
        return sorted(self._coeffs.items())

    def __len__(self):
        return len(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        return isinstance(other, KElement) and self._coeffs == other._coeffs

    def __add__(self, other):
        out = dict(self._coeffs)
        for w, c in other._coeffs.items():
            new = out.get(w, 0) + c
            if new:
                out[w] = new
            else:
                del out[w]
        return KElement._raw(out)

    def __sub__(self, other):
        out = dict(self._coeffs)
        for w, c in other._coeffs.items():
            new = out.get(w, 0) - c
            if new:
                out[w] = new
            else:
                del out[w]
        return KElement._raw(out)

    def __neg__(self):
        return KElement._raw({w: -c for w, c in self._coeffs.items()})

    def __repr__(self):
        items = ", ".join(f"{list(w)}:{c}" for w, c in self.sorted_items()[:8])
        tail = ", ..." if len(self._coeffs) > 8 else ""
        return f"KElement({{{items}{tail}}})"

    def to_dict(self, basis: str = "delta") -> dict:
        return {
            "basis": basis,
            "terms": [{"w": list(w), "coeff": c} for w, c in self.sorted_items()],
        }

    @classmethod
    def from_dict(cls, data: dict, rank=None) -> "KElement":
        basis = data.get("basis", "delta")
        if basis != "delta":
            raise ValueError(f"unsupported class basis {basis!r}")
        try:
            entries = data["terms"]
            items = []
            for e in entries:
                w = tuple(_strict_int(x) for x in e["w"])
                if rank is not None and len(w) != rank:
                    raise ValueError(f"weight {list(w)} has wrong rank (expected {rank})")
                items.append((w, _strict_int(e["coeff"])))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed class payload: {exc}") from exc
        return cls(items)


def _dot_candidates(rs: RootSystem, weights):
    """Dominant dot-representatives of an iterable of weights, walls dropped."""
    out = set()
    for w in weights:
        dom, _ = dot_dominant(rs, w)
        if dom is not None:
            out.add(dom)
    return out


def char_to_class(rs: RootSystem, chi: Character) -> KElement:
    """Expand a Weyl-invariant character in the Weyl-module basis.

    The coefficient at a dominant weight lam is the alternating orbit sum
    sum_w (-1)^len(w) * chi(w . lam) over the whole Weyl group (dot action).
    """
    require_w_invariant(rs, chi)
    group = generate(rs)
    out = {}
    for lam in _dot_candidates(rs, chi.support()):
        total = 0
        for w in group.elements:
            m = chi.mult(w.dot(lam))
            if m:
                total += w.sign * m
        if total:
            out[lam] = total
    return KElement._raw(out)


def _height_key(rs: RootSystem, weight):
    return sum(root_coordinates(rs, weight)), weight


def char_to_class_by_peeling(rs: RootSystem, chi: Character) -> KElement:
    """Expand in the Weyl-module basis by repeated highest-weight peeling.

    Independent of :func:`char_to_class`: subtract the Weyl character at a
    dominance-maximal support weight until nothing is left.
    """
    require_w_invariant(rs, chi)
    rest = chi
    out = {}
    heights = {}
    while rest:
        top = None
        top_key = None
        for w in rest.support():
            key = heights.get(w)
            if key is None:
                key = _height_key(rs, w)
                heights[w] = key
            if top_key is None or key > top_key:
                top, top_key = w, key
        if not is_dominant(top):
            raise DomainError(
                f"character is not a Weyl-invariant integer combination: stuck at {list(top)}"
            )
        c = rest.mult(top)
        out[top] = c
        rest = rest - c * weyl_character(rs, top)
    return KElement._raw(out)


def class_to_char(rs: RootSystem, element: KElement) -> Character:
    """Character of a class: the coefficient-weighted sum of Weyl characters."""
    total = Character()
    for w, c in element.items():
        total = total + c * weyl_character(rs, w)
    return total


def tensor_delta_expansion(rs: RootSystem, mu, chi: Character) -> KElement:
    """Weyl-basis expansion of (Weyl module at mu) tensor (module with character chi).

    The coefficient at lam is sum_w (-1)^len(w) * chi(w . lam - mu), which
    agrees with expanding the convolution product directly.
    """
    mu = tuple(mu)
    if not is_dominant(mu):
        raise DomainError(f"weight {list(mu)} is not dominant")
    require_w_invariant(rs, chi)
    group = generate(rs)
    shifted = (tuple(x + y for x, y in zip(w, mu)) for w in chi.support())
    out = {}
    for lam in _dot_candidates(rs, shifted):
        total = 0
        for w in group.elements:
            v = w.dot(lam)
            m = chi.mult(tuple(x - y for x, y in zip(v, mu)))
            if m:
                total += w.sign * m
        if total:
            out[lam] = total
    return KElement._raw(out)


def _require_support_in_lattice(rs, element: KElement, lattice: Lattice) -> None:
    if lattice is Lattice.ADJOINT:
        for w in element.support():
            require_in_lattice(rs, w, lattice)


def steinberg_forward(rs: RootSystem, element: KElement, p: int, r: int = 1,
                      lattice: Lattice = Lattice.SIMPLY_CONNECTED) -> KElement:
    """Image of a class under the Steinberg-block equivalence, r times.

    Relabels the Weyl basis by r-fold dot-multiplication with p; at the
    character level this is tensoring with the r-th Steinberg character
    after an r-fold Frobenius twist.  r = 0 is the identity.
    """
    if r < 0:
        raise DomainError(f"iteration count must be >= 0, got {r}")
    if r == 0:
        if p < 2:
            raise DomainError(f"equivalence needs p >= 2, got {p}")
        _require_support_in_lattice(rs, element, lattice)
        return KElement._raw(dict(element.items()))
    require_steinberg_configuration(rs, p, r, lattice)
    _require_support_in_lattice(rs, element, lattice)
    scale = p**r
    return KElement._raw({dot_multiply(scale, w): c for w, c in element.items()})


def steinberg_inverse(rs: RootSystem, element: KElement, p: int,
                      lattice: Lattice = Lattice.SIMPLY_CONNECTED) -> KElement:
    """Inverse relabeling: keep the terms at p-dot-multiples and unscale them.

    Terms whose weight is not p . lam for a lattice weight lam are dropped.
    """
    if p < 2:
        raise DomainError(f"inverse needs p >= 2, got {p}")
    _require_support_in_lattice(rs, element, lattice)
    out = {}
    for w, c in element.items():
        if all((x - p + 1) % p == 0 for x in w):
            lam = tuple((x - p + 1) // p for x in w)
            if in_lattice(rs, lam, lattice):
                out[lam] = c
    return KElement._raw(out)


def _sdm_term(rs: RootSystem, group, chi: Character, lam, p: int) -> int:
    total = 0
    for w in group.elements:
        v = w.dot(lam)
        m = chi.mult(tuple(p * x for x in v))
        if m:
            total += w.sign * m
    return total


def steinberg_delta_multiplicity(rs: RootSystem, chi: Character, lam, p: int) -> int:
    """Multiplicity of the Weyl class at p . lam inside St tensor (chi-module).

    Computed as sum_w (-1)^len(w) * chi(p * (w . lam)) without forming the
    product character.
    """
    lam = tuple(lam)
    if not is_dominant(lam):
        raise DomainError(f"weight {list(lam)} is not dominant")
    if p < 2:
        raise DomainError(f"multiplicity needs p >= 2, got {p}")
    require_w_invariant(rs, chi)
    return _sdm_term(rs, generate(rs), chi, lam, p)


def frobenius_contract_class(rs: RootSystem, chi: Character, p: int) -> KElement:
    """Class of the Frobenius contraction of a module with character chi.

    The coefficient at lam is the Steinberg multiplicity of the Weyl class
    at p . lam in St tensor the module; at the character level the result
    contracts the weights of chi by p.
    """
    if p < 2:
        raise DomainError(f"contraction needs p >= 2, got {p}")
    require_w_invariant(rs, chi)
    group = generate(rs)
    candidates = set()
    for w in chi.support():
        if all(x % p == 0 for x in w):
            dom, _ = dot_dominant(rs, tuple(x // p for x in w))
            if dom is not None:
                candidates.add(dom)
    out = {}
    for lam in candidates:
        total = _sdm_term(rs, group, chi, lam, p)
        if total:
            out[lam] = total
    return KElement._raw(out)


def pr_block(rs: RootSystem, element: KElement, nu, p: int,
             lattice: Lattice = Lattice.SIMPLY_CONNECTED) -> KElement:
    """Projection of a class onto the linkage block through nu."""
    nu = tuple(nu)
    require_in_lattice(rs, nu, lattice)
    _require_support_in_lattice(rs, element, lattice)
    group = generate(rs)
    out = {w: c for w, c in element.items() if linked_unchecked(rs, group, w, nu, p)}
    return KElement._raw(out)


def block_decompose(rs: RootSystem, element: KElement, p: int,
                    lattice: Lattice = Lattice.SIMPLY_CONNECTED) -> list:
    """Split a class into its linkage-block components.

    Returns (representative, component) pairs sorted by representative, where
    representatives are the closed-alcove normal forms of the support.
    Components sum back to the input.
    """
    if p < 2:
        raise DomainError(f"decomposition needs p >= 2, got {p}")
    _require_support_in_lattice(rs, element, lattice)
    buckets = {}
    for w, c in element.items():
        rep = fundamental_alcove_rep(rs, w, p)
        buckets.setdefault(rep, {})[w] = c
    return [(rep, KElement._raw(buckets[rep])) for rep in sorted(buckets)]

"""Finite Weyl groups: full enumeration, linear and dot actions, lengths.

Group elements act on fundamental-weight coordinates through integer
matrices.  The whole group is enumerated once per root system by
breadth-first closure under the simple reflections, which makes lengths and
the longest element immediate.  Weight-level normalizations that do not need
the enumerated group (``make_dominant``, ``dot_dominant``) are plain
functions so the character code can stay fast.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import ConfigurationError
from .rootdata import RANK_CAP, RootSystem


@dataclass(frozen=True, eq=False)
class WeylElement:
    """One group element: a reduced word, its action matrix, and its length."""

    word: tuple
    matrix: tuple
    length: int

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 else 1

    def act(self, weight):
        return tuple(sum(row[j] * weight[j] for j in range(len(weight))) for row in self.matrix)

    def dot(self, weight):
        shifted = tuple(x + 1 for x in weight)
        return tuple(
            sum(row[j] * shifted[j] for j in range(len(weight))) - 1 for row in self.matrix
        )

    def __repr__(self):
        return f"WeylElement(word={''.join(str(i) for i in self.word) or 'e'}, length={self.length})"


@dataclass(frozen=True, eq=False)
class WeylGroup:
    root_system: RootSystem
    elements: tuple
    longest: WeylElement
    by_matrix: dict = field(repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def element_for_matrix(self, matrix) -> WeylElement:
        return self.by_matrix[matrix]


def apply_simple_reflection(rs: RootSystem, i: int, weight):
    """s_i sends a weight m to m - m_i * alpha_i (coordinates stay integral)."""
    mi = weight[i]
    if mi == 0:
        return tuple(weight)
    return tuple(weight[k] - mi * rs.cartan[k][i] for k in range(rs.rank))


def make_dominant(rs: RootSystem, weight):
    """Dominant representative of a linear Weyl orbit, with the sign picked up.

    Returns (dominant weight, (-1)^(number of reflections applied)); the sign
    equals the sign of any Weyl element carrying the input to the output.
    """
    w = tuple(weight)
    sign = 1
    while True:
        for i, x in enumerate(w):
            if x < 0:
                w = apply_simple_reflection(rs, i, w)
                sign = -sign
                break
        else:
            return w, sign


def make_dominant_with_word(rs: RootSystem, weight):
    """Like make_dominant but also returns the reflection word applied."""
    w = tuple(weight)
    word = []
    while True:
        for i, x in enumerate(w):
            if x < 0:
                w = apply_simple_reflection(rs, i, w)
                word.append(i)
                break
        else:
            return w, tuple(word)


def dot_dominant(rs: RootSystem, weight):
    """Dot-orbit normalization.

    Returns (mu, sign) where mu is the unique dominant weight in the dot
    orbit when weight + rho is regular, and (None, 0) when weight + rho lies
    on a reflection wall (so the orbit contains no regular dominant weight).
    """
    shifted = tuple(x + 1 for x in weight)
    dom, sign = make_dominant(rs, shifted)
    if 0 in dom:
        return None, 0
    return tuple(x - 1 for x in dom), sign


def weyl_orbit(rs: RootSystem, weight) -> list:
    """Full linear Weyl orbit of a weight."""
    start = tuple(weight)
    seen = {start}
    queue = [start]
    while queue:
        w = queue.pop()
        for i in range(rs.rank):
            if w[i] != 0:
                w2 = apply_simple_reflection(rs, i, w)
                if w2 not in seen:
                    seen.add(w2)
                    queue.append(w2)
    return list(seen)


@lru_cache(maxsize=None)
def generate(rs: RootSystem) -> WeylGroup:
    """Enumerate the full Weyl group by breadth-first closure.

    Elements are deduplicated by action matrix; breadth-first order makes
    every stored word reduced, so lengths are exact.
    """
    if rs.rank > RANK_CAP:
        raise ConfigurationError(f"rank {rs.rank} exceeds enumeration cap {RANK_CAP}")
    rank = rs.rank
    identity = tuple(tuple(1 if i == j else 0 for j in range(rank)) for i in range(rank))
    start = WeylElement(word=(), matrix=identity, length=0)
    by_matrix = {identity: start}
    elements = [start]
    frontier = [start]
    cartan = rs.cartan
    while frontier:
        nxt = []
        for w in frontier:
            m = w.matrix
            for i in range(rank):
                # Left-multiply by s_i: row_k -> row_k - cartan[k][i] * row_i.
                row_i = m[i]
                new = tuple(
                    tuple(m[k][j] - cartan[k][i] * row_i[j] for j in range(rank))
                    if cartan[k][i]
                    else m[k]
                    for k in range(rank)
                )
                if new not in by_matrix:
                    el = WeylElement(word=(i,) + w.word, matrix=new, length=w.length + 1)
                    by_matrix[new] = el
                    elements.append(el)
                    nxt.append(el)
        frontier = nxt
    top_length = max(el.length for el in elements)
    longest = [el for el in elements if el.length == top_length]
    assert len(longest) == 1, "the longest element must be unique"
    assert top_length == rs.num_positive_roots
    elements.sort(key=lambda el: (el.length, el.word))
    return WeylGroup(
        root_system=rs,
        elements=tuple(elements),
        longest=longest[0],
        by_matrix=by_matrix,
    )


def dominant_representative(group: WeylGroup, weight):
    """A Weyl element w with w(weight) dominant, plus that dominant weight."""
    rs = group.root_system
    dom, word = make_dominant_with_word(rs, weight)
    rank = rs.rank
    matrix = tuple(tuple(1 if i == j else 0 for j in range(rank)) for i in range(rank))
    for i in word:
        # The word was applied to the weight first-to-last, so the matrix is
        # built by left-multiplying each reflection in turn.
        row_i = matrix[i]
        matrix = tuple(
            tuple(matrix[k][j] - rs.cartan[k][i] * row_i[j] for j in range(rank))
            if rs.cartan[k][i]
            else matrix[k]
            for k in range(rank)
        )
    return group.element_for_matrix(matrix), dom

"""Decorated permutations, Grassmann necklaces, positroids, and the
bijections between them.

Ground sets are ``1..n`` everywhere.  The cyclic shift ``c`` sends ``i`` to
``i+1`` with wraparound, and ``cyc(x, m, n)`` computes ``c^m(x)`` with the
representative chosen in ``1..n``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import (
    EmptyInput,
    InvalidInput,
    InvalidNecklace,
    NoGaleMinimum,
    SizeMismatch,
)


def cyc(x: int, m: int, n: int) -> int:
    """The cyclic shift ``c^m(x)`` on ``1..n``.

    >>> cyc(4, 1, 4), cyc(1, -1, 4)
    (1, 4)
    """
    return (x - 1 + m) % n + 1


def rotated_key(subset, start: int, n: int):
    """Sort ``subset`` by the total order ``start < start+1 < ... < start-1``.

    Returns the tuple of ranks (1-based) of the elements in that order,
    sorted increasingly.  Two subsets compare in the rotated Gale order by
    coordinatewise comparison of these tuples.
    """
    return tuple(sorted(cyc(x, 1 - start, n) for x in subset))


def gale_leq(I, J, start: int, n: int) -> bool:
    """Gale order ``I <= J`` for the cyclic order starting at ``start``.

    >>> gale_leq({1, 3}, {2, 4}, 1, 4)
    True
    """
    a, b = rotated_key(I, start, n), rotated_key(J, start, n)
    if len(a) != len(b):
        raise SizeMismatch(f"|I|={len(a)} != |J|={len(b)}")
    return all(x <= y for x, y in zip(a, b))


def schubert_matroid(I, n: int, start: int = 1) -> frozenset:
    """All ``J`` with ``I <= J`` in the Gale order starting at ``start``.

    >>> sorted(sorted(J) for J in schubert_matroid({2, 3}, 4))
    [[2, 3], [2, 4], [3, 4]]
    """
    k = len(set(I))
    return frozenset(
        frozenset(J)
        for J in itertools.combinations(range(1, n + 1), k)
        if gale_leq(I, J, start, n)
    )


def gale_minimum(subsets, start: int, n: int) -> frozenset:
    """Minimum of a family of k-subsets in the rotated Gale order.

    The lexicographic minimum is the only candidate; if it fails to
    dominate some member the family has no minimum (it is not a matroid)
    and ``NoGaleMinimum`` is raised.
    """
    subsets = list(subsets)
    if not subsets:
        raise EmptyInput("empty family has no Gale minimum")
    best = min(subsets, key=lambda S: rotated_key(S, start, n))
    for S in subsets:
        if not gale_leq(best, S, start, n):
            raise NoGaleMinimum(
                f"no Gale minimum for start={start}: {sorted(best)} vs {sorted(S)}"
            )
    return frozenset(best)


@dataclass(frozen=True)
class DecoratedPermutation:
    """A permutation of ``1..n`` whose fixed points carry a color 0 or 1.

    ``images[i-1]`` is ``w(i)``; ``colors`` maps each fixed point to its
    color and nothing else.
    """

    n: int
    images: tuple
    colors: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        object.__setattr__(self, "colors", dict(self.colors))
        if sorted(self.images) != list(range(1, self.n + 1)):
            raise InvalidInput(f"{self.images} is not a permutation of 1..{self.n}")
        fixed = {i for i in range(1, self.n + 1) if self.images[i - 1] == i}
        if set(self.colors) != fixed:
            raise InvalidInput(
                f"colors {self.colors} must be defined exactly on fixed points {sorted(fixed)}"
            )
        if any(c not in (0, 1) for c in self.colors.values()):
            raise InvalidInput("colors must be 0 or 1")

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def inverse(self, j: int) -> int:
        return self.images.index(j) + 1

    def __hash__(self):
        return hash((self.n, self.images, tuple(sorted(self.colors.items()))))

    def __eq__(self, other):
        return (
            isinstance(other, DecoratedPermutation)
            and self.n == other.n
            and self.images == other.images
            and self.colors == other.colors
        )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "w": list(self.images),
            "colors": {str(i): c for i, c in sorted(self.colors.items())},
        }

    @classmethod
    def from_json(cls, obj: dict) -> "DecoratedPermutation":
        return cls(
            n=int(obj["n"]),
            images=tuple(int(x) for x in obj["w"]),
            colors={int(i): int(c) for i, c in obj.get("colors", {}).items()},
        )


@dataclass(frozen=True)
class GrassmannNecklace:
    """Cyclic sequence ``(J_1, ..., J_n)`` of k-subsets obeying the step rule
    ``J_{i+1} = (J_i \\ {i}) u {j}`` or ``J_{i+1} = J_i``.
    """

    k: int
    n: int
    J: tuple

    def __post_init__(self):
        object.__setattr__(self, "J", tuple(frozenset(S) for S in self.J))
        if len(self.J) != self.n:
            raise InvalidInput(f"necklace needs {self.n} terms, got {len(self.J)}")
        for i, S in enumerate(self.J, start=1):
            if len(S) != self.k:
                raise InvalidInput(f"|J_{i}| = {len(S)} != k = {self.k}")
            if not S <= set(range(1, self.n + 1)):
                raise InvalidInput(f"J_{i} is not a subset of 1..{self.n}")

    def term(self, i: int) -> frozenset:
        """``J_i`` with the index taken mod n."""
        return self.J[(i - 1) % self.n]

    def validate(self):
        """Check the one-element step rule at every position."""
        for i in range(1, self.n + 1):
            Ji, Jnext = self.term(i), self.term(i + 1)
            if Jnext == Ji:
                continue
            if i not in Ji or not (Ji - {i}) <= Jnext or len(Jnext - (Ji - {i})) != 1:
                raise InvalidNecklace(i)

    def to_json(self) -> dict:
        return {"k": self.k, "n": self.n, "J": [sorted(S) for S in self.J]}

    @classmethod
    def from_json(cls, obj: dict) -> "GrassmannNecklace":
        return cls(
            k=int(obj["k"]),
            n=int(obj["n"]),
            J=tuple(frozenset(int(x) for x in S) for S in obj["J"]),
        )


@dataclass(frozen=True)
class Positroid:
    """A set of k-subsets (the bases); positroidness is checked by
    :func:`is_positroid`, not by the constructor.
    """

    k: int
    n: int
    bases: frozenset

    def __post_init__(self):
        object.__setattr__(
            self, "bases", frozenset(frozenset(B) for B in self.bases)
        )
        if not self.bases:
            raise EmptyInput("a positroid has at least one basis")
        for B in self.bases:
            if len(B) != self.k or not B <= set(range(1, self.n + 1)):
                raise InvalidInput(f"{sorted(B)} is not a k-subset of 1..{self.n}")

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "bases": sorted(sorted(B) for B in self.bases),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Positroid":
        return cls(
            k=int(obj["k"]),
            n=int(obj["n"]),
            bases=frozenset(frozenset(int(x) for x in B) for B in obj["bases"]),
        )


def helicity(w: DecoratedPermutation) -> int:
    """Number of anti-exceedances plus color-1 fixed points; equals ``|J_i|``
    for every term of the necklace of ``w``.

    >>> helicity(DecoratedPermutation(5, (3, 4, 5, 1, 2)))
    2
    """
    k = sum(1 for j in range(1, w.n + 1) if w.inverse(j) > j)
    return k + sum(1 for c in w.colors.values() if c == 1)


def necklace_from_permutation(w: DecoratedPermutation) -> GrassmannNecklace:
    """The Grassmann necklace ``J_i = {j : c^{1-i}(w^{-1}(j)) > c^{1-i}(j)}``
    together with the color-1 fixed points in every term.
    """
    n = w.n
    ones = {i for i, c in w.colors.items() if c == 1}
    terms = []
    for i in range(1, n + 1):
        Ji = {
            j
            for j in range(1, n + 1)
            if cyc(w.inverse(j), 1 - i, n) > cyc(j, 1 - i, n)
        }
        terms.append(frozenset(Ji | ones))
    k = len(terms[0])
    return GrassmannNecklace(k=k, n=n, J=tuple(terms))


def permutation_from_necklace(J: GrassmannNecklace) -> DecoratedPermutation:
    """Inverse of :func:`necklace_from_permutation`; raises
    ``InvalidNecklace`` where the step rule fails.
    """
    n = J.n
    images, colors = [0] * n, {}
    for i in range(1, n + 1):
        Ji, Jnext = J.term(i), J.term(i + 1)
        if Jnext == Ji:
            images[i - 1] = i
            colors[i] = 1 if i in Ji else 0
        else:
            if i not in Ji or not (Ji - {i}) <= Jnext:
                raise InvalidNecklace(i)
            step = Jnext - (Ji - {i})
            if len(step) != 1:
                raise InvalidNecklace(i)
            images[i - 1] = next(iter(step))
    return DecoratedPermutation(n=n, images=tuple(images), colors=colors)


def positroid_from_necklace(J: GrassmannNecklace) -> Positroid:
    """Intersection of the n cyclically shifted Schubert matroids:
    ``I`` is a basis iff ``J_i <= I`` in the Gale order starting at ``i``,
    for every ``i``.
    """
    k, n = J.k, J.n
    bases = [
        frozenset(I)
        for I in itertools.combinations(range(1, n + 1), k)
        if all(gale_leq(J.term(i), I, i, n) for i in range(1, n + 1))
    ]
    return Positroid(k=k, n=n, bases=frozenset(bases))


def necklace_from_positroid(M, n: int | None = None) -> GrassmannNecklace:
    """``J_{i+1} = c^i(Gale-min of c^{-i}(M))``, i.e. the minimum of ``M``
    in the cyclic order starting at ``i+1``.

    Accepts a :class:`Positroid` or a bare family of k-subsets (with ``n``
    inferred from the largest element when not given).  Raises
    ``NoGaleMinimum`` when some rotated order has no minimum.
    """
    if isinstance(M, Positroid):
        k, n, bases = M.k, M.n, M.bases
    else:
        bases = [frozenset(B) for B in M]
        if not bases:
            raise EmptyInput("empty family")
        k = len(bases[0])
        if n is None:
            n = max((max(B) for B in bases if B), default=k)
    terms = tuple(gale_minimum(bases, i, n) for i in range(1, n + 1))
    return GrassmannNecklace(k=k, n=n, J=terms)


def is_positroid(M, n: int | None = None) -> bool:
    """Decision procedure: the necklace round trip reproduces ``M`` exactly.

    >>> is_positroid([{1, 2}, {3, 4}], n=4)
    False
    """
    if isinstance(M, Positroid):
        bases, n = M.bases, M.n
    else:
        bases = frozenset(frozenset(B) for B in M)
        if not bases:
            raise EmptyInput("empty family")
        if n is None:
            n = max((max(B) for B in bases if B), default=len(next(iter(bases))))
    sizes = {len(B) for B in bases}
    if len(sizes) != 1:
        return False
    k = sizes.pop()
    if k == 0:
        return bases == {frozenset()}
    try:
        necklace = necklace_from_positroid(Positroid(k=k, n=n, bases=bases))
        necklace.validate()
    except (NoGaleMinimum, InvalidNecklace):
        return False
    return positroid_from_necklace(necklace).bases == bases


def is_matroid(M) -> bool:
    """Brute-force basis-exchange check.

    >>> is_matroid([{1, 2}, {3, 4}])
    False
    """
    bases = [frozenset(B) for B in M]
    if not bases:
        return False
    if len({len(B) for B in bases}) != 1:
        return False
    bset = set(bases)
    for A in bases:
        for B in bases:
            for a in A - B:
                if not any(A - {a} | {b} in bset for b in B - A):
                    return False
    return True


def all_decorated_permutations(n: int):
    """All decorated permutations of ``1..n`` (each fixed point 2-colored)."""
    for images in itertools.permutations(range(1, n + 1)):
        fixed = [i for i in range(1, n + 1) if images[i - 1] == i]
        for bits in itertools.product((0, 1), repeat=len(fixed)):
            yield DecoratedPermutation(
                n=n, images=images, colors=dict(zip(fixed, bits))
            )


def shift_permutation(k: int, n: int) -> DecoratedPermutation:
    """The complete type (k, n) strand permutation ``w(i) = i + k mod n``;
    fixed points (k = 0 or k = n) are colored 0 resp. 1.
    """
    if not 0 <= k <= n:
        raise InvalidInput(f"need 0 <= k <= n, got k={k}, n={n}")
    images = tuple(cyc(i, k, n) for i in range(1, n + 1))
    colors = {}
    if k == 0:
        colors = {i: 0 for i in range(1, n + 1)}
    elif k == n:
        colors = {i: 1 for i in range(1, n + 1)}
    return DecoratedPermutation(n=n, images=images, colors=colors)

"""The Weyl group of a root datum: words, length, Bruhat order, parabolics.

An element is represented by the pair of integer matrices giving its action
on weights (simple-root basis) and on coweights (simple-coroot basis).
Elements are interned per group, so within one :class:`WeylGroup` equal
elements are the *same* object; equality and hashing are identity-based.

Conventions:

* ``multiply(a, b)`` is the element acting as ``a`` after ``b``, i.e. the
  product ``a b`` with words concatenated as ``word(a) + word(b)``.
* ``length(w)`` is the number of positive roots sent to negative roots.
* ``i`` is a *left* descent of ``w`` iff ``length(s_i w) < length(w)``,
  equivalently ``w^{-1}(alpha_i) < 0``; a *right* descent iff
  ``w(alpha_i) < 0``.
* ``upper_set(w)`` is the set of left ascents, the complement of the left
  descent set; ``support(w)`` is the set of letters of any reduced word.
* The canonical word of ``w`` is its lexicographically smallest reduced
  word, obtained by repeatedly peeling the smallest left descent.
* ``dot_action`` is the rho-shifted action ``w . lam = w(lam + rho) - rho``.

Simple reflections are indexed ``1..rank`` everywhere.
"""

from __future__ import annotations

import math
import re

from .root_datum import Coweight, DomainError, RootDatum, Weight

__all__ = ["WeylGroup", "WeylElement", "WordParseError"]


class WordParseError(ValueError):
    """A word string such as ``"s1*s2"`` could not be parsed."""


IntMatrix = tuple[tuple[int, ...], ...]

_TOKEN = re.compile(r"^s(\d+)$")


def _identity_matrix(d: int) -> IntMatrix:
    return tuple(tuple(1 if r == c else 0 for c in range(d)) for r in range(d))


def _matmul(x: IntMatrix, y: IntMatrix) -> IntMatrix:
    cols = tuple(zip(*y))
    return tuple(
        tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in x
    )


def _apply(m: IntMatrix, vec: tuple) -> tuple:
    return tuple(sum(a * b for a, b in zip(row, vec)) for row in m)


class WeylElement:
    """An interned Weyl group element; create via :class:`WeylGroup` methods."""

    __slots__ = (
        "group",
        "root_matrix",
        "coroot_matrix",
        "length",
        "_serial",
        "_word",
        "_left_descents",
        "_inverse",
    )

    def __init__(
        self,
        group: WeylGroup,
        root_matrix: IntMatrix,
        coroot_matrix: IntMatrix,
        length: int,
        serial: int,
    ) -> None:
        self.group = group
        self.root_matrix = root_matrix
        self.coroot_matrix = coroot_matrix
        self.length = length
        self._serial = serial
        self._word: tuple[int, ...] | None = None
        self._left_descents: frozenset[int] | None = None
        self._inverse: WeylElement | None = None

    def __repr__(self) -> str:
        return f"<WeylElement {self.group.format_word(self)}>"


class WeylGroup:
    """The Weyl group attached to a :class:`RootDatum`."""

    def __init__(self, datum: RootDatum) -> None:
        self.datum = datum
        d = datum.rank
        matrix = datum.matrix
        self._root_gens: tuple[IntMatrix, ...] = tuple(
            tuple(
                tuple(
                    (1 if r == c else 0) - (matrix[c][j] if r == j else 0)
                    for c in range(d)
                )
                for r in range(d)
            )
            for j in range(d)
        )
        self._coroot_gens: tuple[IntMatrix, ...] = tuple(
            tuple(
                tuple(
                    (1 if r == c else 0) - (matrix[j][c] if r == j else 0)
                    for c in range(d)
                )
                for r in range(d)
            )
            for j in range(d)
        )
        self._registry: dict[IntMatrix, WeylElement] = {}
        # Integer coweight in the open chamber with all simple pairings equal:
        # a positive multiple of the inverse Cartan matrix row sums.  Signs of
        # pairings against it detect left descents.
        inv = datum.inverse_cartan
        sums = [sum(inv[i][j] for j in range(d)) for i in range(d)]
        denom_lcm = 1
        for value in sums:
            denom_lcm = math.lcm(denom_lcm, value.denominator)
        self._regular_coweight: tuple[int, ...] = tuple(
            int(value * denom_lcm) for value in sums
        )
        self.identity = self._intern(_identity_matrix(d), _identity_matrix(d))
        self.identity._word = ()
        self._elements: tuple[WeylElement, ...] | None = None
        self._longest: WeylElement | None = None
        self._bruhat_memo: dict[tuple[int, int], bool] = {}
        self._kostant_cache: dict[frozenset[int], tuple[WeylElement, ...]] = {}
        self._parabolic_cache: dict[frozenset[int], tuple[WeylElement, ...]] = {}

    # ----- element construction -------------------------------------------

    @property
    def rank(self) -> int:
        return self.datum.rank

    def _intern(self, root_matrix: IntMatrix, coroot_matrix: IntMatrix) -> WeylElement:
        found = self._registry.get(root_matrix)
        if found is None:
            length = sum(
                1
                for alpha in self.datum.positive_roots
                if sum(_apply(root_matrix, alpha)) < 0
            )
            found = WeylElement(
                self, root_matrix, coroot_matrix, length, len(self._registry)
            )
            self._registry[root_matrix] = found
        return found

    def simple_reflection(self, i: int) -> WeylElement:
        if not 1 <= i <= self.rank:
            raise DomainError(f"simple index {i} out of range 1..{self.rank}")
        return self._intern(self._root_gens[i - 1], self._coroot_gens[i - 1])

    def multiply(self, a: WeylElement, b: WeylElement) -> WeylElement:
        self._check_member(a)
        self._check_member(b)
        return self._intern(
            _matmul(a.root_matrix, b.root_matrix),
            _matmul(a.coroot_matrix, b.coroot_matrix),
        )

    def inverse(self, w: WeylElement) -> WeylElement:
        self._check_member(w)
        if w._inverse is None:
            result = self.identity
            for i in reversed(self.canonical_word(w)):
                result = self.multiply(result, self.simple_reflection(i))
            w._inverse = result
            result._inverse = w
        return w._inverse

    def product_of(self, word: tuple[int, ...] | list[int]) -> WeylElement:
        """The product ``s_{i1} ... s_{ik}`` of a word of simple indices."""
        result = self.identity
        for i in word:
            result = self.multiply(result, self.simple_reflection(i))
        return result

    def _check_member(self, w: WeylElement) -> None:
        if w.group is not self:
            raise DomainError("element belongs to a different Weyl group instance")

    # ----- descents, words, support ---------------------------------------

    def right_descents(self, w: WeylElement) -> frozenset[int]:
        """Indices ``i`` with ``w(alpha_i)`` negative, i.e. ``w s_i < w``."""
        self._check_member(w)
        d = self.rank
        return frozenset(
            i + 1 for i in range(d) if sum(row[i] for row in w.root_matrix) < 0
        )

    def left_descents(self, w: WeylElement) -> frozenset[int]:
        """Indices ``i`` with ``s_i w < w``."""
        self._check_member(w)
        if w._left_descents is None:
            image = _apply(w.coroot_matrix, self._regular_coweight)
            matrix = self.datum.matrix
            d = self.rank
            descents = []
            for i in range(d):
                value = sum(matrix[i][j] * image[j] for j in range(d))
                assert value != 0, "regular coweight hit a wall"
                if value < 0:
                    descents.append(i + 1)
            w._left_descents = frozenset(descents)
        return w._left_descents

    def upper_set(self, w: WeylElement) -> frozenset[int]:
        """The left-ascent set of ``w``: indices ``i`` with ``s_i w > w``."""
        return frozenset(range(1, self.rank + 1)) - self.left_descents(w)

    def canonical_word(self, w: WeylElement) -> tuple[int, ...]:
        """Lexicographically smallest reduced word of ``w``."""
        self._check_member(w)
        if w._word is None:
            letters: list[int] = []
            cursor = w
            while cursor._word is None:
                i = min(self.left_descents(cursor))
                letters.append(i)
                cursor = self.multiply(self.simple_reflection(i), cursor)
            w._word = tuple(letters) + cursor._word
        return w._word

    def support(self, w: WeylElement) -> frozenset[int]:
        """Set of simple indices occurring in any (hence every) reduced word."""
        return frozenset(self.canonical_word(w))

    # ----- enumeration and the longest element ----------------------------

    def enumerate_group(self, max_size: int = 10**6) -> tuple[WeylElement, ...]:
        """All elements, sorted by (length, canonical word)."""
        if self._elements is None:
            seen = {self.identity}
            frontier = [self.identity]
            gens = [self.simple_reflection(i) for i in range(1, self.rank + 1)]
            while frontier:
                nxt: list[WeylElement] = []
                for w in frontier:
                    for s in gens:
                        ws = self.multiply(w, s)
                        if ws not in seen:
                            seen.add(ws)
                            nxt.append(ws)
                if len(seen) > max_size:
                    raise DomainError(
                        f"group has more than max_size={max_size} elements"
                    )
                frontier = nxt
            self._elements = tuple(
                sorted(seen, key=lambda w: (w.length, self.canonical_word(w)))
            )
        return self._elements

    def longest_element(self) -> WeylElement:
        if self._longest is None:
            cursor = self.identity
            ascents = self._right_ascents(cursor)
            while ascents:
                cursor = self.multiply(cursor, self.simple_reflection(min(ascents)))
                ascents = self._right_ascents(cursor)
            self._longest = cursor
        return self._longest

    def _right_ascents(self, w: WeylElement) -> list[int]:
        return [
            i for i in range(1, self.rank + 1) if i not in self.right_descents(w)
        ]

    # ----- Bruhat order ----------------------------------------------------

    def bruhat_leq(self, x: WeylElement, w: WeylElement) -> bool:
        """Bruhat order, via descent pruning on the left."""
        self._check_member(x)
        self._check_member(w)
        if x is w:
            return True
        if x.length >= w.length:
            return False
        key = (x._serial, w._serial)
        cached = self._bruhat_memo.get(key)
        if cached is None:
            i = min(self.left_descents(w))
            s = self.simple_reflection(i)
            sw = self.multiply(s, w)
            if i in self.left_descents(x):
                cached = self.bruhat_leq(self.multiply(s, x), sw)
            else:
                cached = self.bruhat_leq(x, sw)
            self._bruhat_memo[key] = cached
        return cached

    def bruhat_interval(self, x: WeylElement, w: WeylElement) -> tuple[WeylElement, ...]:
        """Elements ``t`` with ``x <= t <= w``, in enumeration order."""
        return tuple(
            t
            for t in self.enumerate_group()
            if self.bruhat_leq(x, t) and self.bruhat_leq(t, w)
        )

    def covers(self, x: WeylElement, w: WeylElement) -> bool:
        """Whether ``w`` covers ``x``: ``x < w`` with ``length(w) = length(x)+1``."""
        return w.length == x.length + 1 and self.bruhat_leq(x, w)

    # ----- parabolic data --------------------------------------------------

    def _check_subset(self, subset: frozenset[int]) -> frozenset[int]:
        subset = frozenset(subset)
        for i in subset:
            if not 1 <= i <= self.rank:
                raise DomainError(f"simple index {i} out of range 1..{self.rank}")
        return subset

    def kostant_reps(self, subset: frozenset[int]) -> tuple[WeylElement, ...]:
        """Minimal-length left coset representatives for the parabolic on ``subset``.

        These are the ``w`` with no left descent inside ``subset``; every
        group element factors uniquely as ``v * u`` with ``v`` a
        representative and ``u`` in the parabolic subgroup, with lengths
        adding.
        """
        subset = self._check_subset(subset)
        found = self._kostant_cache.get(subset)
        if found is None:
            found = tuple(
                w
                for w in self.enumerate_group()
                if subset <= self.upper_set(w)
            )
            self._kostant_cache[subset] = found
        return found

    def parabolic_elements(self, subset: frozenset[int]) -> tuple[WeylElement, ...]:
        """Elements whose support lies inside ``subset``, in enumeration order."""
        subset = self._check_subset(subset)
        found = self._parabolic_cache.get(subset)
        if found is None:
            found = tuple(
                w for w in self.enumerate_group() if self.support(w) <= subset
            )
            self._parabolic_cache[subset] = found
        return found

    # ----- actions ---------------------------------------------------------

    def act_weight(self, w: WeylElement, lam: Weight) -> Weight:
        self._check_member(w)
        if len(lam.coords) != self.rank:
            raise DomainError(f"rank mismatch: expected weight of length {self.rank}")
        return Weight(_apply(w.root_matrix, lam.coords))

    def dot_action(self, w: WeylElement, lam: Weight) -> Weight:
        """Rho-shifted action ``w . lam = w(lam + rho) - rho``."""
        self._check_member(w)
        if len(lam.coords) != self.rank:
            raise DomainError(f"rank mismatch: expected weight of length {self.rank}")
        rho = self.datum.rho
        shifted = tuple(a + r for a, r in zip(lam.coords, rho))
        moved = _apply(w.root_matrix, shifted)
        return Weight(tuple(a - r for a, r in zip(moved, rho)))

    def act_coweight(self, w: WeylElement, mu: Coweight) -> Coweight:
        self._check_member(w)
        if len(mu.coords) != self.rank:
            raise DomainError(f"rank mismatch: expected coweight of length {self.rank}")
        return Coweight(_apply(w.coroot_matrix, mu.coords))

    # ----- words as text ---------------------------------------------------

    def parse_word(self, text: str) -> WeylElement:
        """Parse ``"e"``, ``"1"``, or ``"s<i>"`` factors joined by ``"*"``."""
        body = text.strip()
        if body in ("e", "1"):
            return self.identity
        if not body:
            raise WordParseError("empty word; use 'e' for the identity")
        result = self.identity
        for token in body.split("*"):
            match = _TOKEN.match(token.strip())
            if match is None:
                raise WordParseError(
                    f"bad word token {token.strip()!r}; expected s<i> as in 's2'"
                )
            i = int(match.group(1))
            if not 1 <= i <= self.rank:
                raise WordParseError(
                    f"word token s{i} out of range; rank is {self.rank}"
                )
            result = self.multiply(result, self.simple_reflection(i))
        return result

    def format_word(self, w: WeylElement, identity: str = "e") -> str:
        """Canonical word as text, e.g. ``"s1*s2"``; the identity prints as given."""
        word = self.canonical_word(w)
        if not word:
            return identity
        return "*".join(f"s{i}" for i in word)

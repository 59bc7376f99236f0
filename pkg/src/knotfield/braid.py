"""Braid words: parsing, free reduction, Markov conjugation, closure data.

A braid on ``n`` strands is a word in the generators s1..s(n-1); we store it
as a sequence of nonzero integers where ``k`` means s_k and ``-k`` means the
inverse of s_k.  All values are immutable and every operation is a pure
function, so braids can be shared freely across threads.

Convention used throughout the package: the first letter of a word acts
first.  The underlying permutation of a word is therefore the left-to-right
composite of the transpositions (i, i+1), and the Artin representation in
:mod:`knotfield.artin` composes automorphisms the same way.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import GeneratorOutOfRange, MalformedToken, StrandMismatch

_ALIAS = re.compile(r"^s(\d+)(?:\^(-?\d+))?$")


@dataclass(frozen=True)
class BraidWord:
    """A word in braid generators together with its strand count."""

    strands: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError(f"strand count must be positive, got {self.strands}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for k in self.letters:
            if k == 0 or abs(k) >= self.strands:
                raise GeneratorOutOfRange(
                    f"letter {k} is not a generator of the braid group on {self.strands} strands"
                )

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.strands != other.strands:
            raise StrandMismatch(f"cannot concatenate braids on {self.strands} and {other.strands} strands")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-k for k in reversed(self.letters)))

    def to_json_dict(self) -> dict:
        return {"strands": self.strands, "letters": list(self.letters)}

    def __str__(self) -> str:
        return " ".join(str(k) for k in self.letters) if self.letters else "<empty>"


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}, stored as the tuple of images of 1..n."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"{self.images} is not a bijection of 1..{len(self.images)}")

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(1, n + 1)))

    def apply(self, point: int) -> int:
        return self.images[point - 1]

    def then(self, other: "Permutation") -> "Permutation":
        """Composite that applies ``self`` first, then ``other``."""
        return Permutation(tuple(other.images[i - 1] for i in self.images))

    def cycle_count(self) -> int:
        seen = [False] * len(self.images)
        count = 0
        for start in range(len(self.images)):
            if seen[start]:
                continue
            count += 1
            i = start
            while not seen[i]:
                seen[i] = True
                i = self.images[i] - 1
        return count


def parse_braid(text: str, strands: int) -> BraidWord:
    """Parse whitespace/comma separated letters, either signed integers or
    ``sK`` / ``sK^-1`` aliases.  Letters are kept in order, unreduced."""
    letters = []
    for token in text.replace(",", " ").split():
        m = _ALIAS.match(token)
        if m:
            index = int(m.group(1))
            power = int(m.group(2)) if m.group(2) is not None else 1
            if index == 0:
                raise GeneratorOutOfRange("generator index 0 does not exist")
            if power == 0:
                continue
            sign = 1 if power > 0 else -1
            letters.extend([sign * index] * abs(power))
            continue
        try:
            k = int(token)
        except ValueError:
            raise MalformedToken(f"cannot read braid letter {token!r}") from None
        letters.append(k)
    return BraidWord(strands, tuple(letters))


def free_reduce(word: BraidWord) -> BraidWord:
    """Delete adjacent inverse pairs until none remain (single stack pass)."""
    stack: list[int] = []
    for k in word.letters:
        if stack and stack[-1] == -k:
            stack.pop()
        else:
            stack.append(k)
    return BraidWord(word.strands, tuple(stack))


def markov_conjugate(word: BraidWord, conjugator: BraidWord) -> BraidWord:
    """Markov move of the first kind: ``word`` becomes a * word * a^-1, reduced."""
    if word.strands != conjugator.strands:
        raise StrandMismatch(
            f"conjugator on {conjugator.strands} strands does not act on {word.strands}-strand braids"
        )
    return free_reduce(conjugator * word * conjugator.inverse())


def stabilize(word: BraidWord, sign: int = 1) -> BraidWord:
    """Markov move of the second kind: append s_n^(+-1), landing in the next
    braid group.  No invariant of this package is claimed to survive it."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return BraidWord(word.strands + 1, word.letters + (sign * word.strands,))


def underlying_permutation(word: BraidWord) -> Permutation:
    """Project to the symmetric group, first letter acting first.

    Appending the transposition g <-> g+1 *after* the accumulated map means
    swapping the two values in the image tuple, not the two positions; the
    position swap would compose in the opposite order.
    """
    images = list(range(1, word.strands + 1))
    for k in word.letters:
        g = abs(k)
        a, b = images.index(g), images.index(g + 1)
        images[a], images[b] = images[b], images[a]
    return Permutation(tuple(images))


def closure_components(word: BraidWord) -> int:
    """Number of components of the closed-up braid; 1 means the closure is a knot."""
    return underlying_permutation(word).cycle_count()

"""Braid words, the word problem, cabling, and the mirror involution.

Convention, used package-wide: in a product ``w1 * w2`` the letters of w1
act first.  Permutations therefore compose diagrammatically (``p * q`` is
"p then q"), and the free-group action of a word is the composite of its
letter substitutions applied left to right.

The word problem has two routes.  The normative oracle is the action on
the free group F_n (sigma_i sends x_i to x_i x_{i+1} x_i^-1 and x_{i+1}
to x_i); a word is trivial iff it acts as the identity.  The fast path is
handle reduction: repeatedly rewrite the handle with the leftmost closing
letter until none remains.  A fully reduced word is empty or keeps a
constant sign on its lowest-index generator, and the latter kind is never
trivial, so emptiness decides.  ``is_trivial`` cross-checks the two
routes and raises ``WordProblemMismatch`` if they ever disagree.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

# Words at most this long get the free-group cross-check by default.
ORACLE_AUTO_LIMIT = 64

# The automatic cross-check gives up once the endomorphism images hold this
# many letters in total: powers of pseudo-Anosov braids grow exponentially
# under the action, and the default policy must never stall on them.
_ORACLE_SIZE_BUDGET = 250_000

_HANDLE_STEP_LIMIT = 500_000


class BraidParseError(ValueError):
    """Malformed braid word text; ``position`` is a character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class WordProblemMismatch(RuntimeError):
    """The fast path and the free-group oracle disagreed: an implementation bug."""


@dataclass(frozen=True)
class Permutation:
    """Permutation of {1..n}; ``images[i-1]`` is the image of i."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.images)}: {self.images}")

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Diagrammatic composite: self first, then other."""
        if self.n != other.n:
            raise ValueError("permutation size mismatch")
        return Permutation(tuple(other.images[x - 1] for x in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, x in enumerate(self.images, start=1):
            inv[x - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, start=1))

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Nontrivial cycles, each rotated to start at its minimum."""
        seen: set[int] = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cycle.append(x)
                seen.add(x)
                x = self(x)
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return tuple(out)

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


@dataclass(frozen=True)
class BraidWord:
    """Word in the braid group on ``n`` strands.

    Letters are nonzero ints: +i is the generator crossing strands i and
    i+1 positively, -i its inverse.  Words are not reduced implicitly.
    """

    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("strand count must be at least 1")
        object.__setattr__(self, "letters", tuple(self.letters))
        for l in self.letters:
            if not isinstance(l, int) or l == 0 or abs(l) > self.n - 1:
                raise ValueError(f"letter {l!r} is not a generator index of a {self.n}-strand braid")

    @staticmethod
    def identity(n: int) -> "BraidWord":
        return BraidWord(n, ())

    @staticmethod
    def generator(n: int, i: int, power: int = 1) -> "BraidWord":
        if not 1 <= i <= n - 1:
            raise ValueError(f"generator index {i} out of range for {n} strands")
        sign = 1 if power >= 0 else -1
        return BraidWord(n, (sign * i,) * abs(power))

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.n != other.n:
            raise ValueError(f"strand count mismatch: {self.n} vs {other.n}")
        return BraidWord(self.n, self.letters + other.letters)

    def __pow__(self, exponent: int) -> "BraidWord":
        if exponent >= 0:
            return BraidWord(self.n, self.letters * exponent)
        return self.inverse() ** (-exponent)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.n, tuple(-l for l in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return format_braid_word(self)


@dataclass(frozen=True)
class FreeGroupEndo:
    """Endomorphism of the free group F_n; image words are freely reduced."""

    n: int
    images: tuple[tuple[int, ...], ...]

    @staticmethod
    def identity(n: int) -> "FreeGroupEndo":
        return FreeGroupEndo(n, tuple((i,) for i in range(1, n + 1)))

    def is_identity(self) -> bool:
        return all(w == (i,) for i, w in enumerate(self.images, start=1))

    def apply(self, word: Iterable[int]) -> tuple[int, ...]:
        """Image of a free-group word, freely reduced."""
        out: list[int] = []
        for x in word:
            img = self.images[x - 1] if x > 0 else tuple(-y for y in reversed(self.images[-x - 1]))
            for y in img:
                if out and out[-1] == -y:
                    out.pop()
                else:
                    out.append(y)
        return tuple(out)


def _free_reduce(letters: Sequence[int]) -> list[int]:
    out: list[int] = []
    for l in letters:
        if out and out[-1] == -l:
            out.pop()
        else:
            out.append(l)
    return out


def free_reduce(word: BraidWord) -> BraidWord:
    """Cancel adjacent inverse pairs until none remain."""
    return BraidWord(word.n, tuple(_free_reduce(word.letters)))


def underlying_permutation(word: BraidWord) -> Permutation:
    """Strand-start to strand-end permutation of the word."""
    images = list(range(1, word.n + 1))        # images[s-1]: current position of strand s
    at = list(range(1, word.n + 1))            # at[p-1]: strand currently at position p
    for l in word.letters:
        i = abs(l)
        s, t = at[i - 1], at[i]
        images[s - 1], images[t - 1] = i + 1, i
        at[i - 1], at[i] = t, s
    return Permutation(tuple(images))


def _action_images(word: BraidWord, budget: int | None) -> list[list[int]] | None:
    """Images of the generators under the word's action, or None once the
    total image size exceeds ``budget``."""
    n = word.n
    images: list[list[int]] = [[i] for i in range(1, n + 1)]
    for l in word.letters:
        i = abs(l)
        if l > 0:
            rep = {i: (i, i + 1, -i), -i: (i, -(i + 1), -i), i + 1: (i,), -(i + 1): (-i,)}
        else:
            rep = {i: (i + 1,), -i: (-(i + 1),), i + 1: (-(i + 1), i, i + 1), -(i + 1): (-(i + 1), -i, i + 1)}
        for idx, w in enumerate(images):
            out: list[int] = []
            for x in w:
                for y in rep.get(x, (x,)):
                    if out and out[-1] == -y:
                        out.pop()
                    else:
                        out.append(y)
            images[idx] = out
        if budget is not None and sum(len(w) for w in images) > budget:
            return None
    return images


def artin_action(word: BraidWord) -> FreeGroupEndo:
    """Action of the word on F_n, letters applied left to right.

    This is the package's word-problem oracle: the action is faithful, so
    the image is the identity endomorphism iff the word is trivial.
    """
    images = _action_images(word, None)
    assert images is not None
    return FreeGroupEndo(word.n, tuple(tuple(w) for w in images))


def _first_handle(word: Sequence[int], n: int) -> tuple[int, int] | None:
    """Leftmost-closing handle (s, t): word[s..t] = s_i^e ... s_i^-e with
    every interior letter of index > i.  Such a handle contains no nested
    handle, so rewriting it is always permitted."""
    last = [-1] * n  # last[i]: most recent position of a letter of index i
    for t, l in enumerate(word):
        i = abs(l)
        p = last[i]
        if p >= 0 and word[p] == -l and all(last[j] <= p for j in range(1, i)):
            return p, t
        last[i] = t
    return None


def _reduce_handle(word: list[int], s: int, t: int) -> list[int]:
    i = abs(word[s])
    e = 1 if word[s] > 0 else -1
    mid: list[int] = []
    for l in word[s + 1:t]:
        if abs(l) == i + 1:
            d = 1 if l > 0 else -1
            mid.extend((-e * (i + 1), d * i, e * (i + 1)))
        else:
            mid.append(l)
    return word[:s] + mid + word[t + 1:]


def handle_reduce(word: BraidWord) -> BraidWord:
    """Fully handle-reduced word representing the same braid."""
    letters = _free_reduce(word.letters)
    steps = 0
    while True:
        h = _first_handle(letters, word.n)
        if h is None:
            return BraidWord(word.n, tuple(letters))
        letters = _free_reduce(_reduce_handle(letters, *h))
        steps += 1
        if steps > _HANDLE_STEP_LIMIT:
            raise RuntimeError("handle reduction exceeded its step budget")


def is_trivial(word: BraidWord, *, oracle: bool | None = None) -> bool:
    """Decide whether the word represents the identity braid.

    The fast path is handle reduction.  With ``oracle=True`` the free-group
    action is computed as well and a disagreement raises
    WordProblemMismatch.  The default runs the cross-check for words of at
    most ORACLE_AUTO_LIMIT letters, abandoning it (fast path only) if the
    action's images outgrow an internal budget.
    """
    fast = len(handle_reduce(word)) == 0
    if oracle is None:
        if len(word.letters) <= ORACLE_AUTO_LIMIT:
            images = _action_images(word, _ORACLE_SIZE_BUDGET)
            if images is None:
                return fast
            slow = all(w == [i] for i, w in enumerate(images, start=1))
            _require_agreement(fast, slow, word)
        return fast
    if oracle:
        slow = artin_action(word).is_identity()
        _require_agreement(fast, slow, word)
    return fast


def _require_agreement(fast: bool, slow: bool, word: BraidWord) -> None:
    if slow != fast:
        raise WordProblemMismatch(
            f"handle reduction says trivial={fast} but the free-group action says trivial={slow} "
            f"for {format_braid_word(word)}"
        )


def equal(w1: BraidWord, w2: BraidWord, *, oracle: bool | None = None) -> bool:
    """True iff the two words represent the same braid."""
    if w1.n != w2.n:
        raise ValueError(f"strand count mismatch: {w1.n} vs {w2.n}")
    return is_trivial(w1 * w2.inverse(), oracle=oracle)


def mirror(word: BraidWord) -> BraidWord:
    """Mirror involution sigma_i -> sigma_i^-1 (an automorphism of the
    braid group that preserves the underlying permutation)."""
    return BraidWord(word.n, tuple(-l for l in word.letters))


def _block_crossing(a: int, k: int) -> list[int]:
    """Positive crossing of two adjacent width-k cables over strands
    a+1..a+2k; the left cable passes over the right one."""
    out: list[int] = []
    for c in range(k):
        out.extend(range(a + k + c, a + c, -1))
    return out


def cable(q: int, k: int, sigma: BraidWord, mus: Sequence[BraidWord]) -> BraidWord:
    """Replace each strand of sigma (a q-strand word) by a width-k cable,
    inserting mu_i on cable i where strand i of sigma begins.

    The result lives in the braid group on q*k strands.  With the fixed
    composition convention this is a homomorphism from the wreath-product
    law implemented by ``wreath_multiply``.
    """
    if sigma.n != q:
        raise ValueError(f"sigma must have {q} strands, has {sigma.n}")
    if len(mus) != q:
        raise ValueError(f"expected {q} cable words, got {len(mus)}")
    for c, mu in enumerate(mus):
        if mu.n != k:
            raise ValueError(f"cable word {c + 1} must have {k} strands, has {mu.n}")
    letters: list[int] = []
    for c, mu in enumerate(mus):
        off = c * k
        letters.extend(l + off if l > 0 else l - off for l in mu.letters)
    for l in sigma.letters:
        block = _block_crossing((abs(l) - 1) * k, k)
        if l > 0:
            letters.extend(block)
        else:
            letters.extend(-x for x in reversed(block))
    return BraidWord(q * k, tuple(letters))


def wreath_multiply(
    left: tuple[BraidWord, Sequence[BraidWord]],
    right: tuple[BraidWord, Sequence[BraidWord]],
) -> tuple[BraidWord, tuple[BraidWord, ...]]:
    """Product in the wreath product: (s; m) * (s'; m') = (s*s'; nu) with
    nu_i = m_i * m'_{p(i)} and p the underlying permutation of s.  This is
    the unique law making ``cable`` multiplicative under the package's
    composition convention."""
    sigma, mus = left
    sigma2, mus2 = right
    p = underlying_permutation(sigma)
    nu = tuple(mus[i] * mus2[p(i + 1) - 1] for i in range(len(mus)))
    return sigma * sigma2, nu


_HEADER_RE = re.compile(r"^\s*b(\d+)\s*:")
_LETTER_RE = re.compile(r"^s(\d+)(\^-1)?$")


def parse_braid_word(text: str) -> BraidWord:
    """Parse the text format ``b<n>: s1 s2^-1`` (``e`` for the empty word)."""
    m = _HEADER_RE.match(text)
    if not m:
        raise BraidParseError("expected a header like 'b3:'", 0)
    n = int(m.group(1))
    if n < 1:
        raise BraidParseError("strand count must be at least 1", m.start(1))
    body_start = m.end()
    tokens = [(tok.start() + body_start, tok.group()) for tok in re.finditer(r"\S+", text[body_start:])]
    if not tokens:
        raise BraidParseError("expected letters or 'e' after the header", body_start)
    if tokens[0][1] == "e":
        if len(tokens) > 1:
            raise BraidParseError(f"unexpected token {tokens[1][1]!r} after 'e'", tokens[1][0])
        return BraidWord(n, ())
    letters = []
    for pos, tok in tokens:
        lm = _LETTER_RE.match(tok)
        if not lm:
            raise BraidParseError(f"unexpected token {tok!r}", pos)
        i = int(lm.group(1))
        if not 1 <= i <= n - 1:
            raise BraidParseError(f"generator s{i} out of range for {n} strands", pos)
        letters.append(-i if lm.group(2) else i)
    return BraidWord(n, tuple(letters))


def format_braid_word(word: BraidWord) -> str:
    """Inverse of ``parse_braid_word``; round-trips bit-exactly."""
    if not word.letters:
        return f"b{word.n}: e"
    body = " ".join(f"s{l}" if l > 0 else f"s{-l}^-1" for l in word.letters)
    return f"b{word.n}: {body}"

"""Artin groups attached to graphs, their abelianizations, and a sound
nontriviality certificate.

A graph yields a group with one generator per full edge.  Two edges that
share a vertex satisfy the braid relation efe = fef; two disjoint edges
commute.  The braid groups themselves arise this way from path graphs, and
``braid_presentation`` emits the same relator shapes directly so the two
can be compared as presentations.

Nontriviality is certified through the Coxeter quotient (add e² = 1): the
quotient kills information, so a word whose reflection image is not the
identity is certainly nontrivial, while the identity image decides
nothing.  The reflection representation is exact over the rationals since
the only Coxeter labels arising from graphs are 2 and 3.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .graphs import MarkedGraph
from .linalg import ExactMatrix, smith_normal_form

Word = tuple[int, ...]


class PresentationError(ValueError):
    """Word or relator refers to a generator outside the presentation."""


@dataclass(frozen=True)
class Presentation:
    """Finite presentation; relators are words of signed 1-based generator
    indices (+i for the i-th generator, -i for its inverse)."""

    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self) -> None:
        names = set(self.generators)
        if len(names) != len(self.generators):
            raise ValueError("duplicate generator names")
        for rel in self.relators:
            self.validate_word(rel)

    def validate_word(self, word: Iterable[int]) -> Word:
        w = tuple(word)
        for l in w:
            if l == 0 or abs(l) > len(self.generators):
                raise PresentationError(
                    f"letter {l} outside generators 1..{len(self.generators)}"
                )
        return w

    def parse_word(self, text: str) -> Word:
        """Word from text: generator names separated by spaces, each with an
        optional ^-1; 'e' alone is the empty word."""
        stripped = text.strip()
        if stripped == "e":
            return ()
        index = {name: i + 1 for i, name in enumerate(self.generators)}
        letters: list[int] = []
        for tok in stripped.split():
            m = re.fullmatch(r"(.+?)(\^-1)?", tok)
            assert m is not None
            name, inv = m.group(1), m.group(2)
            if name not in index:
                raise PresentationError(f"unknown generator {name!r}")
            letters.append(-index[name] if inv else index[name])
        return tuple(letters)

    def format_word(self, word: Iterable[int]) -> str:
        w = self.validate_word(word)
        if not w:
            return "e"
        return " ".join(
            self.generators[l - 1] if l > 0 else f"{self.generators[-l - 1]}^-1" for l in w
        )

    def exponent_matrix(self) -> ExactMatrix:
        """Relator-by-generator integer matrix of exponent sums."""
        rows = []
        for rel in self.relators:
            row = [0] * len(self.generators)
            for l in rel:
                row[abs(l) - 1] += 1 if l > 0 else -1
            rows.append(row)
        return ExactMatrix.from_rows(rows, cols=len(self.generators))

    def to_json_obj(self) -> dict:
        return {"generators": list(self.generators), "relators": [list(r) for r in self.relators]}

    @staticmethod
    def from_json_obj(obj: dict) -> "Presentation":
        return Presentation(
            tuple(str(g) for g in obj["generators"]),
            tuple(tuple(int(l) for l in r) for r in obj.get("relators", ())),
        )

    def __str__(self) -> str:
        gens = ", ".join(self.generators) if self.generators else "-"
        rels = ", ".join(self.format_word(r) for r in self.relators)
        return f"< {gens} | {rels} >" if self.relators else f"< {gens} | >"


def _braid_relator(i: int, j: int) -> Word:
    return (i, j, i, -j, -i, -j)


def _commutator_relator(i: int, j: int) -> Word:
    return (i, j, -i, -j)


def braid_presentation(k: int) -> Presentation:
    """Standard presentation of the braid group on k strands: generators
    s1..s(k-1), braid relators for adjacent indices, commutators otherwise."""
    if k < 1:
        raise ValueError("strand count must be >= 1")
    gens = tuple(f"s{i}" for i in range(1, k))
    relators: list[Word] = []
    for i in range(1, k):
        for j in range(i + 1, k):
            relators.append(_braid_relator(i, j) if j == i + 1 else _commutator_relator(i, j))
    return Presentation(gens, tuple(relators))


def presentation_from_graph(graph: MarkedGraph) -> Presentation:
    """Artin group of the graph: one generator per full edge (in the graph's
    sorted edge order, named g1, g2, ...), braid relator for each pair of
    edges sharing a vertex, commutator for each disjoint pair."""
    edges = graph.edges
    gens = tuple(f"g{i}" for i in range(1, len(edges) + 1))
    relators: list[Word] = []
    for a in range(len(edges)):
        for b in range(a + 1, len(edges)):
            adjacent = bool(set(edges[a]) & set(edges[b]))
            relators.append(
                _braid_relator(a + 1, b + 1) if adjacent else _commutator_relator(a + 1, b + 1)
            )
    return Presentation(gens, tuple(relators))


@dataclass(frozen=True)
class AbelianInvariants:
    """H_1 of a presented group: free rank plus nontrivial torsion divisors
    in the divisibility order."""

    free_rank: int
    torsion: tuple[int, ...]

    def to_json_obj(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    def __str__(self) -> str:
        parts = []
        if self.free_rank:
            parts.append(f"Z^{self.free_rank}" if self.free_rank > 1 else "Z")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


def abelianization(pres: Presentation) -> AbelianInvariants:
    """Invariant factors of the exponent-sum matrix via Smith normal form."""
    m = pres.exponent_matrix()
    d, _, _ = smith_normal_form(m)
    factors = [d.entries[i][i] for i in range(min(d.rows, d.cols)) if d.entries[i][i] != 0]
    return AbelianInvariants(
        free_rank=len(pres.generators) - len(factors),
        torsion=tuple(f for f in factors if f > 1),
    )


@dataclass(frozen=True)
class CoxeterSystem:
    """Coxeter matrix with labels in {2, 3} off the diagonal, as produced by
    graphs (adjacent edges 3, disjoint edges 2)."""

    labels: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        r = len(self.labels)
        for i, row in enumerate(self.labels):
            if len(row) != r:
                raise ValueError("Coxeter matrix must be square")
            for j, m in enumerate(row):
                if i == j and m != 1:
                    raise ValueError("diagonal Coxeter labels must be 1")
                if i != j and m not in (2, 3):
                    raise ValueError(f"unsupported Coxeter label {m} at ({i + 1},{j + 1})")
                if m != self.labels[j][i]:
                    raise ValueError("Coxeter matrix must be symmetric")

    @staticmethod
    def from_graph(graph: MarkedGraph) -> "CoxeterSystem":
        edges = graph.edges
        r = len(edges)
        labels = [
            [
                1 if a == b else (3 if set(edges[a]) & set(edges[b]) else 2)
                for b in range(r)
            ]
            for a in range(r)
        ]
        return CoxeterSystem(tuple(tuple(row) for row in labels))

    @property
    def rank(self) -> int:
        return len(self.labels)

    def bilinear(self, s: int, t: int) -> Fraction:
        """Form value B(alpha_s, alpha_t) = -cos(pi / label); exact because
        only labels 1, 2, 3 occur (values 1, 0, -1/2)."""
        m = self.labels[s - 1][t - 1]
        return {1: Fraction(1), 2: Fraction(0), 3: Fraction(-1, 2)}[m]

    def bilinear_matrix(self) -> ExactMatrix:
        r = self.rank
        return ExactMatrix.from_rows(
            [[self.bilinear(a, b) for b in range(1, r + 1)] for a in range(1, r + 1)], cols=r
        )

    def reflection(self, s: int) -> ExactMatrix:
        """Matrix of the s-th simple reflection x -> x - 2B(x, a_s) a_s on
        row vectors: the identity with column s replaced."""
        if not (1 <= s <= self.rank):
            raise PresentationError(f"generator {s} outside 1..{self.rank}")
        rows = [[1 if a == b else 0 for b in range(self.rank)] for a in range(self.rank)]
        for a in range(1, self.rank + 1):
            rows[a - 1][s - 1] = (1 if a == s else 0) - 2 * self.bilinear(a, s)
        return ExactMatrix.from_rows(rows, cols=self.rank)

    def image(self, word: Iterable[int]) -> ExactMatrix:
        """Image of a word in the reflection representation; a generator and
        its inverse map to the same reflection (reflections are involutions),
        letters act left to right on row vectors."""
        result = ExactMatrix.identity(self.rank)
        for l in word:
            result = result * self.reflection(abs(l))
        return result


class Certificate(enum.Enum):
    NONTRIVIAL = "nontrivial"
    INCONCLUSIVE = "inconclusive"


def certify_nontrivial(graph: MarkedGraph, word: Iterable[int]) -> Certificate:
    """Sound one-sided test for nontriviality of a word in the graph's Artin
    group, via the Coxeter quotient in its reflection representation: a
    non-identity image certifies nontriviality, an identity image decides
    nothing."""
    system = CoxeterSystem.from_graph(graph)
    pres = presentation_from_graph(graph)
    image = system.image(pres.validate_word(word))
    return Certificate.INCONCLUSIVE if image.is_identity() else Certificate.NONTRIVIAL

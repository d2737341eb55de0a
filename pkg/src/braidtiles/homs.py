"""Group homomorphisms realized on first homology, in exact arithmetic.

Everything here acts on row vectors from the right, so images compose
covariantly with words: image(w1 * w2) = image(w1) * image(w2).

The braid group on 2g strands maps to Sp(2g, Z) by sending each generator
to the transvection along the matching curve class of the standard chain;
a tile's Artin generators map to braids by half twists along bands, and to
transvections over the free module on the tile's edges.  Wreath-shaped
maps place symplectic blocks side by side and let a braid permute the
blocks.  These are homology shadows, not faithful images: identities of
images are necessary conditions only, but any two distinct images
certify a genuine difference, which is what the discrepancy witness uses.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence, TypeVar

from .artin import Presentation
from .braid import BraidWord, cable, mirror, underlying_permutation
from .graphs import MarkedGraph
from .linalg import ExactMatrix, SymplecticForm, is_symplectic
from .reporting import CheckRecord, Report

T = TypeVar("T")


@dataclass(frozen=True)
class CurveClass:
    """Homology class of a curve on the genus-g surface, in coordinates
    over the basis x1, y1, ..., xg, yg."""

    genus: int
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.genus < 1:
            raise ValueError("genus must be >= 1")
        if len(self.coords) != 2 * self.genus:
            raise ValueError(f"expected {2 * self.genus} coordinates, got {len(self.coords)}")


def chain_classes(g: int) -> tuple[CurveClass, ...]:
    """Classes of the 2g-1 chain curves: odd positions give y_i, even
    positions give x_i - x_{i+1}.  Consecutive classes pair to ±1 and all
    others to 0, matching curves that meet exactly once."""
    if g < 1:
        raise ValueError("genus must be >= 1")
    out: list[CurveClass] = []
    for j in range(1, 2 * g):
        coords = [0] * (2 * g)
        if j % 2 == 1:
            i = (j + 1) // 2
            coords[2 * i - 1] = 1  # y_i
        else:
            i = j // 2
            coords[2 * i - 2] = 1  # x_i
            coords[2 * i] = -1  # -x_{i+1}
        out.append(CurveClass(g, tuple(coords)))
    return tuple(out)


def transvection(c: CurveClass, form: SymplecticForm | None = None) -> ExactMatrix:
    """Matrix of x -> x + <x, c> c (row convention); always symplectic."""
    form = form or SymplecticForm(c.genus)
    if form.dim != 2 * c.genus:
        raise ValueError(f"form dimension {form.dim} does not match genus {c.genus}")
    n = form.dim
    weights = [form.pairing(_basis_row(n, a), c.coords) for a in range(n)]
    rows = [
        [(1 if a == b else 0) + weights[a] * c.coords[b] for b in range(n)]
        for a in range(n)
    ]
    return ExactMatrix.from_rows(rows, cols=n)


def _basis_row(n: int, a: int) -> tuple[int, ...]:
    return tuple(1 if b == a else 0 for b in range(n))


def braid_to_symplectic(g: int, word: BraidWord) -> ExactMatrix:
    """Symplectic image of a braid word on 2g strands: generator i goes to
    the transvection along the i-th chain class."""
    if word.n != 2 * g:
        raise ValueError(f"word is on {word.n} strands, genus {g} needs {2 * g}")
    classes = chain_classes(g)
    form = SymplecticForm(g)
    twists: dict[int, ExactMatrix] = {}
    result = ExactMatrix.identity(2 * g)
    for l in word.letters:
        i = abs(l)
        if i not in twists:
            twists[i] = transvection(classes[i - 1], form)
        m = twists[i] if l > 0 else twists[i].inverse()
        result = result * m
    return result


def band_generator(k: int, i: int, j: int) -> BraidWord:
    """Half twist exchanging strands i < j along a band passing in front of
    the strands between them: (s_{j-1} ... s_{i+1}) s_i (s_{i+1}^-1 ... s_{j-1}^-1)."""
    if not (1 <= i < j <= k):
        raise ValueError(f"need 1 <= i < j <= {k}, got ({i}, {j})")
    letters = [m for m in range(j - 1, i, -1)] + [i] + [-m for m in range(i + 1, j)]
    return BraidWord(k, tuple(letters))


def half_twist_image(graph: MarkedGraph, word: Iterable[int]) -> BraidWord:
    """Braid image of a word in the graph's Artin generators: the edge
    between points i < j maps to the band generator on (i, j), on as many
    strands as the graph has points."""
    k = graph.points
    result = BraidWord.identity(k)
    edges = graph.edges
    for l in word:
        if l == 0 or abs(l) > len(edges):
            raise ValueError(f"letter {l} outside edge generators 1..{len(edges)}")
        a, b = edges[abs(l) - 1]
        band = band_generator(k, a, b)
        result = result * (band if l > 0 else band.inverse())
    return result


@dataclass(frozen=True)
class EdgeTransvectionRep:
    """Transvections over the free module on a tree's edges: the pairing of
    two edges is ±1 when they share a vertex and 0 otherwise, mirroring
    curves that intersect once exactly when their edges are adjacent."""

    edges: tuple[tuple[int, int], ...]
    pairing: ExactMatrix

    def __post_init__(self) -> None:
        e = len(self.edges)
        if self.pairing.rows != e or self.pairing.cols != e:
            raise ValueError("pairing matrix must be square on the edge set")
        for a in range(e):
            for b in range(e):
                v = self.pairing.entries[a][b]
                if v != -self.pairing.entries[b][a]:
                    raise ValueError("pairing must be skew-symmetric")
                adjacent = a != b and bool(set(self.edges[a]) & set(self.edges[b]))
                if adjacent and v not in (1, -1):
                    raise ValueError(f"adjacent edges {a + 1},{b + 1} must pair to ±1")
                if not adjacent and v != 0:
                    raise ValueError(f"non-adjacent edges {a + 1},{b + 1} must pair to 0")

    @staticmethod
    def from_graph(graph: MarkedGraph, signs: Mapping[tuple[int, int], int] | None = None) -> "EdgeTransvectionRep":
        """Representation on the graph's sorted edges.  ``signs`` optionally
        assigns the pairing of each adjacent pair (a, b), a < b, 0-based;
        the default is +1.  Any assignment satisfies the Artin relations,
        so the choice is a convention, tested under all of them."""
        edges = graph.edges
        e = len(edges)
        rows = [[0] * e for _ in range(e)]
        for a in range(e):
            for b in range(a + 1, e):
                if set(edges[a]) & set(edges[b]):
                    s = signs.get((a, b), 1) if signs else 1
                    if s not in (1, -1):
                        raise ValueError(f"sign for pair ({a}, {b}) must be ±1")
                    rows[a][b] = s
                    rows[b][a] = -s
        return EdgeTransvectionRep(edges, ExactMatrix.from_rows(rows, cols=e))

    def transvection(self, index: int) -> ExactMatrix:
        """Transvection along the basis vector of edge ``index`` (1-based):
        the identity with column ``index`` shifted by the pairing column."""
        e = len(self.edges)
        if not (1 <= index <= e):
            raise ValueError(f"edge index {index} outside 1..{e}")
        rows = [
            [
                (1 if a == b else 0) + (self.pairing.entries[a][index - 1] if b == index - 1 else 0)
                for b in range(e)
            ]
            for a in range(e)
        ]
        return ExactMatrix.from_rows(rows, cols=e)

    def image(self, word: Iterable[int]) -> ExactMatrix:
        result = ExactMatrix.identity(len(self.edges))
        cache: dict[int, ExactMatrix] = {}
        for l in word:
            i = abs(l)
            if i not in cache:
                cache[i] = self.transvection(i)
            m = cache[i] if l > 0 else cache[i].inverse()
            result = result * m
        return result


def edge_transvection_image(graph: MarkedGraph, word: Iterable[int], signs: Mapping[tuple[int, int], int] | None = None) -> ExactMatrix:
    """Image of an Artin word in the edge-transvection representation."""
    return EdgeTransvectionRep.from_graph(graph, signs).image(word)


def _block_swap(q: int, block: int, width: int) -> ExactMatrix:
    """Permutation matrix exchanging blocks ``block`` and ``block``+1 of
    ``q`` consecutive width-``width`` blocks."""
    n = q * width
    lo = (block - 1) * width
    rows = []
    for a in range(n):
        if lo <= a < lo + width:
            target = a + width
        elif lo + width <= a < lo + 2 * width:
            target = a - width
        else:
            target = a
        rows.append([1 if b == target else 0 for b in range(n)])
    return ExactMatrix.from_rows(rows, cols=n)


def wreath_symplectic(q: int, g: int, sigma: BraidWord, fs: Sequence[ExactMatrix]) -> ExactMatrix:
    """Place q symplectic genus-g blocks on the diagonal, then let the braid
    permute the blocks: blocks act first, then per letter of sigma the
    matching adjacent block swap.  A letter and its inverse swap alike (the
    curve enclosing two blocks is separating, so the square of the swap
    acts trivially on homology), hence the image depends only on the
    underlying permutation of sigma once the blocks are fixed."""
    if sigma.n != q:
        raise ValueError(f"sigma is on {sigma.n} strands, expected {q}")
    if len(fs) != q:
        raise ValueError(f"expected {q} block matrices, got {len(fs)}")
    form = SymplecticForm(g)
    for i, f in enumerate(fs):
        if not is_symplectic(f, form):
            raise ValueError(f"block {i + 1} is not symplectic for genus {g}")
    result = ExactMatrix.block_diagonal(list(fs))
    for l in sigma.letters:
        result = result * _block_swap(q, abs(l), 2 * g)
    return result


def block_permutation_image(k: int, g: int, word: BraidWord) -> ExactMatrix:
    """Symplectic image of a braid through block permutations alone
    (identity blocks), so it only sees the underlying permutation."""
    identity = ExactMatrix.identity(2 * g)
    return wreath_symplectic(k, g, word, [identity] * k)


@dataclass(frozen=True)
class MirroredPair:
    """Pair of braid words with the same underlying permutation, the
    substrate of the permutation-pullback of two braid groups."""

    first: BraidWord
    second: BraidWord

    def __post_init__(self) -> None:
        if self.first.n != self.second.n:
            raise ValueError("components must share the strand count")
        if underlying_permutation(self.first) != underlying_permutation(self.second):
            raise ValueError("components must have equal underlying permutations")

    def multiply(self, other: "MirroredPair") -> "MirroredPair":
        return MirroredPair(self.first * other.first, self.second * other.second)


def mirrored_pair(word: BraidWord) -> MirroredPair:
    """The pair (word, mirror of word); mirroring preserves the underlying
    permutation, so the pullback condition always holds."""
    return MirroredPair(word, mirror(word))


@dataclass(frozen=True)
class DiscrepancyResult:
    cabled: ExactMatrix
    blockwise: ExactMatrix

    @property
    def equal(self) -> bool:
        return self.cabled == self.blockwise

    def to_json_obj(self) -> dict:
        return {
            "cabled": self.cabled.to_json_obj(),
            "blockwise": self.blockwise.to_json_obj(),
            "equal": self.equal,
        }


def cabling_discrepancy(g: int, q: int, sigma: BraidWord, mus: Sequence[BraidWord]) -> DiscrepancyResult:
    """Compare the two routes from (sigma; mus) to Sp(2qg, Z): symplectic
    image of the cabled braid versus blockwise images permuted by sigma.
    The two agree when sigma is trivial and differ in general, which is the
    finite-level witness that cabling does not commute with taking
    homology blockwise."""
    if sigma.n != q:
        raise ValueError(f"sigma is on {sigma.n} strands, expected {q}")
    for i, mu in enumerate(mus):
        if mu.n != 2 * g:
            raise ValueError(f"mu {i + 1} is on {mu.n} strands, genus {g} needs {2 * g}")
    cabled = braid_to_symplectic(q * g, cable(q, 2 * g, sigma, mus))
    blockwise = wreath_symplectic(q, g, sigma, [braid_to_symplectic(g, mu) for mu in mus])
    return DiscrepancyResult(cabled, blockwise)


def check_relations(
    pres: Presentation,
    images: Mapping[str, T] | Sequence[T],
    multiply: Callable[[T, T], T],
    is_identity: Callable[[T], bool],
    invert: Callable[[T], T] | None = None,
    suite: str = "relation checks",
) -> Report:
    """Evaluate every relator on the given generator images.

    ``images`` maps generator names (or positions, if a sequence) to group
    elements; ``invert`` is required as soon as some relator uses an
    inverse letter.  Each relator yields one pass/fail record; a relator
    passes when its image satisfies ``is_identity``."""
    if isinstance(images, Mapping):
        missing = [g for g in pres.generators if g not in images]
        if missing:
            raise ValueError(f"missing images for generators: {', '.join(missing)}")
        by_index = [images[g] for g in pres.generators]
    else:
        if len(images) != len(pres.generators):
            raise ValueError(
                f"expected {len(pres.generators)} images, got {len(images)}"
            )
        by_index = list(images)
    checks: list[CheckRecord] = []
    for idx, rel in enumerate(pres.relators, start=1):
        started = time.perf_counter()
        name = f"relator {idx}: {pres.format_word(rel)}"
        if not rel:
            checks.append(CheckRecord(name, "pass", "empty relator", time.perf_counter() - started))
            continue
        value: T | None = None
        for l in rel:
            factor = by_index[abs(l) - 1]
            if l < 0:
                if invert is None:
                    raise ValueError("relator uses an inverse letter but no invert was given")
                factor = invert(factor)
            value = factor if value is None else multiply(value, factor)
        assert value is not None
        ok = is_identity(value)
        checks.append(
            CheckRecord(name, "pass" if ok else "fail", "" if ok else "image is not the identity",
                        time.perf_counter() - started)
        )
    return Report(suite, tuple(checks))

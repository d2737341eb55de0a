"""Planar tile diagrams over the atoms D, P, F, and their marked graphs.

A tile is a planar string diagram with n input and m output boundary
intervals, generated by three atoms: D makes an interval out of nothing
(0 to 1), P merges two intervals (2 to 1), F passes one through (1 to 1).
Gluing (``;``, left factor first) and side-by-side union (``+``) build all
others.  Union is deliberately not symmetric: there is no crossing.

Two expressions denote the same tile exactly when they are related by the
interchange law, i.e. when they draw the same anchored diagram.  The
normal form materializes that diagram: every atom has exactly one output,
consumed exactly once, so the diagram is a forest of atom trees hanging
off the global outputs, and numbering the atoms by a depth-first sweep
from the outputs is canonical.

Atoms carry marked points (D none, P one, F two) joined by edges: F's two
points are joined internally, and a glued wire joins the producer-side
point to the consumer-side point.  Points are numbered by the same sweep
in post-order (a producer's points come before its consumer's), which
keeps every tree's chords nested rather than crossing; the braid-group
image of the resulting Artin generators depends on that.  Wires out of D
carry no point, so the consumer's would-be edge end dies with them, and
edge ends facing an unglued boundary interval are kept as half-edges.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Sequence

from .artin import Presentation, presentation_from_graph
from .graphs import HalfEdge, MarkedGraph

# ref into a diagram: ("in", i) is the 0-based global input i,
# ("node", r) is the single output of atom instance r
Ref = tuple[str, int]

_ARITY = {"D": (0, 1), "P": (2, 1), "F": (1, 1)}
_POINTS = {"D": 0, "P": 1, "F": 2}


class TileParseError(ValueError):
    """Malformed tile expression text; ``position`` is a character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class TileExpr:
    """Base class of tile expression terms."""

    @property
    def dom(self) -> int:
        raise NotImplementedError

    @property
    def cod(self) -> int:
        raise NotImplementedError

    def __str__(self) -> str:
        return format_tile_expression(self)


@dataclass(frozen=True)
class AtomExpr(TileExpr):
    tag: str

    def __post_init__(self) -> None:
        if self.tag not in _ARITY:
            raise ValueError(f"unknown atom {self.tag!r}; atoms are D, P, F")

    @property
    def dom(self) -> int:
        return _ARITY[self.tag][0]

    @property
    def cod(self) -> int:
        return _ARITY[self.tag][1]


@dataclass(frozen=True)
class IdentityExpr(TileExpr):
    width: int

    def __post_init__(self) -> None:
        if self.width < 0:
            raise ValueError("identity width must be nonnegative")

    @property
    def dom(self) -> int:
        return self.width

    @property
    def cod(self) -> int:
        return self.width


@dataclass(frozen=True)
class ComposeExpr(TileExpr):
    """Gluing ``first ; second``: first's outputs feed second's inputs."""

    first: TileExpr
    second: TileExpr

    def __post_init__(self) -> None:
        if self.first.cod != self.second.dom:
            raise ValueError(
                f"cannot glue: left tile produces {self.first.cod} intervals, "
                f"right tile expects {self.second.dom}"
            )

    @property
    def dom(self) -> int:
        return self.first.dom

    @property
    def cod(self) -> int:
        return self.second.cod


@dataclass(frozen=True)
class UnionExpr(TileExpr):
    left: TileExpr
    right: TileExpr

    @property
    def dom(self) -> int:
        return self.left.dom + self.right.dom

    @property
    def cod(self) -> int:
        return self.left.cod + self.right.cod


D = AtomExpr("D")
P = AtomExpr("P")
F = AtomExpr("F")


def identity(n: int) -> IdentityExpr:
    return IdentityExpr(n)


def compose(*parts: TileExpr) -> TileExpr:
    """Glue left to right; needs at least one part."""
    if not parts:
        raise ValueError("compose needs at least one tile")
    out = parts[0]
    for p in parts[1:]:
        out = ComposeExpr(out, p)
    return out


def disjoint_union(*parts: TileExpr) -> TileExpr:
    """Place side by side, left to right; empty union is the empty tile."""
    if not parts:
        return IdentityExpr(0)
    out = parts[0]
    for p in parts[1:]:
        out = UnionExpr(out, p)
    return out


# -- text format --------------------------------------------------------

def parse_tile_expression(text: str) -> TileExpr:
    """Parse the tile grammar: atoms D, P, F; identities 1_<n>; ``+`` for
    union binding tighter than ``;`` for gluing; both left-associative;
    parentheses allowed."""
    tokens: list[tuple[str, int, int]] = []  # (kind, value-or-0, position)
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "DPF;+()":
            tokens.append((ch, 0, i))
            i += 1
            continue
        m = re.match(r"1_(\d+)", text[i:])
        if m:
            tokens.append(("1", int(m.group(1)), i))
            i += len(m.group(0))
            continue
        raise TileParseError(f"unexpected character {ch!r}", i)

    pos = 0

    def peek() -> tuple[str, int, int] | None:
        return tokens[pos] if pos < len(tokens) else None

    def parse_sequence() -> TileExpr:
        nonlocal pos
        node = parse_union()
        while (t := peek()) and t[0] == ";":
            pos += 1
            right = parse_union()
            try:
                node = ComposeExpr(node, right)
            except ValueError as exc:
                raise TileParseError(str(exc), t[2]) from None
        return node

    def parse_union() -> TileExpr:
        nonlocal pos
        node = parse_primary()
        while (t := peek()) and t[0] == "+":
            pos += 1
            node = UnionExpr(node, parse_primary())
        return node

    def parse_primary() -> TileExpr:
        nonlocal pos
        t = peek()
        if t is None:
            raise TileParseError("expected a tile term", len(text))
        kind, value, at = t
        if kind in "DPF":
            pos += 1
            return AtomExpr(kind)
        if kind == "1":
            pos += 1
            return IdentityExpr(value)
        if kind == "(":
            pos += 1
            node = parse_sequence()
            t2 = peek()
            if t2 is None or t2[0] != ")":
                raise TileParseError("missing ')'", t2[2] if t2 else len(text))
            pos += 1
            return node
        raise TileParseError(f"expected a tile term, found {kind!r}", at)

    node = parse_sequence()
    if pos < len(tokens):
        raise TileParseError(f"unexpected {tokens[pos][0]!r}", tokens[pos][2])
    return node


def format_tile_expression(expr: TileExpr) -> str:
    """Inverse of the parser up to whitespace: parse(format(e)) == e."""

    def go(e: TileExpr, min_prec: int) -> str:
        if isinstance(e, AtomExpr):
            return e.tag
        if isinstance(e, IdentityExpr):
            return f"1_{e.width}"
        if isinstance(e, UnionExpr):
            s = f"{go(e.left, 1)} + {go(e.right, 2)}"
            return s if min_prec <= 1 else f"({s})"
        if isinstance(e, ComposeExpr):
            s = f"{go(e.first, 0)} ; {go(e.second, 1)}"
            return s if min_prec <= 0 else f"({s})"
        raise TypeError(f"not a tile expression: {e!r}")

    return go(expr, 0)


# -- diagrams and normal form -------------------------------------------

@dataclass
class _Diagram:
    """Concrete port graph of an expression; node ids index ``tags``."""

    dom: int
    cod: int
    tags: list[str]
    inputs: list[list[Ref]]
    outputs: list[Ref]


def _shift(ref: Ref, nodes: int, ins: int) -> Ref:
    kind, i = ref
    return (kind, i + (nodes if kind == "node" else ins))


def _diagram(expr: TileExpr) -> _Diagram:
    if isinstance(expr, AtomExpr):
        n, _ = _ARITY[expr.tag]
        return _Diagram(n, 1, [expr.tag], [[("in", i) for i in range(n)]], [("node", 0)])
    if isinstance(expr, IdentityExpr):
        return _Diagram(expr.width, expr.width, [], [], [("in", i) for i in range(expr.width)])
    if isinstance(expr, UnionExpr):
        d1 = _diagram(expr.left)
        d2 = _diagram(expr.right)
        ns = len(d1.tags)
        return _Diagram(
            d1.dom + d2.dom,
            d1.cod + d2.cod,
            d1.tags + d2.tags,
            d1.inputs + [[_shift(r, ns, d1.dom) for r in row] for row in d2.inputs],
            d1.outputs + [_shift(r, ns, d1.dom) for r in d2.outputs],
        )
    if isinstance(expr, ComposeExpr):
        d1 = _diagram(expr.first)
        d2 = _diagram(expr.second)
        ns = len(d1.tags)

        def splice(ref: Ref) -> Ref:
            kind, i = ref
            return d1.outputs[i] if kind == "in" else ("node", i + ns)

        return _Diagram(
            d1.dom,
            d2.cod,
            d1.tags + d2.tags,
            d1.inputs + [[splice(r) for r in row] for row in d2.inputs],
            [splice(r) for r in d2.outputs],
        )
    raise TypeError(f"not a tile expression: {expr!r}")


def _visit_order(tags: Sequence[str], inputs: Sequence[Sequence[Ref]], outputs: Sequence[Ref]) -> list[int]:
    """Node ids in depth-first preorder from the outputs, ports left to
    right.  Every node's output is consumed exactly once, so this visits
    each node exactly once."""
    order: list[int] = []
    seen: set[int] = set()
    for out in outputs:
        stack = [out]
        while stack:
            kind, i = stack.pop()
            if kind != "node" or i in seen:
                continue
            seen.add(i)
            order.append(i)
            stack.extend(reversed(inputs[i]))
    return order


@dataclass(frozen=True)
class TileNormalForm:
    """Canonical anchored diagram: atoms numbered by the output sweep."""

    dom: int
    cod: int
    tags: tuple[str, ...]
    inputs: tuple[tuple[Ref, ...], ...]
    outputs: tuple[Ref, ...]

    @property
    def atom_count(self) -> int:
        return len(self.tags)

    def to_json_obj(self) -> dict:
        return {
            "dom": self.dom,
            "cod": self.cod,
            "nodes": [
                {"tag": t, "inputs": [list(r) for r in refs]}
                for t, refs in zip(self.tags, self.inputs)
            ],
            "outputs": [list(r) for r in self.outputs],
        }

    @staticmethod
    def from_json_obj(obj: dict) -> "TileNormalForm":
        def ref(pair: Sequence) -> Ref:
            kind, i = pair
            if kind not in ("in", "node"):
                raise ValueError(f"bad ref kind {kind!r}")
            return (str(kind), int(i))

        return TileNormalForm(
            int(obj["dom"]),
            int(obj["cod"]),
            tuple(str(n["tag"]) for n in obj["nodes"]),
            tuple(tuple(ref(r) for r in n["inputs"]) for n in obj["nodes"]),
            tuple(ref(r) for r in obj["outputs"]),
        )

    def __str__(self) -> str:
        return format_tile_expression(to_expression(self))


def normal_form(expr: TileExpr) -> TileNormalForm:
    d = _diagram(expr)
    order = _visit_order(d.tags, d.inputs, d.outputs)
    rank = {j: r for r, j in enumerate(order)}

    def remap(ref: Ref) -> Ref:
        kind, i = ref
        return ref if kind == "in" else ("node", rank[i])

    return TileNormalForm(
        d.dom,
        d.cod,
        tuple(d.tags[j] for j in order),
        tuple(tuple(remap(r) for r in d.inputs[j]) for j in order),
        tuple(remap(r) for r in d.outputs),
    )


def equal_tiles(a: TileExpr, b: TileExpr) -> bool:
    return normal_form(a) == normal_form(b)


def to_expression(nf: TileNormalForm) -> TileExpr:
    """Canonical expression drawing exactly this diagram:
    normal_form(to_expression(nf)) == nf."""

    def terms_of(refs: Sequence[Ref]) -> list[TileExpr]:
        terms: list[TileExpr] = []
        run = 0
        for ref in refs:
            if ref[0] == "in":
                run += 1
                continue
            if run:
                terms.append(IdentityExpr(run))
                run = 0
            terms.append(tree_expr(ref[1]))
        if run:
            terms.append(IdentityExpr(run))
        return terms

    def tree_expr(r: int) -> TileExpr:
        atom = AtomExpr(nf.tags[r])
        refs = nf.inputs[r]
        if all(ref[0] == "in" for ref in refs):
            return atom
        return ComposeExpr(disjoint_union(*terms_of(refs)), atom)

    terms = terms_of(nf.outputs)
    if not terms:
        return IdentityExpr(0)
    return disjoint_union(*terms)


# -- marked points and graphs -------------------------------------------

def _point_labels(tags: Sequence[str], inputs: Sequence[Sequence[Ref]], outputs: Sequence[Ref]) -> dict[tuple[int, int], int]:
    """Label (node, local point) pairs 1..k in post-order along the output
    sweep: a producer's points come before the consumer's own.  Keeps the
    chord diagram of any tree non-crossing."""
    labels: dict[tuple[int, int], int] = {}
    counter = 0
    for out in outputs:
        stack: list[tuple[Ref, bool]] = [(out, False)]
        while stack:
            ref, expanded = stack.pop()
            if ref[0] != "node":
                continue
            r = ref[1]
            if expanded:
                for p in range(_POINTS[tags[r]]):
                    counter += 1
                    labels[(r, p)] = counter
            else:
                stack.append((ref, True))
                stack.extend((child, False) for child in reversed(inputs[r]))
    return labels


def _out_stub_point(tags: Sequence[str], labels: dict, r: int) -> int | None:
    """Marked point carrying node r's outgoing edge end; None for D."""
    tag = tags[r]
    if tag == "F":
        return labels[(r, 1)]
    if tag == "P":
        return labels[(r, 0)]
    return None


def _graph_of(tags: Sequence[str], inputs: Sequence[Sequence[Ref]], outputs: Sequence[Ref]) -> MarkedGraph:
    labels = _point_labels(tags, inputs, outputs)
    edges: list[tuple[int, int]] = []
    halves: list[HalfEdge] = []
    for r, tag in enumerate(tags):
        if tag == "F":
            edges.append((labels[(r, 0)], labels[(r, 1)]))
        for ref in inputs[r]:
            consumer = labels[(r, 0)]  # F and P both anchor incoming ends on their first point
            if ref[0] == "in":
                halves.append(HalfEdge(consumer, "in", ref[1] + 1))
            else:
                producer = _out_stub_point(tags, labels, ref[1])
                if producer is not None:
                    edges.append((min(producer, consumer), max(producer, consumer)))
                # a wire out of D carries no point: the consumer's edge end dies
    for o, ref in enumerate(outputs):
        if ref[0] == "node":
            producer = _out_stub_point(tags, labels, ref[1])
            if producer is not None:
                halves.append(HalfEdge(producer, "out", o + 1))
    return MarkedGraph(len(labels), tuple(edges), tuple(halves))


def marked_graph_of(tile: TileExpr | TileNormalForm) -> MarkedGraph:
    """The tile's marked graph: points in the package's planar order, edges
    from F's internal join and from glued wires, half-edges at the
    boundary.  Always a forest with maximum degree 3."""
    nf = tile if isinstance(tile, TileNormalForm) else normal_form(tile)
    return _graph_of(nf.tags, nf.inputs, nf.outputs)


def marked_point_count(tile: TileExpr | TileNormalForm) -> int:
    """Number of marked points; the braid group on this many strands is the
    tile's endomorphism group after completion (half twists around edges
    generate only a subgroup in general)."""
    nf = tile if isinstance(tile, TileNormalForm) else normal_form(tile)
    return sum(_POINTS[t] for t in nf.tags)


def endomorphism_presentation(tile: TileExpr | TileNormalForm) -> Presentation:
    """Artin presentation on the full edges of the tile's marked graph."""
    return presentation_from_graph(marked_graph_of(tile))


def compose_point_maps(t1: TileExpr, t2: TileExpr) -> tuple[dict[int, int], dict[int, int]]:
    """Injections of the marked points of t1 and of t2 into those of
    ``compose(t1, t2)``, by point label."""
    return _part_point_maps(t1, t2, ComposeExpr(t1, t2))


def union_point_maps(t1: TileExpr, t2: TileExpr) -> tuple[dict[int, int], dict[int, int]]:
    """Same for ``disjoint_union(t1, t2)``."""
    return _part_point_maps(t1, t2, UnionExpr(t1, t2))


def _part_point_maps(t1: TileExpr, t2: TileExpr, whole: TileExpr) -> tuple[dict[int, int], dict[int, int]]:
    d1 = _diagram(t1)
    d2 = _diagram(t2)
    d = _diagram(whole)  # nodes of t1 keep their ids, nodes of t2 shift up
    shift = len(d1.tags)
    l1 = _point_labels(d1.tags, d1.inputs, d1.outputs)
    l2 = _point_labels(d2.tags, d2.inputs, d2.outputs)
    l = _point_labels(d.tags, d.inputs, d.outputs)
    inj1 = {v: l[key] for key, v in l1.items()}
    inj2 = {v: l[(key[0] + shift, key[1])] for key, v in l2.items()}
    return inj1, inj2


# -- enumeration ---------------------------------------------------------

def enumerate_trees(max_atoms: int) -> tuple[tuple[TileExpr, ...], ...]:
    """All single-output tiles with no through-wires, grouped by atom count:
    entry i-1 lists the trees with exactly i atoms (3, 9, 36, 162, 783, ...).
    A tree is an atom whose input slots each take a bare input wire or a
    smaller tree."""
    if max_atoms < 0:
        raise ValueError("atom budget must be nonnegative")
    by_size: list[list[TileExpr]] = [[] for _ in range(max_atoms)]
    for n in range(1, max_atoms + 1):
        out = by_size[n - 1]
        if n == 1:
            out.extend((D, F, P))
        else:
            for sub in by_size[n - 2]:
                out.append(ComposeExpr(sub, F))
            for sub in by_size[n - 2]:
                out.append(ComposeExpr(UnionExpr(IdentityExpr(1), sub), P))
                out.append(ComposeExpr(UnionExpr(sub, IdentityExpr(1)), P))
            for a in range(1, n - 1):
                for left in by_size[a - 1]:
                    for right in by_size[n - 2 - a]:
                        out.append(ComposeExpr(UnionExpr(left, right), P))
    return tuple(tuple(group) for group in by_size)


def enumerate_tiles(max_atoms: int) -> Iterator[TileExpr]:
    """All tiles with 1..max_atoms atoms and no through-wires: ordered
    unions of trees.  Through-wire padding never changes the marked graph,
    so this is the whole supply of marked graphs at the budget."""
    trees = enumerate_trees(max_atoms)

    def forests(total: int) -> Iterator[list[TileExpr]]:
        if total == 0:
            yield []
            return
        for size in range(1, total + 1):
            for first in trees[size - 1]:
                for rest in forests(total - size):
                    yield [first] + rest

    for total in range(1, max_atoms + 1):
        for forest in forests(total):
            yield disjoint_union(*forest)

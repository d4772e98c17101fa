"""
Medial quivers of constellations, their gentle length-2 relations, the
four surface-algebra axioms and truncated arithmetic in ``kQ/I``.

Arrows are indexed by half-edges: half-edge ``e`` of the vertex cycle
``sigma_i`` gives an arrow from the edge ``{e, alpha(e)}`` to the edge
``{sigma(e), alpha(sigma(e))}``, tagged ``i``. The composite "``a`` then
``b``" is nonzero exactly when ``b`` continues the rotation around the same
vertex, so the nonzero cycles are the cycles of ``sigma``.

Paths are stored as tuples of arrow ids in traversal order (first arrow
first). Algebra notation reads right to left, so the pair ``(a, b)`` in a
:class:`RelationIdeal` stands for the product ``ba``.
"""

from __future__ import annotations

import json
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Iterable, Mapping, NamedTuple

from .permgroup import Constellation, cycles, require_valid

__all__ = [
    "Arrow", "Quiver", "RelationIdeal", "AxiomReport", "PathVector",
    "medial_quiver", "gp_quiver", "check_surface_axioms", "path_multiply",
    "nonzero_cycle_lengths", "to_dot", "DEFAULT_TRUNCATION",
]

DEFAULT_TRUNCATION = 16

_PALETTE = ["blue", "red", "darkgreen", "orange", "purple", "brown",
            "magenta", "cyan4", "gold3", "gray40"]


class Arrow(NamedTuple):
    id: Hashable
    tail: Hashable
    head: Hashable
    tag: Hashable


@dataclass(frozen=True)
class Quiver:
    vertices: tuple
    arrows: tuple[Arrow, ...]
    labels: Mapping = field(default_factory=dict, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "arrows", tuple(Arrow(*a) for a in self.arrows))
        ids = [a.id for a in self.arrows]
        if len(set(ids)) != len(ids):
            raise ValueError("arrow ids must be unique")
        vs = set(self.vertices)
        for a in self.arrows:
            if a.tail not in vs or a.head not in vs:
                raise ValueError(f"arrow {a.id} has an endpoint outside the vertex set")

    def arrow(self, arrow_id) -> Arrow:
        return self._by_id[arrow_id]

    @property
    def _by_id(self) -> dict:
        cache = self.__dict__.get("_cache")
        if cache is None:
            cache = {a.id: a for a in self.arrows}
            object.__setattr__(self, "_cache", cache)
        return cache

    def outgoing(self, v) -> list[Arrow]:
        return [a for a in self.arrows if a.tail == v]

    def incoming(self, v) -> list[Arrow]:
        return [a for a in self.arrows if a.head == v]

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "arrows": [[a.id, a.tail, a.head, a.tag] for a in self.arrows],
            "labels": [[v, list(lab)] for v, lab in self.labels.items()],
        }

    @classmethod
    def from_dict(cls, data: dict) -> Quiver:
        labels = {v: tuple(lab) for v, lab in data.get("labels", [])}
        return cls(tuple(data["vertices"]), tuple(Arrow(*a) for a in data["arrows"]), labels)


@dataclass(frozen=True)
class RelationIdeal:
    """Monomial ideal generated by the length-2 paths ``ba`` for ``(a, b)`` in ``forbidden_pairs``."""

    forbidden_pairs: frozenset

    def __post_init__(self):
        object.__setattr__(self, "forbidden_pairs",
                           frozenset(tuple(p) for p in self.forbidden_pairs))

    def __contains__(self, pair) -> bool:
        return tuple(pair) in self.forbidden_pairs

    def to_dict(self) -> dict:
        return {"forbidden_pairs": sorted(([a, b] for a, b in self.forbidden_pairs), key=repr)}

    @classmethod
    def from_dict(cls, data: dict) -> RelationIdeal:
        return cls(frozenset(tuple(p) for p in data["forbidden_pairs"]))


def medial_quiver(c: Constellation) -> tuple[Quiver, RelationIdeal]:
    """
    Medial quiver of the map encoded by ``c`` with its gentle relations.

    Vertices are numbered ``1..N`` following the canonical order of the
    2-cycles of ``alpha``; arrow ``e`` (one per half-edge) is tagged with the
    index of the ``sigma``-cycle containing ``e``.
    """
    require_valid(c)
    edge_of = {}
    labels = {}
    for v, pair in enumerate(cycles(c.alpha), 1):
        labels[v] = pair
        for e in pair:
            edge_of[e] = v
    tag_of = {}
    for i, cyc in enumerate(cycles(c.sigma), 1):
        for e in cyc:
            tag_of[e] = i
    s = c.sigma
    arrows = tuple(Arrow(e, edge_of[e], edge_of[s(e)], tag_of[e])
                   for e in range(1, c.degree + 1))
    forbidden = set()
    for e in range(1, c.degree + 1):
        f = s(e)
        # arrows leaving the head of arrow e start at f or alpha(f); only f continues
        forbidden.add((e, c.alpha(f)))
    quiver = Quiver(tuple(labels), arrows, labels)
    return quiver, RelationIdeal(frozenset(forbidden))


def gp_quiver() -> tuple[Quiver, RelationIdeal]:
    """The Gel'fand-Ponomarev quiver: one vertex, loops ``x`` and ``y``, ``I = <xy, yx>``."""
    q = Quiver((1,), (Arrow("x", 1, 1, "x"), Arrow("y", 1, 1, "y")))
    return q, RelationIdeal(frozenset({("x", "y"), ("y", "x")}))


class AxiomReport(NamedTuple):
    degrees: bool
    one_zero_companion: bool
    one_nonzero_companion: bool
    length_two: bool

    @property
    def all(self) -> bool:
        return all(self)


def check_surface_axioms(q: Quiver, ideal: RelationIdeal) -> AxiomReport:
    """
    Scan the four surface-algebra axioms:

    1. every vertex has in-degree and out-degree 2;
    2. every arrow has exactly one successor and one predecessor inside ``I``;
    3. every arrow has exactly one successor and one predecessor outside ``I``;
    4. ``I`` is generated by composable paths of length 2.
    """
    indeg = Counter(a.head for a in q.arrows)
    outdeg = Counter(a.tail for a in q.arrows)
    degrees = all(indeg[v] == 2 and outdeg[v] == 2 for v in q.vertices)

    by_id = {a.id: a for a in q.arrows}
    length_two = all(
        a in by_id and b in by_id and by_id[a].head == by_id[b].tail
        for a, b in ideal.forbidden_pairs)

    zero_ok = nonzero_ok = True
    for a in q.arrows:
        after = [b for b in q.arrows if b.tail == a.head]
        before = [c for c in q.arrows if c.head == a.tail]
        z_after = sum((a.id, b.id) in ideal for b in after)
        z_before = sum((c.id, a.id) in ideal for c in before)
        if z_after != 1 or z_before != 1:
            zero_ok = False
        if len(after) - z_after != 1 or len(before) - z_before != 1:
            nonzero_ok = False
    return AxiomReport(degrees, zero_ok, nonzero_ok, length_two)


def _continuations(q: Quiver, ideal: RelationIdeal) -> dict:
    nxt = {}
    for a in q.arrows:
        ok = [b.id for b in q.arrows if b.tail == a.head and (a.id, b.id) not in ideal]
        if len(ok) != 1:
            raise ValueError(f"arrow {a.id!r} does not have a unique nonzero continuation")
        nxt[a.id] = ok[0]
    return nxt


def nonzero_cycle_lengths(q: Quiver, ideal: RelationIdeal) -> dict:
    """
    Length of the maximal nonzero oriented cycle formed by the arrows of each tag.

    Raises ``ValueError`` if the quiver fails an axiom or a tag's arrows do not
    form a single nonzero cycle.
    """
    if not check_surface_axioms(q, ideal).all:
        raise ValueError("quiver with relations fails the surface-algebra axioms")
    nxt = _continuations(q, ideal)
    by_tag = defaultdict(list)
    for a in q.arrows:
        by_tag[a.tag].append(a.id)
    out = {}
    for tag, ids in by_tag.items():
        start = ids[0]
        length, cur = 1, nxt[start]
        while cur != start:
            if q.arrow(cur).tag != tag:
                raise ValueError(f"nonzero cycle through {start!r} leaves tag {tag!r}")
            length += 1
            cur = nxt[cur]
        if length != len(ids):
            raise ValueError(f"arrows tagged {tag!r} split into several nonzero cycles")
        out[tag] = length
    return out


# a path is (start_vertex, arrows) with arrows in traversal order
Path = tuple


@dataclass(frozen=True)
class PathVector:
    """
    Finite linear combination of paths in ``kQ/I`` with rational coefficients.

    Paths longer than ``truncation`` are dropped; ``overflow`` records that
    this happened somewhere in the history of the element.
    """

    quiver: Quiver
    terms: Mapping
    truncation: int = DEFAULT_TRUNCATION
    overflow: bool = False

    def __post_init__(self):
        clean = {}
        over = self.overflow
        for path, c in self.terms.items():
            c = Fraction(c)
            if c == 0:
                continue
            start, arrows = path
            if len(arrows) > self.truncation:
                over = True
                continue
            clean[(start, tuple(arrows))] = c
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "overflow", over)

    @classmethod
    def vertex(cls, q: Quiver, v, truncation: int = DEFAULT_TRUNCATION) -> PathVector:
        return cls(q, {(v, ()): 1}, truncation)

    @classmethod
    def path(cls, q: Quiver, arrows, ideal: RelationIdeal | None = None,
             coeff=1, truncation: int = DEFAULT_TRUNCATION) -> PathVector:
        """A single path given by arrow ids in traversal order (zero if it meets ``ideal``)."""
        arrows = tuple(arrows)
        if not arrows:
            raise ValueError("use PathVector.vertex for trivial paths")
        for a, b in zip(arrows, arrows[1:]):
            if q.arrow(a).head != q.arrow(b).tail:
                raise ValueError(f"arrows {a!r} and {b!r} are not composable")
            if ideal is not None and (a, b) in ideal:
                return cls(q, {}, truncation)
        return cls(q, {(q.arrow(arrows[0]).tail, arrows): coeff}, truncation)

    @classmethod
    def zero(cls, q: Quiver, truncation: int = DEFAULT_TRUNCATION) -> PathVector:
        return cls(q, {}, truncation)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: PathVector) -> PathVector:
        _check_same(self, other)
        terms = dict(self.terms)
        for p, c in other.terms.items():
            terms[p] = terms.get(p, 0) + c
        return PathVector(self.quiver, terms, self.truncation, self.overflow or other.overflow)

    def __neg__(self) -> PathVector:
        return PathVector(self.quiver, {p: -c for p, c in self.terms.items()},
                          self.truncation, self.overflow)

    def __sub__(self, other: PathVector) -> PathVector:
        return self + (-other)

    def scale(self, c) -> PathVector:
        return PathVector(self.quiver, {p: c * v for p, v in self.terms.items()},
                          self.truncation, self.overflow)

    def __eq__(self, other):
        if not isinstance(other, PathVector):
            return NotImplemented
        return self.quiver == other.quiver and self.terms == other.terms

    __hash__ = None


def _check_same(p: PathVector, q: PathVector) -> None:
    if p.quiver != q.quiver:
        raise ValueError("path vectors live on different quivers")
    if p.truncation != q.truncation:
        raise ValueError("path vectors have different truncations")


def _end(q: Quiver, path: Path):
    start, arrows = path
    return q.arrow(arrows[-1]).head if arrows else start


def path_multiply(p: PathVector, q: PathVector, ideal: RelationIdeal) -> PathVector:
    """
    The product ``qp``: every path of ``p`` followed by every path of ``q``.

    Non-composable pairs and pairs whose junction is a relation contribute zero.
    """
    _check_same(p, q)
    quiver = p.quiver
    terms = defaultdict(Fraction)
    overflow = p.overflow or q.overflow
    for (ps, pa), pc in p.terms.items():
        end = _end(quiver, (ps, pa))
        for (qs, qa), qc in q.terms.items():
            if qs != end:
                continue
            if pa and qa and (pa[-1], qa[0]) in ideal:
                continue
            arrows = pa + qa
            if len(arrows) > p.truncation:
                overflow = True
                continue
            terms[(ps, arrows)] += pc * qc
    return PathVector(quiver, terms, p.truncation, overflow)


def to_dot(q: Quiver, ideal: RelationIdeal, name: str = "medial") -> str:
    """Graphviz rendering: arrows coloured by tag and ordered by id, relations as comments."""
    tags = sorted({a.tag for a in q.arrows}, key=repr)
    colour = {t: _PALETTE[i % len(_PALETTE)] for i, t in enumerate(tags)}
    lines = [f"digraph {name} {{"]
    for v in q.vertices:
        lab = q.labels.get(v)
        text = "{" + ", ".join(map(str, lab)) + "}" if lab else str(v)
        lines.append(f'  "{v}" [label="{text}"];')
    for a in sorted(q.arrows, key=lambda a: repr(a.id) if not isinstance(a.id, int) else f"{a.id:08d}"):
        lines.append(f'  "{a.tail}" -> "{a.head}" [label="{a.id}", color="{colour[a.tag]}"];')
    for a, b in sorted(ideal.forbidden_pairs, key=repr):
        lines.append(f"  // relation: {b}*{a} = 0")
    lines.append("}")
    return "\n".join(lines) + "\n"


def quiver_to_json(q: Quiver, ideal: RelationIdeal) -> str:
    return json.dumps({"quiver": q.to_dict(), "relations": ideal.to_dict()})


def quiver_from_json(text: str) -> tuple[Quiver, RelationIdeal]:
    data = json.loads(text)
    return Quiver.from_dict(data["quiver"]), RelationIdeal.from_dict(data["relations"])


def relation_words(q: Quiver, ideal: RelationIdeal) -> set[str]:
    """Relations written right to left as strings, e.g. ``{"xy", "yx"}``."""
    return {f"{b}{a}" for a, b in ideal.forbidden_pairs}


def iter_nonzero_paths(q: Quiver, ideal: RelationIdeal, length: int) -> Iterable[tuple]:
    """All nonzero paths of the given positive length, in traversal order."""
    paths = [(a.id,) for a in q.arrows]
    for _ in range(length - 1):
        paths = [p + (b.id,) for p in paths for b in q.arrows
                 if b.tail == q.arrow(p[-1]).head and (p[-1], b.id) not in ideal]
    return paths

"""Combinatorial codes for foliated discs spanned by closed braids.

A disc with ``P`` positive and ``N`` negative axis vertices is stored in two
interchangeable forms:

* :class:`SaddleCode` -- the vertex string plus the level-ordered list of
  saddles, each saddle given by its vertex tuple and sign (the primary code);
* :class:`BoundaryCode` -- the cyclic list of saddle boundary points read
  counterclockwise along the disc boundary, plus the interior four-vertex
  saddles (the insertion-oriented code).

Vertex names follow the ``k`` / ``k.j`` scheme: a positive vertex is the
integer ``k``; a negative vertex is the pair ``(k, j)``, the ``j``-th negative
vertex after positive vertex ``k`` (``k = 0`` for the gap before vertex 1).
Saddle vertex tuples are stored sorted by position along the axis, reading
the string from the gap before vertex 1; the sign then fixes the geometric
cyclic order around the saddle.

Levels are 1-based and cyclic: the axis angle parametrising the fibration is
a circle, and level ``t`` is the ``t``-th singular half-plane.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .braid import (
    BraidWord,
    Letter,
    fixed_points,
    induced_permutation,
    is_good_word,
    letter,
    perm_cycles,
    relation_rewrites,
)


class BadCode(Exception):
    """The combinatorial data does not describe a disc."""


class NotGoodWord(Exception):
    """The word is not the boundary word of a positive disc."""


class NotEndTile(Exception):
    """The vertex is not a detachable end tile."""


VertexName = "int | tuple[int, int]"


def name_str(v) -> str:
    if isinstance(v, tuple):
        return f"{v[0]}.{v[1]}"
    return str(v)


def parse_name(s: str):
    if "." in s:
        k, j = s.split(".")
        return (int(k), int(j))
    return int(s)


@dataclass(frozen=True)
class VertexString:
    """The cyclic sequence of axis vertices, in axis order."""

    P: int
    N: int
    names: tuple
    _pos: dict = field(init=False, compare=False, repr=False, hash=False)

    def __post_init__(self):
        if len(self.names) != self.P + self.N:
            raise BadCode("vertex string length does not match (P, N)")
        object.__setattr__(self, "_pos", {v: t for t, v in enumerate(self.names)})

    @classmethod
    def from_negative_names(cls, P: int, negatives=()) -> "VertexString":
        """Build the string for positives ``1..P`` and the given ``(k, j)`` names."""
        by_gap: dict[int, list[int]] = {}
        for (k, j) in negatives:
            by_gap.setdefault(k % P, []).append(j)
        names = []
        for k in range(0, P):
            for j in sorted(by_gap.get(k, ())):
                names.append((k, j))
            if k + 1 <= P:
                names.append(k + 1)
        for k, ordinals in by_gap.items():
            if sorted(ordinals) != list(range(1, len(ordinals) + 1)):
                raise BadCode(f"negative ordinals after vertex {k} are not 1..m")
        return cls(P, sum(len(v) for v in by_gap.values()), tuple(names))

    @classmethod
    def from_binary(cls, bits) -> "VertexString":
        """Build from a cyclic 0/1 string, ``1`` marking a positive vertex."""
        bits = tuple(bits)
        P = sum(bits)
        if P == 0:
            raise BadCode("need at least one positive vertex")
        # rotate so a positive vertex sits last: then zeros at the front are 0.j
        last_one = max(t for t, b in enumerate(bits) if b)
        rotated = bits[last_one + 1 :] + bits[: last_one + 1]
        names = []
        k = 0
        j = 0
        for b in rotated:
            if b:
                k += 1
                j = 0
                names.append(k)
            else:
                j += 1
                names.append((k % P, j))
        # start the string at the gap before vertex 1
        split = names.index((0, 1)) if (0, 1) in names else names.index(1)
        names = names[split:] + names[:split]
        return cls(P, len(bits) - P, tuple(names))

    def __len__(self) -> int:
        return self.P + self.N

    def pos(self, v) -> int:
        try:
            return self._pos[v]
        except KeyError:
            raise BadCode(f"vertex {name_str(v)} is not on the string") from None

    def is_positive(self, v) -> bool:
        return not isinstance(v, tuple)

    def sort_cyclic(self, names) -> tuple:
        """Sort by axis position, reading from the gap before vertex 1."""
        return tuple(sorted(names, key=self.pos))

    def ccw(self, *names) -> bool:
        """True iff the given vertices appear in this cyclic order on the axis."""
        ps = [self.pos(v) for v in names]
        rel = [(p - ps[0]) % len(self) for p in ps]
        return all(rel[t] < rel[t + 1] for t in range(len(rel) - 1))

    def adjacent(self, a, b) -> bool:
        d = (self.pos(a) - self.pos(b)) % len(self)
        return d in (1, len(self) - 1)

    def negatives(self) -> tuple:
        return tuple(v for v in self.names if isinstance(v, tuple))


@dataclass(frozen=True)
class Saddle:
    """One singular half-plane: its vertex tuple (axis-sorted), sign and level."""

    vertices: tuple
    sign: int
    level: int

    @property
    def kind(self) -> str:
        return {2: "aa", 3: "ab", 4: "bb"}[len(self.vertices)]

    def positive_pair(self) -> tuple[int, int]:
        pos = sorted((v for v in self.vertices if not isinstance(v, tuple)), reverse=True)
        if len(pos) != 2:
            raise BadCode(f"saddle {self} does not have two positive vertices")
        return pos[0], pos[1]

    def negatives(self) -> tuple:
        return tuple(v for v in self.vertices if isinstance(v, tuple))

    def __str__(self) -> str:
        body = ",".join(name_str(v) for v in self.vertices)
        return f"[[{body}],{self.sign}]"


@dataclass(frozen=True)
class SaddleCode:
    """Vertex string plus saddles, ordered by level ``1..P+N-1``."""

    vstring: VertexString
    saddles: tuple

    def __post_init__(self):
        L = self.vstring.P + self.vstring.N - 1
        if sorted(s.level for s in self.saddles) != list(range(1, L + 1)):
            raise BadCode("saddle levels are not 1..P+N-1")
        if any(s.sign not in (1, -1) for s in self.saddles):
            raise BadCode("saddle signs must be +1/-1")
        covered = set()
        for s in self.saddles:
            npos = 0
            for v in s.vertices:
                self.vstring.pos(v)
                covered.add(v)
                npos += not isinstance(v, tuple)
            if npos != 2 or len(s.vertices) not in (2, 3, 4):
                raise BadCode(f"saddle {s} has a malformed vertex tuple")
            if len(set(s.vertices)) != len(s.vertices):
                raise BadCode(f"saddle {s} repeats a vertex")
        if covered != set(self.vstring.names):
            raise BadCode("some vertex occurs in no saddle")
        object.__setattr__(self, "saddles", tuple(sorted(self.saddles, key=lambda s: s.level)))

    @property
    def P(self) -> int:
        return self.vstring.P

    @property
    def N(self) -> int:
        return self.vstring.N

    @property
    def levels(self) -> int:
        return self.P + self.N - 1

    def saddle_at(self, level: int) -> Saddle:
        return self.saddles[(level - 1) % self.levels]

    def __str__(self) -> str:
        return "{" + ",".join(str(s) for s in self.saddles) + "}"


@dataclass(frozen=True)
class BoundaryPoint:
    """A boundary point of a saddle: ``Q`` (two indices) or ``R`` (three)."""

    vertices: tuple
    sign: int
    level: int

    @property
    def kind(self) -> str:
        return "Q" if len(self.vertices) == 2 else "R"

    @property
    def initial(self):
        return self.vertices[0]

    @property
    def final(self):
        return self.vertices[-1]

    def __str__(self) -> str:
        s = "-" if self.sign < 0 else ""
        body = ",".join(name_str(v) for v in self.vertices)
        return f"{s}{self.kind}({body})@{self.level}"


@dataclass(frozen=True)
class BoundaryCode:
    """Boundary points in counterclockwise order along the disc boundary,
    plus the interior ``bb`` saddles."""

    vstring: VertexString
    points: tuple
    bb: tuple

    @property
    def P(self) -> int:
        return self.vstring.P

    @property
    def N(self) -> int:
        return self.vstring.N

    @property
    def levels(self) -> int:
        return self.P + self.N - 1

    def __str__(self) -> str:
        pts = " ".join(str(p) for p in self.points)
        if not self.bb:
            return pts
        return pts + " | " + " ".join(str(s) for s in self.bb)


# ---------------------------------------------------------------------------
# extended word and saddle-transition structure


def extended_word(code: SaddleCode) -> BraidWord:
    """One band letter per saddle in level order: the positive pair, the saddle sign."""
    letters = []
    for s in code.saddles:
        i, j = s.positive_pair()
        letters.append(Letter(i, j, s.sign))
    return BraidWord(code.P, tuple(letters))


def transitions(s: Saddle, vstring: VertexString) -> dict:
    """Per negative vertex of ``s``: the ``(old, new)`` positive partners of its
    regular leaf across the saddle.

    In the cyclic order of the saddle's vertex tuple on the axis, a negative
    vertex of a positive saddle takes its cyclic predecessor as old partner
    and its successor as new partner; a negative saddle swaps the two.
    """
    out = {}
    verts = s.vertices
    m = len(verts)
    for t, v in enumerate(verts):
        if not isinstance(v, tuple):
            continue
        pred = verts[(t - 1) % m]
        succ = verts[(t + 1) % m]
        if isinstance(pred, tuple) or isinstance(succ, tuple):
            raise BadCode(f"saddle {s}: negative vertices not separated by positive ones")
        out[v] = (pred, succ) if s.sign > 0 else (succ, pred)
    return out


def b_arc_partners(code: SaddleCode) -> dict:
    """For each negative vertex ``w``: ``(levels, partners)`` where ``levels``
    are the levels of its saddles in increasing order and ``partners[t]`` is
    the positive endpoint of its leaf in the interval after ``levels[t]``.

    Raises :class:`BadCode` when the per-saddle transitions do not chain into
    a consistent cyclic sequence of partners.
    """
    incident: dict = {}
    for s in code.saddles:
        for w, (old, new) in transitions(s, code.vstring).items():
            incident.setdefault(w, []).append((s.level, old, new))
    out = {}
    for w in code.vstring.negatives():
        events = sorted(incident.get(w, ()))
        if len(events) < 2:
            raise BadCode(f"negative vertex {name_str(w)} meets fewer than two saddles")
        m = len(events)
        for t in range(m):
            if events[t][2] != events[(t + 1) % m][1]:
                raise BadCode(
                    f"inconsistent leaf endpoints for {name_str(w)} between levels "
                    f"{events[t][0]} and {events[(t + 1) % m][0]}"
                )
        out[w] = (tuple(e[0] for e in events), tuple(e[2] for e in events))
    return out


def partner_in_interval(levels: tuple, partners: tuple, row: int, L: int):
    """Partner during the interval ``(row, row+1)`` given one vertex's event data."""
    # the governing event is the last one at level <= row (cyclically)
    best = None
    for t, l in enumerate(levels):
        d = (row - l) % L
        if best is None or d < best[0]:
            best = (d, t)
    return partners[best[1]]


# ---------------------------------------------------------------------------
# the boundary walk


def _circle_positions(code: SaddleCode):
    """Positions of the trivial strands just before each level.

    Returns ``tables`` with ``tables[t]`` mapping strand position to negative
    vertex name just before level ``t + 1``, validating that every saddle
    meets exactly the strands of its own negative vertices.
    """
    ew = extended_word(code)
    perm = induced_permutation(ew)
    fixed = set(fixed_points(perm))
    if len(fixed) != code.N:
        raise BadCode("extended word does not leave one strand per negative vertex fixed")

    L = code.levels
    occ: dict[int, object] = {p: None for p in fixed}  # position -> name or None
    tables = []
    bindings: dict = {}
    for sweep in range(2):  # second sweep fills names bound late in the first
        for t in range(L):
            if sweep == 1:
                tables.append(dict(occ))
            s = code.saddle_at(t + 1)
            i, j = s.positive_pair()
            tr = transitions(s, code.vstring)
            here = {p for p in (i, j) if p in occ}
            if {old for (old, _new) in tr.values()} != here or len(here) != len(tr):
                raise BadCode(f"saddle {s} does not match the trivial strands at level {t + 1}")
            moved = {}
            for w, (old, new) in tr.items():
                prev = occ.pop(old)
                if prev is not None and prev != w:
                    raise BadCode(f"strand of {name_str(prev)} collides with {name_str(w)}")
                moved[new] = w
            occ.update(moved)
    unbound = [v for v in occ.values() if v is None]
    if unbound:
        raise BadCode("some trivial strand meets no saddle")
    return tables


def _boundary_walk(code: SaddleCode):
    tables = _circle_positions(code)
    L = code.levels
    start_circles = set(tables[0])
    f0 = min(p for p in range(1, code.P + 1) if p not in start_circles)
    pos = f0
    points = []
    for _lap in range(code.P - code.N):
        for t in range(L):
            s = code.saddle_at(t + 1)
            i, j = s.positive_pair()
            if pos not in (i, j):
                continue
            other = j if pos == i else i
            circles = tables[t]
            if pos in circles:
                raise BadCode("boundary walk entered a trivial strand")
            if s.kind == "aa":
                points.append(BoundaryPoint((pos, other), s.sign, s.level))
            elif s.kind == "ab":
                w = circles.get(other)
                if w is None or w != s.negatives()[0]:
                    raise BadCode(f"saddle {s} is not attached to its negative vertex")
                points.append(BoundaryPoint((pos, w, other), s.sign, s.level))
            else:
                raise BadCode("boundary walk crossed an interior saddle")
            pos = other
    if pos != f0:
        raise BadCode("boundary walk did not close up")
    return points


def boundary_code(code: SaddleCode) -> BoundaryCode:
    """Translate a saddle code into its boundary-point code."""
    points = _boundary_walk(code)
    expected = 2 * sum(s.kind == "aa" for s in code.saddles) + sum(
        s.kind == "ab" for s in code.saddles
    )
    if len(points) != expected:
        raise BadCode("boundary walk missed saddle boundary points")
    bb = tuple(s for s in code.saddles if s.kind == "bb")
    return BoundaryCode(code.vstring, tuple(points), bb)


def saddle_code(bc: BoundaryCode, vstring: VertexString | None = None) -> SaddleCode:
    """Reassemble the saddle code from a boundary code (inverse of
    :func:`boundary_code` up to the canonical listing rotation)."""
    vs = vstring if vstring is not None else bc.vstring
    by_level: dict[int, list[BoundaryPoint]] = {}
    for p in bc.points:
        by_level.setdefault(p.level, []).append(p)
    saddles = list(bc.bb)
    for level, pts in by_level.items():
        signs = {p.sign for p in pts}
        if len(signs) != 1:
            raise BadCode(f"boundary points at level {level} disagree in sign")
        if len(pts) == 2 and all(p.kind == "Q" for p in pts):
            a, b = pts[0].vertices, pts[1].vertices
            if set(a) != set(b) or a == b:
                raise BadCode(f"unpaired Q points at level {level}")
            saddles.append(Saddle(vs.sort_cyclic(a), pts[0].sign, level))
        elif len(pts) == 1 and pts[0].kind == "R":
            saddles.append(Saddle(vs.sort_cyclic(pts[0].vertices), pts[0].sign, level))
        else:
            raise BadCode(f"boundary points at level {level} form no saddle")
    return SaddleCode(vs, tuple(saddles))


def generate_disc_boundary(n: int, w: BraidWord) -> BoundaryCode:
    """The boundary code of the unique positive disc whose word is ``w``.

    Raises :class:`NotGoodWord` when ``w`` is not a good word on ``n`` strands.
    """
    if w.n != n or not is_good_word(w):
        raise NotGoodWord(f"{w} is not a good word on {n} strands")
    vs = VertexString.from_negative_names(n)
    saddles = tuple(
        Saddle((l.j, l.i), l.sign, t + 1) for t, l in enumerate(w.letters)
    )
    return boundary_code(SaddleCode(vs, saddles))


def positive_disc(w: BraidWord) -> SaddleCode:
    """The saddle code of the positive disc of a good word."""
    if not is_good_word(w):
        raise NotGoodWord(f"{w} is not a good word")
    vs = VertexString.from_negative_names(w.n)
    return SaddleCode(vs, tuple(Saddle((l.j, l.i), l.sign, t + 1) for t, l in enumerate(w.letters)))


# ---------------------------------------------------------------------------
# classification, inversion, end tiles


@dataclass(frozen=True)
class VertexClassification:
    valence: int
    types: tuple
    signs: tuple
    is_end_tile: bool


def classify_vertices(code: SaddleCode) -> dict:
    """Valence, cyclic leaf-type array, cyclic sign array and end-tile flag,
    per vertex, all read in fibration (level) order."""
    partners = b_arc_partners(code) if code.N else {}
    incident: dict = {v: [] for v in code.vstring.names}
    for s in code.saddles:
        for v in s.vertices:
            incident[v].append(s)
    L = code.levels
    out = {}
    for v, saddles in incident.items():
        saddles = sorted(saddles, key=lambda s: s.level)
        signs = tuple(s.sign for s in saddles)
        if isinstance(v, tuple):
            types = ("b",) * len(saddles)
            end_tile = False
        else:
            types = []
            for t, s in enumerate(saddles):
                row = s.level  # probe the interval just after this saddle
                paired = any(
                    partner_in_interval(levels, parts, row, L) == v
                    for levels, parts in partners.values()
                )
                types.append("b" if paired else "a")
            types = tuple(types)
            end_tile = len(saddles) == 1 and saddles[0].kind == "aa"
        out[v] = VertexClassification(len(saddles), types, signs, end_tile)
    return out


def invert_code(code: SaddleCode) -> SaddleCode:
    """The disc seen from its other side: all saddle signs flipped and the
    level sequence reversed."""
    L = code.levels
    return SaddleCode(
        code.vstring,
        tuple(Saddle(s.vertices, -s.sign, L + 1 - s.level) for s in code.saddles),
    )


def remove_end_tile(code: SaddleCode, v) -> SaddleCode:
    """Delete an end-tile vertex and its single ``aa`` saddle, renumbering the
    following vertices down by one and compacting levels."""
    cls = classify_vertices(code)
    if v not in cls or not cls[v].is_end_tile:
        raise NotEndTile(f"{name_str(v)} is not an end tile")
    gone = [s for s in code.saddles if v in s.vertices]
    assert len(gone) == 1 and gone[0].kind == "aa"
    gone_level = gone[0].level

    # gap v-1 absorbs gap v; ordinals are reassigned in string order
    rename_map: dict = {}
    by_gap: dict[int, int] = {}
    for u in code.vstring.names:
        if isinstance(u, tuple):
            k = u[0] - 1 if u[0] >= v else u[0]
            by_gap[k] = by_gap.get(k, 0) + 1
            rename_map[u] = (k, by_gap[k])

    def rename(u):
        if isinstance(u, tuple):
            return rename_map[u]
        return u - 1 if u > v else u

    new_saddles = []
    for s in code.saddles:
        if s is gone[0]:
            continue
        level = s.level - 1 if s.level > gone_level else s.level
        new_saddles.append(Saddle(tuple(rename(u) for u in s.vertices), s.sign, level))
    vs = VertexString.from_negative_names(code.P - 1, tuple(rename_map.values()))
    return SaddleCode(vs, tuple(sorted(new_saddles, key=lambda s: s.level)))


def canonical_code_key(code: SaddleCode):
    """Canonical key of a disc under easy conjugation: minimum over all index
    shifts and level rotations of the transformed saddle table."""
    P, L = code.P, code.levels

    def shift_name(u, k):
        if isinstance(u, tuple):
            return ((u[0] + k) % P, u[1])
        return (u + k - 1) % P + 1

    best = None
    for k in range(P):
        rows = []
        for s in code.saddles:  # level order
            verts = tuple(sorted((shift_name(u, k) for u in s.vertices), key=_name_key))
            rows.append((verts, s.sign))
        for r in range(L):
            cand = tuple(rows[r:] + rows[:r])
            if best is None or _rows_key(cand) < _rows_key(best):
                best = cand
    return _rows_key(best)


def _name_key(u):
    if isinstance(u, tuple):
        return (u[0], 1, u[1])
    return (u, 0, 0)


def _rows_key(rows):
    return tuple((tuple(_name_key(u) for u in verts), sign) for verts, sign in rows)


# ---------------------------------------------------------------------------
# rewriting a positive-disc boundary code along a defining relation

_Q = lambda x, y, lv, sg: ("Q", (x, y), lv, sg)  # noqa: E731  pattern atom

# Rows of the rewrite tables for positive discs.  Levels: 0 for h, 1 for h+1;
# classes and member order match braid._REL_CLASSES (classes 0, 1, 4, 5).
_CODE_TABLES: dict[int, tuple] = {
    0: (  # (ij)(jk) -> (jk)(ik) -> (ik)(ij)
        (
            [_Q("i", "j", 0, 1), _Q("j", "k", 1, 1)],
            [_Q("i", "k", 1, 1)],
            [_Q("i", "k", 0, 1)],
        ),
        (
            [_Q("j", "i", 0, 1)],
            [_Q("j", "k", 0, 1), _Q("k", "i", 1, 1)],
            [_Q("j", "i", 1, 1)],
        ),
        (
            [_Q("k", "j", 1, 1)],
            [_Q("k", "j", 0, 1)],
            [_Q("k", "i", 0, 1), _Q("i", "j", 1, 1)],
        ),
    ),
    1: (  # -(ij)-(ik) -> -(jk)-(ij) -> -(ik)-(jk)
        (
            [_Q("j", "i", 0, -1), _Q("i", "k", 1, -1)],
            [_Q("j", "k", 0, -1)],
            [_Q("j", "k", 1, -1)],
        ),
        (
            [_Q("k", "i", 1, -1)],
            [_Q("k", "j", 0, -1), _Q("j", "i", 1, -1)],
            [_Q("k", "i", 0, -1)],
        ),
        (
            [_Q("i", "j", 0, -1)],
            [_Q("i", "j", 1, -1)],
            [_Q("i", "k", 0, -1), _Q("k", "j", 1, -1)],
        ),
    ),
    4: (  # -(ij)(jk) <-> (jk)-(ik)
        (
            [_Q("j", "i", 0, -1)],
            [_Q("j", "k", 0, 1), _Q("k", "i", 1, -1)],
        ),
        (
            [_Q("k", "j", 1, 1)],
            [_Q("k", "j", 0, 1)],
        ),
        (
            [_Q("i", "j", 0, -1), _Q("j", "k", 1, 1)],
            [_Q("i", "k", 1, -1)],
        ),
    ),
    5: (  # -(ij)(ik) <-> (jk)-(ij)
        (
            [_Q("j", "i", 0, -1), _Q("i", "k", 1, 1)],
            [_Q("j", "k", 0, 1)],
        ),
        (
            [_Q("k", "i", 1, 1)],
            [_Q("k", "j", 0, 1), _Q("j", "i", 1, -1)],
        ),
        (
            [_Q("i", "j", 0, -1)],
            [_Q("i", "j", 1, -1)],
        ),
    ),
    7: (  # -(jk)(ij) <-> (ik)-(jk)
        (
            [_Q("j", "k", 0, -1)],
            [_Q("j", "k", 1, -1)],
        ),
        (
            [_Q("k", "j", 0, -1), _Q("j", "i", 1, 1)],
            [_Q("k", "i", 0, 1)],
        ),
        (
            [_Q("i", "j", 1, 1)],
            [_Q("i", "k", 0, 1), _Q("k", "j", 1, -1)],
        ),
    ),
}

# classes handled through the inverted disc, with the class they map to there
_INVERTED_CLASS = {2: 5, 3: 7, 6: 4}


def _match_member(a: Letter, b: Letter):
    """Identify ``a b`` as a member of a relation class over sorted indices."""
    from .braid import _REL_CLASSES, _pair_tag  # noqa: PLC0415

    indices = sorted({a.i, a.j, b.i, b.j}, reverse=True)
    if len(indices) != 3:
        return None
    i, j, k = indices
    tag = (_pair_tag(a, i, j, k), a.sign, _pair_tag(b, i, j, k), b.sign)
    for ci, cls in enumerate(_REL_CLASSES):
        if tag in cls:
            return ci, cls.index(tag), (i, j, k)
    return None


def rewrite_code_after_relation(bc: BoundaryCode, pos: int, variant: str) -> BoundaryCode:
    """Apply a defining relation to a positive disc at levels ``pos``/``pos+1``
    directly on the boundary-point code.

    ``variant`` is as in :func:`foliage.braid.apply_band_relation`.  The
    commutation rule exchanges the two levels on the four affected points;
    the triple relations merge and split points following the rewrite tables.
    """
    from .braid import NotApplicable, apply_band_relation  # noqa: PLC0415

    if bc.N:
        raise NotApplicable("code rewriting is defined for positive discs")
    code = saddle_code(bc)
    ew = extended_word(code)
    L = code.levels
    h = pos
    if not 1 <= h <= L - 1:
        raise NotApplicable(f"no adjacent levels at {h}")
    a, b = ew.letters[h - 1], ew.letters[h]

    if variant == "commute":
        new_word = apply_band_relation(ew, h - 1, "commute")
        points = [
            BoundaryPoint(p.vertices, p.sign, {h: h + 1, h + 1: h}.get(p.level, p.level))
            for p in bc.points
        ]
        return _renormalize(BoundaryCode(bc.vstring, tuple(points), ()), new_word)

    ident = _match_member(a, b)
    if ident is None:
        raise NotApplicable(f"{a} {b} admits no triple relation")
    ci, mi, (i, j, k) = ident

    if ci in _INVERTED_CLASS:
        flipped = boundary_code(invert_code(code))
        out = rewrite_code_after_relation(flipped, L - h, variant)
        return boundary_code(invert_code(saddle_code(out)))

    table = _CODE_TABLES[ci]
    size = len(table[0])
    step = 1 if variant == "fwd" else size - 1
    if variant not in ("fwd", "bwd"):
        raise NotApplicable(f"unknown variant {variant!r}")
    ti = (mi + step) % size

    sym = {"i": i, "j": j, "k": k}

    def atom_point(atom):
        _, (x, y), lv, sg = atom
        return BoundaryPoint((sym[x], sym[y]), sg, h + lv)

    points = list(bc.points)
    for row in table:
        old_pat = [atom_point(atm) for atm in row[mi]]
        new_pat = [atom_point(atm) for atm in row[ti]]
        idx = _find_run(points, old_pat)
        points[idx : idx + len(old_pat)] = new_pat
    new_word = apply_band_relation(ew, h - 1, variant)
    return _renormalize(BoundaryCode(bc.vstring, tuple(points), ()), new_word)


def _find_run(points, pattern):
    n = len(points)
    m = len(pattern)
    for start in range(n):
        if all(points[(start + t) % n] == pattern[t] for t in range(m)):
            if start + m <= n:
                return start
            # rotate so the run is contiguous
            shift = (start + m) - n
            points[:] = points[shift:] + points[:shift]
            return start - shift
    raise BadCode(f"pattern {' '.join(map(str, pattern))} not found on the boundary")


def _renormalize(bc: BoundaryCode, ew: BraidWord) -> BoundaryCode:
    """Rotate a surged point list to the canonical walk start."""
    rebuilt = generate_disc_boundary(ew.n, ew)
    first = rebuilt.points[0]
    pts = list(bc.points)
    if first not in pts:
        raise BadCode("rewritten boundary lost its starting point")
    t = pts.index(first)
    return BoundaryCode(bc.vstring, tuple(pts[t:] + pts[:t]), bc.bb)

"""Braid words in the band-generator presentation.

A band generator ``(i, j)`` with ``n >= i > j >= 1`` is the braid in which
strand ``i`` crosses over strand ``j`` while every other strand is fixed.
Words are stored as tuples of letters; a letter is ``(i, j, sign)`` with
``sign`` in ``{+1, -1}`` and the pair always sorted so ``i > j``.

The text form used throughout the package (and by the CLI) writes a positive
letter as ``(i,j)``, its inverse as ``-(i,j)``, and descending-cycle blocks as
``d(p,q)`` / ``-d(p,q)``; tokens are whitespace separated.

Permutations on ``{1..n}`` are tuples of length ``n + 1`` whose entry ``0``
is unused (kept as ``0``), so that ``perm[k]`` is the image of ``k``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple


class NotApplicable(Exception):
    """The requested rewrite does not apply at this position."""


class Letter(NamedTuple):
    i: int
    j: int
    sign: int

    def inverse(self) -> "Letter":
        return Letter(self.i, self.j, -self.sign)

    def __str__(self) -> str:
        s = "-" if self.sign < 0 else ""
        return f"{s}({self.i},{self.j})"


class DeltaBlock(NamedTuple):
    """Signed descending cycle: ``d(p,q)`` expands to ``(p,p-1)(p-1,p-2)...(q+1,q)``."""

    p: int
    q: int
    sign: int

    def inverse(self) -> "DeltaBlock":
        return DeltaBlock(self.p, self.q, -self.sign)

    def __str__(self) -> str:
        s = "-" if self.sign < 0 else ""
        return f"{s}d({self.p},{self.q})"


def letter(i: int, j: int, sign: int = 1) -> Letter:
    """Build a band letter, sorting the index pair so ``i > j``.

    >>> letter(1, 3)
    Letter(i=3, j=1, sign=1)
    """
    if i == j:
        raise ValueError(f"degenerate band generator ({i},{j})")
    if i < j:
        i, j = j, i
    if j < 1:
        raise ValueError(f"band generator index out of range: ({i},{j})")
    if sign not in (1, -1):
        raise ValueError(f"letter sign must be +1 or -1, got {sign}")
    return Letter(i, j, sign)


def _letter_key(l: Letter) -> tuple[int, int, int]:
    # Total order (i, j, sign) with +1 before -1.
    return (l.i, l.j, 0 if l.sign > 0 else 1)


@dataclass(frozen=True)
class BraidWord:
    """A word in the band generators of the braid group on ``n`` strands."""

    n: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        for l in self.letters:
            if not (self.n >= l.i > l.j >= 1):
                raise ValueError(f"letter {l} out of range for n={self.n}")

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return word_str(self)

    def key(self) -> tuple[tuple[int, int, int], ...]:
        return tuple(_letter_key(l) for l in self.letters)


@dataclass(frozen=True)
class BoundaryWord:
    """A word mixing band letters and delta blocks, as produced by strand elimination."""

    n: int
    tokens: tuple[Letter | DeltaBlock, ...] = ()

    def __str__(self) -> str:
        return " ".join(str(t) for t in self.tokens)


def word(n: int, letters: Iterable[tuple[int, int] | tuple[int, int, int]]) -> BraidWord:
    """Convenience constructor: ``word(4, [(2,1), (3,1,-1)])``."""
    out = []
    for t in letters:
        if len(t) == 2:
            out.append(letter(t[0], t[1]))
        else:
            out.append(letter(t[0], t[1], t[2]))
    return BraidWord(n, tuple(out))


_TOKEN_RE = re.compile(r"^(-?)(d?)\((\d+),(\d+)\)$")


def parse_word(n: int, text: str) -> BraidWord:
    """Parse whitespace-separated ``(i,j)`` / ``-(i,j)`` tokens."""
    letters = []
    for tok in text.split():
        m = _TOKEN_RE.match(tok)
        if not m or m.group(2):
            raise ValueError(f"bad band letter token: {tok!r}")
        sign = -1 if m.group(1) else 1
        letters.append(letter(int(m.group(3)), int(m.group(4)), sign))
    return BraidWord(n, tuple(letters))


def parse_boundary_word(n: int, text: str) -> BoundaryWord:
    """Parse a token string that may also contain ``d(p,q)`` blocks."""
    tokens: list[Letter | DeltaBlock] = []
    for tok in text.split():
        m = _TOKEN_RE.match(tok)
        if not m:
            raise ValueError(f"bad token: {tok!r}")
        sign = -1 if m.group(1) else 1
        a, b = int(m.group(3)), int(m.group(4))
        if m.group(2):
            if not a > b:
                raise ValueError(f"delta block needs p > q: {tok!r}")
            tokens.append(DeltaBlock(a, b, sign))
        else:
            tokens.append(letter(a, b, sign))
    return BoundaryWord(n, tuple(tokens))


def word_str(w: BraidWord) -> str:
    return " ".join(str(l) for l in w.letters)


# ---------------------------------------------------------------------------
# permutations


def identity_perm(n: int) -> tuple[int, ...]:
    return (0,) + tuple(range(1, n + 1))


def induced_permutation(w: BraidWord) -> tuple[int, ...]:
    """Product, in letter order, of the transpositions of the letters (signs ignored).

    The first letter acts first: a strand entering at position ``k`` leaves at
    position ``perm[k]``.

    >>> induced_permutation(word(3, [(2, 1), (3, 1)]))
    (0, 2, 3, 1)
    """
    occupant = list(range(w.n + 1))
    for l in w.letters:
        occupant[l.i], occupant[l.j] = occupant[l.j], occupant[l.i]
    perm = [0] * (w.n + 1)
    for pos in range(1, w.n + 1):
        perm[occupant[pos]] = pos
    return tuple(perm)


def perm_cycles(perm: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Disjoint cycles of a permutation on ``{1..n}``, fixed points included."""
    n = len(perm) - 1
    seen = [False] * (n + 1)
    cycles = []
    for s in range(1, n + 1):
        if seen[s]:
            continue
        cyc = []
        k = s
        while not seen[k]:
            seen[k] = True
            cyc.append(k)
            k = perm[k]
        cycles.append(tuple(cyc))
    return cycles


def fixed_points(perm: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(k for k in range(1, len(perm)) if perm[k] == k)


def exponent_sum(w: BraidWord) -> int:
    return sum(l.sign for l in w.letters)


def is_good_word(w: BraidWord) -> bool:
    """True iff the word has length ``n - 1`` and its permutation is an ``n``-cycle."""
    if len(w.letters) != w.n - 1:
        return False
    return len(perm_cycles(induced_permutation(w))) == 1


# ---------------------------------------------------------------------------
# easy conjugations and canonical form


def delta_conjugate(w: BraidWord, k: int) -> BraidWord:
    """Shift every index by ``k`` modulo ``n`` (conjugation by the k-th power of delta)."""
    n = w.n
    k %= n
    if k == 0:
        return w
    out = []
    for l in w.letters:
        a = (l.i + k - 1) % n + 1
        b = (l.j + k - 1) % n + 1
        out.append(letter(a, b, l.sign))
    return BraidWord(n, tuple(out))


def rotate_conjugate(w: BraidWord, k: int) -> BraidWord:
    """Cyclically rotate the letter sequence left by ``k`` (conjugation by a subword)."""
    m = len(w.letters)
    if m == 0:
        return w
    k %= m
    return BraidWord(w.n, w.letters[k:] + w.letters[:k])


def conjugation_orbit(w: BraidWord) -> list[BraidWord]:
    """All ``n * len(w)`` images of ``w`` under index shifts and letter rotations."""
    out = []
    for k in range(w.n):
        shifted = delta_conjugate(w, k)
        for r in range(max(1, len(w.letters))):
            out.append(rotate_conjugate(shifted, r))
    return out


def canonical_form(w: BraidWord) -> BraidWord:
    """Lexicographically least member of the easy-conjugation orbit.

    Letters compare by ``(i, j, sign)`` with positive before negative.  Two
    words are easy-conjugate iff their canonical forms are equal.
    """
    return min(conjugation_orbit(w), key=BraidWord.key)


def invert_word(w: BraidWord) -> BraidWord:
    """Reverse the letter sequence and flip every sign."""
    return BraidWord(w.n, tuple(l.inverse() for l in reversed(w.letters)))


def free_reduce(w: BraidWord) -> BraidWord:
    """Delete adjacent inverse pairs until none remain."""
    out: list[Letter] = []
    for l in w.letters:
        if out and out[-1].i == l.i and out[-1].j == l.j and out[-1].sign == -l.sign:
            out.pop()
        else:
            out.append(l)
    return BraidWord(w.n, tuple(out))


# ---------------------------------------------------------------------------
# the defining relations on adjacent letters
#
# For indices i > j > k the two-letter words below are equal as braid
# elements; each tuple lists one equality class in a fixed cyclic order.
# Pairs are tagged by (which band, sign): "ij" stands for (i,j) etc.

_REL_CLASSES: tuple[tuple[tuple[str, int, str, int], ...], ...] = (
    (("ij", 1, "jk", 1), ("jk", 1, "ik", 1), ("ik", 1, "ij", 1)),
    (("ij", -1, "ik", -1), ("jk", -1, "ij", -1), ("ik", -1, "jk", -1)),
    (("ij", 1, "jk", -1), ("ik", -1, "ij", 1)),
    (("ij", 1, "ik", -1), ("ik", -1, "jk", 1)),
    (("ij", -1, "jk", 1), ("jk", 1, "ik", -1)),
    (("ij", -1, "ik", 1), ("jk", 1, "ij", -1)),
    (("jk", -1, "ij", 1), ("ik", 1, "jk", -1)),
    (("jk", -1, "ik", 1), ("ik", 1, "ij", -1)),
)

_REL_INDEX: dict[tuple[str, int, str, int], tuple[int, int]] = {}
for _ci, _cls in enumerate(_REL_CLASSES):
    for _mi, _member in enumerate(_cls):
        _REL_INDEX[_member] = (_ci, _mi)


def commutes(a: Letter, b: Letter) -> bool:
    """Non-interlocking condition ``(i-k)(i-l)(j-k)(j-l) > 0`` for bands (i,j), (k,l)."""
    return (a.i - b.i) * (a.i - b.j) * (a.j - b.i) * (a.j - b.j) > 0


def _pair_tag(l: Letter, i: int, j: int, k: int) -> str:
    if (l.i, l.j) == (i, j):
        return "ij"
    if (l.i, l.j) == (j, k):
        return "jk"
    if (l.i, l.j) == (i, k):
        return "ik"
    raise NotApplicable(f"letter {l} not over indices {i}>{j}>{k}")


def _tag_letter(tag: str, sign: int, i: int, j: int, k: int) -> Letter:
    pair = {"ij": (i, j), "jk": (j, k), "ik": (i, k)}[tag]
    return Letter(pair[0], pair[1], sign)


def relation_rewrites(a: Letter, b: Letter) -> list[tuple[Letter, Letter]]:
    """All two-letter words equal to ``a b`` via one defining relation.

    Commutations are not included; see :func:`commutes`.
    """
    shared = {a.i, a.j} & {b.i, b.j}
    if len(shared) != 1:
        return []
    indices = sorted({a.i, a.j, b.i, b.j}, reverse=True)
    if len(indices) != 3:
        return []
    i, j, k = indices
    tag = (_pair_tag(a, i, j, k), a.sign, _pair_tag(b, i, j, k), b.sign)
    if tag not in _REL_INDEX:
        return []
    ci, mi = _REL_INDEX[tag]
    cls = _REL_CLASSES[ci]
    out = []
    for step in range(1, len(cls)):
        t1, s1, t2, s2 = cls[(mi + step) % len(cls)]
        out.append((_tag_letter(t1, s1, i, j, k), _tag_letter(t2, s2, i, j, k)))
    return out


def apply_band_relation(w: BraidWord, pos: int, variant: str) -> BraidWord:
    """Rewrite the two letters at ``pos``, ``pos+1`` by one defining relation.

    ``variant`` is ``"commute"`` (swap a non-interlocking pair), ``"fwd"`` or
    ``"bwd"`` (step around the triple-relation cycle; for the mixed-sign pairs
    the two directions coincide).  Raises :class:`NotApplicable` when the
    letters do not admit the requested relation.
    """
    if not 0 <= pos < len(w.letters) - 1:
        raise NotApplicable(f"no adjacent pair at position {pos}")
    a, b = w.letters[pos], w.letters[pos + 1]
    if variant == "commute":
        if not commutes(a, b):
            raise NotApplicable(f"{a} and {b} interlock")
        new = (b, a)
    elif variant in ("fwd", "bwd"):
        rewrites = relation_rewrites(a, b)
        if not rewrites:
            raise NotApplicable(f"{a} {b} admits no triple relation")
        new = rewrites[0] if variant == "fwd" else rewrites[-1]
    else:
        raise NotApplicable(f"unknown variant {variant!r}")
    return BraidWord(w.n, w.letters[:pos] + new + w.letters[pos + 2 :])


# ---------------------------------------------------------------------------
# delta blocks


def delta_letters(p: int, q: int) -> tuple[Letter, ...]:
    """The descending cycle ``(p,p-1)(p-1,p-2)...(q+1,q)``."""
    if not p > q >= 1:
        raise ValueError(f"delta block needs p > q >= 1, got ({p},{q})")
    return tuple(Letter(a, a - 1, 1) for a in range(p, q, -1))


def delta_expand(bw: BoundaryWord) -> BraidWord:
    """Replace each delta block by its letter expansion (inverses reversed, signs flipped)."""
    out: list[Letter] = []
    for t in bw.tokens:
        if isinstance(t, DeltaBlock):
            ls = delta_letters(t.p, t.q)
            if t.sign < 0:
                ls = tuple(l.inverse() for l in reversed(ls))
            out.extend(ls)
        else:
            out.append(t)
    return BraidWord(bw.n, tuple(out))

"""Enumeration of good words: length ``P-1`` band words whose permutation is a ``P``-cycle.

A product of ``P - 1`` transpositions is a ``P``-cycle exactly when the index
pairs form a spanning tree on ``{1..P}``, in any letter order.  The positive
enumerator therefore backtracks over edge sequences that stay acyclic, which
visits every positive good word exactly once, and keeps one representative
per easy-conjugation orbit (index shifts times letter rotations).
"""

from __future__ import annotations

from itertools import combinations

from .braid import BraidWord, Letter, canonical_form, word


def _canonical_code(codes: tuple[int, ...], shift_tables: list[list[int]]) -> tuple[int, ...]:
    m = len(codes)
    best = None
    for tbl in shift_tables:
        mapped = tuple(tbl[c] for c in codes)
        for r in range(m):
            cand = mapped[r:] + mapped[:r]
            if best is None or cand < best:
                best = cand
    return best


def _code_tables(P: int) -> tuple[dict[tuple[int, int, int], int], list[Letter], list[list[int]]]:
    # Letters packed into small ints ordered exactly like (i, j, sign-bit).
    encode: dict[tuple[int, int, int], int] = {}
    decode: list[Letter] = []
    for i in range(2, P + 1):
        for j in range(1, i):
            for bit, sign in ((0, 1), (1, -1)):
                encode[(i, j, sign)] = len(decode)
                decode.append(Letter(i, j, sign))
    shift_tables = []
    for k in range(P):
        tbl = [0] * len(decode)
        for code, l in enumerate(decode):
            a = (l.i + k - 1) % P + 1
            b = (l.j + k - 1) % P + 1
            if a < b:
                a, b = b, a
            tbl[code] = encode[(a, b, l.sign)]
        shift_tables.append(tbl)
    return encode, decode, shift_tables


def enumerate_positive_good_words(P: int) -> list[BraidWord]:
    """One representative per easy-conjugation orbit of positive good words.

    >>> [len(enumerate_positive_good_words(P)) for P in (2, 3, 4)]
    [1, 1, 8]
    """
    if P < 2:
        raise ValueError("need at least two strands")
    encode, decode, shift_tables = _code_tables(P)
    pos_codes = [encode[(i, j, 1)] for i in range(2, P + 1) for j in range(1, i)]

    canon: set[tuple[int, ...]] = set()
    parent = list(range(P + 1))

    def root(x: int) -> int:
        # no path compression: unions must be undoable on backtrack
        while parent[x] != x:
            x = parent[x]
        return x

    seq: list[int] = []

    def extend():
        if len(seq) == P - 1:
            canon.add(_canonical_code(tuple(seq), shift_tables))
            return
        for code in pos_codes:
            l = decode[code]
            ri, rj = root(l.i), root(l.j)
            if ri == rj:
                continue
            parent[ri] = rj
            seq.append(code)
            extend()
            seq.pop()
            parent[ri] = ri

    extend()
    words = [BraidWord(P, tuple(decode[c] for c in codes)) for codes in sorted(canon)]
    return words


def enumerate_good_words(P: int) -> list[BraidWord]:
    """All good words obtained by negating up to ``(P-1)//2`` letters of each
    positive representative; inverses are not included.

    Sign assignments that land in the same easy-conjugation orbit are kept
    once.  Words that differ only by a defining relation are distinct entries.
    """
    encode, decode, shift_tables = _code_tables(P)
    out: list[BraidWord] = []
    seen: set[tuple[int, ...]] = set()
    for w in enumerate_positive_good_words(P):
        codes = tuple(encode[(l.i, l.j, l.sign)] for l in w.letters)
        for r in range(0, (P - 1) // 2 + 1):
            for positions in combinations(range(P - 1), r):
                # the sign bit is the lowest bit of a letter code
                signed = tuple(c ^ 1 if p in positions else c for p, c in enumerate(codes))
                key = _canonical_code(signed, shift_tables)
                if key not in seen:
                    seen.add(key)
                    out.append(BraidWord(P, tuple(decode[c] for c in signed)))
    return out

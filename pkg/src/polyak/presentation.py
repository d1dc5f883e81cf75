"""Generator tables and sparse relation sets for the truncated word algebra.

The degree-n group is presented by the irreducible canonical words of rank
1..n (generators) together with relation vectors harvested from pattern
occurrences in all canonical words of rank up to n+1:

  * each two-letter pattern xAByBAz contributes  [w] + 2[w minus B],
  * each three-letter pattern xAByACzBCt contributes the eight-term vector
    pairing w and its block-reversed partner with their three single-letter
    deletions.

Terms of rank above n, terms with an adjacent equal pair, and empty terms
are dropped; a match whose vector truncates to nothing is not tallied at
all (this is the convention that reproduces the published raw counts).
Vectors are sign-normalized and deduplicated, which makes every artifact
byte-reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from multiprocessing import get_context
from pathlib import Path
from typing import Callable, Iterable, NamedTuple, Optional, TextIO

from .words import (
    GaussWord,
    _canonical_bytes,
    _has_adjacent_double_bytes,
    _iter_canonical_bytes,
)

Progress = Optional[Callable[[str], None]]

_BYTE = [bytes([i]) for i in range(64)]


class GeneratorTable:
    """Indexed table of the irreducible canonical words of rank 1..degree.

    Index order is rank-major, then lexicographic, so generator ids are
    stable across runs.
    """

    __slots__ = ("degree", "words", "_index")

    def __init__(self, degree: int, words: list[GaussWord]):
        self.degree = degree
        self.words = tuple(words)
        self._index = {w.raw: i for i, w in enumerate(self.words)}

    def __len__(self) -> int:
        return len(self.words)

    def __getitem__(self, gen_id: int) -> GaussWord:
        return self.words[gen_id]

    def id_of(self, w: GaussWord) -> int | None:
        return self._index.get(w.raw)

    def __repr__(self) -> str:
        return f"<GeneratorTable degree={self.degree} size={len(self.words)}>"


class RelationVector:
    """A sparse integer vector over generator ids.

    Stored as a tuple of (generator id, coefficient) pairs with ids
    ascending, no zero coefficients, and the lowest-id coefficient positive.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[tuple[int, int]]):
        items = sorted((g, c) for g, c in terms if c)
        if not items:
            raise ValueError("relation vector must have at least one term")
        ids = [g for g, _ in items]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate generator id in relation vector")
        if items[0][1] < 0:
            items = [(g, -c) for g, c in items]
        self.terms = tuple(items)

    def __eq__(self, other) -> bool:
        return isinstance(other, RelationVector) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __lt__(self, other: "RelationVector") -> bool:
        return self.terms < other.terms

    def __iter__(self):
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        body = " ".join(f"{g}:{c}" for g, c in self.terms)
        return f"RelationVector({body})"


@dataclass
class Presentation:
    """Generators plus the deduplicated union of both relation families."""

    degree: int
    generators: GeneratorTable
    relations: tuple[RelationVector, ...]
    raw_counts: tuple[int, int] | None  # (two-letter, three-letter) matches kept

    def matrix(self):
        """Relation matrix: one row per generator, one column per relation."""
        from .smith import SparseMatrix

        return SparseMatrix.from_columns(
            len(self.generators), (rel.terms for rel in self.relations)
        )


class RelationCounts(NamedTuple):
    """Size summary of a presentation, computable without materializing it."""

    degree: int
    generators: int
    g2_raw: int
    g3_raw: int
    unique: int


def build_generators(n: int) -> GeneratorTable:
    """Table of all irreducible canonical words of rank 1..n."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    words = []
    for r in range(1, n + 1):
        for raw in _iter_canonical_bytes(r):
            if not _has_adjacent_double_bytes(raw):
                words.append(GaussWord._wrap(raw))
    return GeneratorTable(n, words)


def truncate_term(table: GeneratorTable, w: GaussWord) -> int | None:
    """Generator id of w, or None when the term truncates away.

    A term truncates when its rank exceeds the table degree, when it has an
    adjacent equal pair, or when it is empty.
    """
    if w.rank == 0 or w.rank > table.degree or _has_adjacent_double_bytes(w.raw):
        return None
    gen_id = table.id_of(w)
    if gen_id is None:
        raise RuntimeError(f"irreducible word {w} of rank <= degree missing from table")
    return gen_id


# ---------------------------------------------------------------------------
# Relation scan.  This is the hot path: it touches every canonical word of
# rank <= n+1, so everything stays on bytes and dict lookups.

def _pack(items: list[tuple[int, int]]) -> bytes:
    return b"".join(g.to_bytes(4, "big") + bytes([c & 0xFF]) for g, c in items)


def _unpack(blob: bytes) -> tuple[tuple[int, int], ...]:
    out = []
    for i in range(0, len(blob), 5):
        g = int.from_bytes(blob[i : i + 4], "big")
        c = blob[i + 4]
        out.append((g, c - 256 if c >= 128 else c))
    return tuple(out)


def _scan_words(
    n: int,
    index: dict[bytes, int],
    rank: int,
    first_partner: int | None = None,
    want_g2: bool = True,
    want_g3: bool = True,
    progress: Progress = None,
):
    """Harvest relations from all canonical words of one rank (or one slice).

    Returns (g2_raw, g3_raw, g2_packed_set, g3_packed_set).
    """
    raw2 = raw3 = 0
    rel2: set[bytes] = set()
    rel3: set[bytes] = set()
    get = index.get
    canon = _canonical_bytes
    seen = 0
    for w in _iter_canonical_bytes(rank, first_partner):
        if progress is not None:
            seen += 1
            if not seen & 0xFFFFF:
                progress(f"scan rank {rank}: {seen} words")
        L = len(w)
        r = L // 2
        first = [-1] * r
        second = [0] * r
        for pos in range(L):
            b = w[pos]
            if first[b] < 0:
                first[b] = pos
            else:
                second[b] = pos
        wid = get(w)
        for a in range(r):
            p = first[a] + 1
            if p >= L:
                continue
            b = w[p]
            if first[b] != p:
                continue
            if want_g2 and second[a] == second[b] + 1:
                # xAByBAz at (a, b): vector [w] + 2[w minus b]
                tid = get(canon(w.translate(None, _BYTE[b])))
                if tid is not None:
                    packed = _pack([(tid, 2)] if wid is None else [(tid, 2), (wid, 1)])
                elif wid is not None:
                    packed = _pack([(wid, 1)])
                else:
                    continue
                raw2 += 1
                rel2.add(packed)
            if not want_g3:
                continue
            a2 = second[a]
            q = a2 + 1
            if q >= L:
                continue
            c = w[q]
            if first[c] != q:
                continue
            b2 = second[b]
            if b2 <= q or second[c] != b2 + 1:
                continue
            # xAByACzBCt at (a, b, c): eight-term vector against the
            # block-reversed word.
            a1 = first[a]
            mb = bytearray(w)
            mb[a1], mb[a1 + 1] = mb[a1 + 1], mb[a1]
            mb[a2], mb[q] = mb[q], mb[a2]
            mb[b2], mb[b2 + 1] = mb[b2 + 1], mb[b2]
            wp = bytes(mb)
            acc: dict[int, int] = {}
            if wid is not None:
                acc[wid] = 1
            for kill in (c, b, a):
                t = get(canon(w.translate(None, _BYTE[kill])))
                if t is not None:
                    acc[t] = acc.get(t, 0) + 1
            t = get(canon(wp))
            if t is not None:
                acc[t] = acc.get(t, 0) - 1
            for kill in (c, b, a):
                t = get(canon(wp.translate(None, _BYTE[kill])))
                if t is not None:
                    acc[t] = acc.get(t, 0) - 1
            items = [(g, v) for g, v in acc.items() if v]
            if not items:
                continue
            items.sort()
            if items[0][1] < 0:
                items = [(g, -v) for g, v in items]
            raw3 += 1
            rel3.add(_pack(items))
    return raw2, raw3, rel2, rel3


# Module-level state handed to forked scan workers (set before the pool
# forks; children inherit it read-only).
_SCAN_STATE: tuple | None = None


def _scan_task(task):
    rank, first_partner = task
    n, index, want_g2, want_g3 = _SCAN_STATE
    return _scan_words(n, index, rank, first_partner, want_g2, want_g3)


def _run_scan(
    n: int,
    table: GeneratorTable,
    want_g2: bool = True,
    want_g3: bool = True,
    workers: int = 1,
    progress: Progress = None,
):
    global _SCAN_STATE
    index = table._index
    raw2 = raw3 = 0
    rel2: set[bytes] = set()
    rel3: set[bytes] = set()
    if workers <= 1:
        for rank in range(1, n + 2):
            r2, r3, s2, s3 = _scan_words(
                n, index, rank, None, want_g2, want_g3, progress
            )
            raw2 += r2
            raw3 += r3
            rel2 |= s2
            rel3 |= s3
            if progress is not None:
                progress(f"rank {rank} done: raw {raw2}+{raw3}, unique so far {len(rel2) + len(rel3)}")
    else:
        tasks = [(r, fp) for r in range(1, n + 2) for fp in range(1, 2 * r)]
        _SCAN_STATE = (n, index, want_g2, want_g3)
        try:
            with get_context("fork").Pool(workers) as pool:
                for i, (r2, r3, s2, s3) in enumerate(
                    pool.imap_unordered(_scan_task, tasks)
                ):
                    raw2 += r2
                    raw3 += r3
                    rel2 |= s2
                    rel3 |= s3
                    if progress is not None:
                        progress(f"scan task {i + 1}/{len(tasks)} merged")
        finally:
            _SCAN_STATE = None
    return raw2, raw3, rel2, rel3


def _materialize(packed: Iterable[bytes]) -> list[RelationVector]:
    vectors = sorted(_unpack(blob) for blob in packed)
    out = []
    for terms in vectors:
        rv = object.__new__(RelationVector)
        rv.terms = terms
        out.append(rv)
    return out


def g2_relations(
    n: int, table: GeneratorTable | None = None, workers: int = 1
) -> tuple[list[RelationVector], int]:
    """Deduplicated two-letter-pattern relations and their raw match count."""
    if n < 1:
        raise ValueError("degree must be >= 1")
    if table is None:
        table = build_generators(n)
    raw2, _, rel2, _ = _run_scan(n, table, want_g2=True, want_g3=False, workers=workers)
    return _materialize(rel2), raw2


def g3_relations(
    n: int, table: GeneratorTable | None = None, workers: int = 1
) -> tuple[list[RelationVector], int]:
    """Deduplicated three-letter-pattern relations and their raw match count."""
    if n < 1:
        raise ValueError("degree must be >= 1")
    if table is None:
        table = build_generators(n)
    _, raw3, _, rel3 = _run_scan(n, table, want_g2=False, want_g3=True, workers=workers)
    return _materialize(rel3), raw3


def build_presentation(
    n: int, *, workers: int = 1, progress: Progress = None
) -> Presentation:
    """Generators plus sign-normalized, deduplicated relations for degree n."""
    if n < 1:
        raise ValueError("degree must be >= 1")
    table = build_generators(n)
    if progress is not None:
        progress(f"generators: {len(table)}")
    raw2, raw3, rel2, rel3 = _run_scan(n, table, workers=workers, progress=progress)
    relations = _materialize(rel2 | rel3)
    if progress is not None:
        progress(f"relations: {len(relations)} unique ({raw2} + {raw3} raw)")
    return Presentation(n, table, tuple(relations), (raw2, raw3))


def relation_counts(
    n: int, *, workers: int = 1, progress: Progress = None
) -> RelationCounts:
    """Presentation size summary without materializing relation objects.

    This is the path for large degrees where only the counts are wanted.
    """
    table = build_generators(n)
    if progress is not None:
        progress(f"generators: {len(table)}")
    raw2, raw3, rel2, rel3 = _run_scan(n, table, workers=workers, progress=progress)
    unique = len(rel2 | rel3)
    return RelationCounts(n, len(table), raw2, raw3, unique)


# ---------------------------------------------------------------------------
# Text serialization.

_HEADER = "# polyak-presentation v1"


def save_presentation(pres: Presentation, dest) -> None:
    """Write the presentation text format to a path or text file object."""
    if isinstance(dest, (str, Path)):
        with open(dest, "w") as fh:
            save_presentation(pres, fh)
        return
    fh: TextIO = dest
    fh.write(f"{_HEADER}\n")
    fh.write(f"degree {pres.degree}\n")
    fh.write(f"generators {len(pres.generators)}\n")
    for i, w in enumerate(pres.generators.words):
        fh.write(f"{i} {w}\n")
    fh.write(f"relations {len(pres.relations)}\n")
    for rel in pres.relations:
        fh.write(" ".join(f"{g}:{c}" for g, c in rel.terms) + "\n")


def load_presentation(src) -> Presentation:
    """Read the presentation text format; validates structure and ids."""
    if isinstance(src, (str, Path)):
        with open(src) as fh:
            return load_presentation(fh)
    fh: TextIO = src
    lines = (line.rstrip("\n") for line in fh)

    def next_line() -> str:
        for line in lines:
            return line
        raise ValueError("unexpected end of presentation file")

    if next_line() != _HEADER:
        raise ValueError("bad presentation header")
    degree = int(_expect(next_line(), "degree"))
    count = int(_expect(next_line(), "generators"))
    words = []
    for i in range(count):
        idx, text = next_line().split()
        if int(idx) != i:
            raise ValueError(f"generator ids out of order at {idx}")
        words.append(GaussWord.from_text(text))
    table = GeneratorTable(degree, words)
    rel_count = int(_expect(next_line(), "relations"))
    relations = []
    for _ in range(rel_count):
        terms = []
        for chunk in next_line().split():
            g, c = chunk.split(":")
            terms.append((int(g), int(c)))
        if terms != sorted(terms):
            raise ValueError("relation ids must be ascending")
        if any(g >= count for g, _ in terms):
            raise ValueError("relation references unknown generator id")
        relations.append(RelationVector(terms))
    return Presentation(degree, table, tuple(relations), None)


def _expect(line: str, key: str) -> str:
    head, _, value = line.partition(" ")
    if head != key:
        raise ValueError(f"expected '{key} ...' line, got {line!r}")
    return value

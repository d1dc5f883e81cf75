"""Homotopy classification: the invariant separates, move search merges.

Every canonical word up to the requested rank is first collapsed along the
shrinking moves, the surviving cores are grouped by their invariant value,
and bounded bidirectional searches merge cores inside each value group.
Groups that fail to merge within budget stay split and are reported as
unresolved pairs; they are never guessed either way.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterator, Optional, TextIO

from .homotopy import MoveApplication, reduce_with_trace, search
from .invariant import InvariantTable, Value, evaluate
from .words import GaussWord, enumerate_canonical

Progress = Optional[Callable[[str], None]]


@dataclass
class HomotopyClass:
    """One move-connected set of words sharing an invariant value."""

    value: Value
    words: tuple[GaussWord, ...]  # sorted, every member
    root: GaussWord  # the core all recorded traces lead to

    @property
    def representative(self) -> GaussWord:
        return self.words[0]

    def __len__(self) -> int:
        return len(self.words)


@dataclass
class Classification:
    """Partition of all canonical words of rank <= max_rank."""

    max_rank: int
    degree: int
    classes: list[HomotopyClass]
    unresolved: list[tuple[int, int]]  # index pairs of same-value classes
    _reduction: dict = field(repr=False, default_factory=dict)
    _core_up: dict = field(repr=False, default_factory=dict)
    _class_of_core: dict = field(repr=False, default_factory=dict)

    def class_of(self, w: GaussWord) -> int:
        core, _ = self._reduction[w]
        return self._class_of_core[core]

    def trace(self, w: GaussWord) -> list[MoveApplication]:
        """Moves taking w to the root core of its class (replayable)."""
        core, moves = self._reduction[w]
        out = list(moves)
        while True:
            up = self._core_up.get(core)
            if up is None:
                return out
            core, segment = up
            out.extend(segment)


def classify(
    max_rank: int,
    table: InvariantTable,
    rank_cap: int | None = None,
    node_budget: int = 10**6,
    progress: Progress = None,
) -> Classification:
    """Group all canonical words of rank <= max_rank into homotopy classes.

    Words are pre-collapsed along shrinking moves, grouped by invariant
    value, and merged within each group by bounded search.  Classes with
    different values are provably distinct; same-value classes that resist
    merging are listed in `unresolved`.
    """
    words: list[GaussWord] = []
    for r in range(max_rank + 1):
        words.extend(enumerate_canonical(r))
    return classify_words(
        words, table, rank_cap=rank_cap, node_budget=node_budget, progress=progress
    )


def classify_words(
    word_list,
    table: InvariantTable,
    rank_cap: int | None = None,
    node_budget: int = 10**6,
    progress: Progress = None,
) -> Classification:
    """Partition an explicit word collection; same contract as classify()."""
    words = sorted(set(word_list))
    max_rank = max((w.rank for w in words), default=0)
    if rank_cap is None:
        rank_cap = max_rank + 2
    reduction: dict[GaussWord, tuple[GaussWord, tuple]] = {}
    members: dict[GaussWord, list[GaussWord]] = {}
    for w in words:
        core, moves = reduce_with_trace(w)
        reduction[w] = (core, moves)
        members.setdefault(core, []).append(w)
    cores = sorted(members)
    if progress is not None:
        progress(f"classify: {len(words)} words collapse to {len(cores)} cores")
    groups: dict[Value, list[GaussWord]] = {}
    for core in cores:
        groups.setdefault(evaluate(table, core), []).append(core)

    # Merge cores inside each value group; record one spanning trace per merge.
    comp_root: dict[GaussWord, GaussWord] = {c: c for c in cores}
    core_up: dict[GaussWord, tuple[GaussWord, tuple]] = {}

    def find(c: GaussWord) -> GaussWord:
        while comp_root[c] != c:
            c = comp_root[c]
        return c

    unresolved_groups: list[list[GaussWord]] = []
    for value in sorted(groups):
        group = groups[value]
        component_reps: list[GaussWord] = []
        for core in group:
            placed = False
            for rep in component_reps:
                out = search(core, rep, rank_cap=rank_cap, node_budget=node_budget)
                if out.connected:
                    comp_root[core] = rep  # reps stay roots within a group
                    core_up[core] = (rep, tuple(out.trace))
                    placed = True
                    break
            if not placed:
                component_reps.append(core)
        if len(component_reps) > 1:
            unresolved_groups.append(component_reps)
        if progress is not None and len(group) > 1:
            progress(
                f"classify: value {value}: {len(group)} cores -> "
                f"{len(component_reps)} component(s)"
            )

    # Each core's trace must lead to its component root; re-root the trees.
    # A merge recorded core -> rep means the trace joins core to rep, so the
    # component root (a rep never merged away) is reachable along core_up.
    classes_by_root: dict[GaussWord, list[GaussWord]] = {}
    for core in cores:
        classes_by_root.setdefault(find(core), []).append(core)

    class_list: list[HomotopyClass] = []
    class_of_core: dict[GaussWord, int] = {}
    entries = []
    for root, group_cores in classes_by_root.items():
        all_words = sorted(w for c in group_cores for w in members[c])
        entries.append((evaluate(table, root), all_words, root, group_cores))
    entries.sort(key=lambda e: (e[0], e[1][0]._key()))
    for idx, (value, all_words, root, group_cores) in enumerate(entries):
        class_list.append(HomotopyClass(value, tuple(all_words), root))
        for c in group_cores:
            class_of_core[c] = idx
    unresolved: list[tuple[int, int]] = []
    for reps in unresolved_groups:
        ids = sorted({class_of_core[r] for r in reps})
        for x in range(len(ids)):
            for y in range(x + 1, len(ids)):
                unresolved.append((ids[x], ids[y]))
    unresolved.sort()
    return Classification(
        max_rank,
        table.degree,
        class_list,
        unresolved,
        reduction,
        core_up,
        class_of_core,
    )


def report(c: Classification, destination) -> None:
    """Plain-text report: one block per value, classes as subsets inside.

    Blocks are ordered by value then representative; unresolved same-value
    pairs are flagged in place and summarized at the end.
    """
    if isinstance(destination, (str, Path)):
        with open(destination, "w") as fh:
            report(c, fh)
        return
    fh: TextIO = destination
    blocks: dict[Value, list[int]] = {}
    for idx, cls in enumerate(c.classes):
        blocks.setdefault(cls.value, []).append(idx)
    fh.write("# gauss-word-classes v1\n")
    fh.write(f"max_rank {c.max_rank}\n")
    fh.write(f"degree {c.degree}\n")
    fh.write(f"blocks {len(blocks)}\n")
    fh.write(f"classes {len(c.classes)}\n")
    fh.write(f"unresolved {len(c.unresolved)}\n")
    unresolved_ids = {i for pair in c.unresolved for i in pair}
    for bnum, value in enumerate(sorted(blocks), start=1):
        ids = blocks[value]
        vtxt = " ".join(map(str, value)) if value else "-"
        total = sum(len(c.classes[i]) for i in ids)
        flag = " UNRESOLVED" if any(i in unresolved_ids for i in ids) else ""
        fh.write(f"block {bnum} value [{vtxt}] classes {len(ids)} words {total}{flag}\n")
        for i in ids:
            cls = c.classes[i]
            fh.write(f"  class {i} root {cls.root} size {len(cls)}\n")
            for w in cls.words:
                fh.write(f"    {w}\n")
    if c.unresolved:
        fh.write("unresolved pairs:\n")
        for a, b in c.unresolved:
            fh.write(
                f"  class {a} (root {c.classes[a].root}) vs "
                f"class {b} (root {c.classes[b].root})\n"
            )


def machine_lines(c: Classification) -> Iterator[str]:
    """One `<word> <class-id> <value-components>` line per word."""
    for idx, cls in enumerate(c.classes):
        vtxt = " ".join(map(str, cls.value))
        for w in cls.words:
            yield f"{w} {idx} {vtxt}".rstrip()

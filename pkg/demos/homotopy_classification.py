"""Moves, equivalence search, and the rank-4 classification.

Seven moves act on canonical words: pair insertion/deletion, interleaved
pair insertion/deletion, and block exchanges (plus the derived parallel
pair and the three remaining exchange orientations).  A bounded
bidirectional search connects equivalent words; the invariant separates
inequivalent ones; classify() combines both.

Run:  python demos/homotopy_classification.py
"""

import io

from polyak import (
    EMPTY_WORD,
    GaussWord,
    build_table,
    classify,
    neighbors,
    render_trace,
    report,
    search,
)

W = GaussWord.from_text

# One-move neighborhoods.
w = W("ABACBC")
print(f"neighbors of {w} (rank cap 4):")
for image, move in neighbors(w, 4)[:8]:
    print(f"  {move.tag:>2} {move.direction:<8} -> {image}")
print("  ...")

# Search produces a replayable trace.
out = search(W("ABCBCA"), EMPTY_WORD)
print(f"\nABCBCA ~ empty: {out.status} after {out.nodes_explored} nodes")
for line in render_trace(W("ABCBCA"), out.trace):
    print("  ", line)

# The two known nontrivial rank-4 words connect by a single exchange.
out = search(W("ABACDCBD"), W("ABCBDACD"))
print(f"\nABACDCBD ~ ABCBDACD: {out.status}, trace length {len(out.trace)}")

# A search that cannot succeed stays honest: within rank cap 6 the word
# ABACDCBD never reaches the empty word, and the verdict is 'unknown',
# never 'distinct'.
out = search(W("ABACDCBD"), EMPTY_WORD, rank_cap=6)
print(f"ABACDCBD vs empty (cap 6): {out.status} ({out.nodes_explored} nodes)")

# Full classification of words of rank at most 4 under the degree-5
# invariant: the trivial class plus three nontrivial classes.
table5 = build_table(5)
classes = classify(4, table5)
print(f"\nrank <= 4: {len(classes.classes)} homotopy classes")
for cls in classes.classes:
    members = [str(x) for x in cls.words]
    shown = ", ".join(members[:6]) + (", ..." if len(members) > 6 else "")
    print(f"  value {cls.value}: {len(cls)} word(s): {shown}")

buf = io.StringIO()
report(classes, buf)
print("\nreport header:")
print("\n".join(buf.getvalue().splitlines()[:8]))

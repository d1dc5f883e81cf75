"""Presenting the truncated word algebra and reading off its group.

For each degree n the generators are the irreducible canonical words of
rank <= n and the relations come from the two pattern families, truncated
at rank n.  The Smith normal form of the relation matrix (all arithmetic
mod 2^(n-1)) turns the presentation into a direct sum of cyclic 2-groups.

Run:  python demos/group_structure.py [max_degree]
"""

import sys
import time

from polyak import build_presentation, snf_sparse_mod2k, verify_cokernel_map
from polyak.cli import group_structure

max_degree = int(sys.argv[1]) if len(sys.argv) > 1 else 5

print(f"{'n':>2} {'generators':>10} {'raw 2-pat':>9} {'raw 3-pat':>9} "
      f"{'unique':>7}  structure")
for n in range(1, max_degree + 1):
    t0 = time.time()
    pres = build_presentation(n)
    if pres.relations:
        result = snf_sparse_mod2k(pres.matrix(), max(n - 1, 1))
        assert verify_cokernel_map(pres.matrix(), result)
        divisors = result.divisors
    else:
        divisors = ()
    structure, _ = group_structure(divisors)
    g2_raw, g3_raw = pres.raw_counts
    print(
        f"{n:>2} {len(pres.generators):>10} {g2_raw:>9} {g3_raw:>9} "
        f"{len(pres.relations):>7}  {structure}   ({time.time() - t0:.2f}s)"
    )

# The first torsion appears at degree 4 (a single Z/2); degree 5 adds six
# more Z/2 summands and one Z/4.  Degree 6 takes a few seconds and yields
# (Z/2)^32 + (Z/4)^6 + Z/8; pass 6 as an argument to see it.

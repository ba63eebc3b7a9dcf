"""
Cross-checking against OEIS b-files
===================================

The four vendored b-files are compared with the computed sequences. A
b-file written from index 1 is reconciled by retrying with a shifted offset.
"""

from lucas_euler.bfile import FAMILIES, load_fixture, oeis_check, parse_bfile

for family in FAMILIES:
    bfile = load_fixture(family)
    result = oeis_check(family, bfile)
    head = [v for _, v in bfile.entries[:6]]
    print(f"{family:16} {bfile.seq_id} {len(bfile)} terms {head}  {result.status}")

# %%
one_based = parse_bfile("1 1\n2 6\n3 35\n4 204\n", "A001109")
print(oeis_check("balancing", one_based).grid)

# %%
# Checking Fibonacci against the Lucas file reports both attempted offsets.
mismatch = oeis_check("fibonacci", load_fixture("lucas"))
for attempt in mismatch.counterexample["attempts"]:
    print(attempt)

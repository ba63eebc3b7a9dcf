"""
Checking the identity catalog
=============================

Evaluate individual identities, sweep them over grids, and build a report.
"""

from lucas_euler import Grid, Report, check_identity, evaluate_identity, list_identities
from lucas_euler.catalog import perturbed
from lucas_euler.polyring import X

for ident, anchor, ring, domain in list_identities()[:6]:
    print(f"{ident:14} {ring:9} {domain:14} {anchor}")

# %%
# Single points: both sides come back as exact values.
print("byrd n=2:", *evaluate_identity("byrd", n=2))
print("cor5 n=2, j=1:", *evaluate_identity("cor5", n=2, j=1))
lhs, rhs = evaluate_identity("thm1", n=3)
print("thm1 n=3:", lhs)

# Values over sqrt(5) stay symbolic in the extension.
print("frogoy1 n=3, j=2:", *evaluate_identity("frogoy1", n=3, j=2), sep="\n  ")

# %%
# A small sweep, then a deliberately broken identity.
results = [check_identity(i, Grid(n_max=10, j_max=3)) for i in ("wang", "cor7", "thm5_plus")]
bad = perturbed("thm2", rhs=lambda n: (18 * X**2 + 1) ** n)
results.append(check_identity(bad, Grid(n_max=4)))

report = Report(results)
print(report.to_text())
print(report.summary)

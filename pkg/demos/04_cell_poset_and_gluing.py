# The finite poset of cell labels and the ball-gluing hypotheses.
#
# Every label assigns each coordinate one of -1, U, L, F, 1 and has a
# dimension nu.  Charts X^(j,k) put U at j and L at k; their meets drop
# dimension by exactly one per extra chart, which is the combinatorial
# half of the gluing argument.  The sampled half checks the realized
# cells against exact membership predicates.

from phasetop.cells import format_cell_label, meet, nu, pn_elements, ul_label
from phasetop.gluing import check_gluing, lattice_family, verify_slice_claims

n = 4
cells = pn_elements(n)
print(f"{len(cells)} cell labels for n={n}; a few with their dimensions:")
for x in cells[:5]:
    print(f"   {format_cell_label(x):>12}   nu = {nu(x)}")

a = ul_label(1, 2, n)
b = ul_label(2, 1, n)
print("meet of", format_cell_label(a), "and", format_cell_label(b),
      "=", format_cell_label(meet(a, b)), " nu", nu(meet(a, b)))

# one chart family, all gluing hypotheses at once
fam = lattice_family([ul_label(1, k, n) for k in range(1, n)], 2 * n - 4)
report = check_gluing(fam)
print("family (1,k) glues cleanly:", report.passed)

# the full verification: combinatorics plus sampled geometry
rep = verify_slice_claims(n, samples=200, seed=0)
print(rep.to_text())

# Covectors of the all-ones vector over small phase grids.
#
# x is a covector of v when zero lies in the multivalued sum of the
# entrywise products v_k x_k.  On any even grid the covectors can be
# enumerated exhaustively, and every covector supported on at least
# three coordinates already contains a three-term zero relation.

from phasetop.covectors import (
    enumerate_covectors,
    find_zero_triple,
    format_phase_vector,
    support,
    zero_in_sum,
)

covs = enumerate_covectors("phase", 3, 4)
print(f"{len(covs)} covectors of (1,1,1) on the quarter-turn grid")
for x in covs[:6]:
    print("  ", format_phase_vector(x))
print("   ...")

big = [x for x in covs if len(support(x)) >= 3]
print(f"{len(big)} have full support; each yields a zero triple:")
for x in big[:4]:
    j, k, l = find_zero_triple(x)
    entries = [x[j - 1], x[k - 1], x[l - 1]]
    assert zero_in_sum(entries)
    print(f"   {format_phase_vector(x)}  ->  coordinates ({j},{k},{l})")

# sign vectors are the two-element grid of the same story
signs = enumerate_covectors("sign", 3)
print(f"{len(signs)} sign covectors of (1,1,1), e.g. the first five:")
for v in signs[:5]:
    print("  ", v)

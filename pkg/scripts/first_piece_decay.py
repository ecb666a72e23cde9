"""Show the first piece of the two-piece split of I_2(a) shrinking as a -> 0,
next to its closed-form overestimate."""
from zeta_crucible import pipeline

print(f"{'a':>8} {'first piece':>14} {'overestimate':>14} {'I_2(a)':>20}")
for k in range(0, 9):
    a = 10.0 ** -k
    fp = pipeline.first_piece(a).value
    print(f"{a:>8.0e} {fp:>14.6e} {pipeline.lemma3_overestimate(a):>14.6e} "
          f"{pipeline.i2_two_piece(a).value:>20.16f}")

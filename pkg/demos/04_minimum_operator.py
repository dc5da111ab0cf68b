# %% [markdown]
# # The minimum operator
#
# Two parabolas, each with its own equidistant function for the disc of
# radius 0.5. The epigraph of their pointwise minimum is the union of the
# epigraphs, and its equidistant function is the minimum of the two.

# %%
import numpy as np

from equidist import Ball, ShiftedParabola, min_commute_check

fam = [ShiftedParabola(1.0, 1.0), ShiftedParabola(-1.0, 1.0)]
rep = min_commute_check(Ball(0.5), fam, np.linspace(-2, 2, 9))
print(" x      G_min        G_1          G_2")
for row in rep.table():
    print("  ".join(f"{v: .8f}" for v in row))
print("max gap", rep.max_gap)

# %% [markdown]
# # A fat Cantor set of equidistant points
#
# With a disc and a suitable convex region, a whole vertical segment is
# equidistant. Cutting chords off the region's circular arc removes the
# matching open pieces of the segment, one Cantor step at a time.

# %%
import numpy as np

from equidist import build_scene, segment_membership_test

for depth in range(5):
    scene = build_scene(depth)
    m = segment_membership_test(scene, np.linspace(-0.5, 0.5, 1025))
    kept = m.is_equidistant.mean()
    print(f"depth {depth}: kept measure {scene.cantor.measure} ({float(scene.cantor.measure):.4f}), "
          f"sampled fraction {kept:.4f}, disagreements {int((~m.agrees).sum())}")

# %% [markdown]
# A point in a removed gap is strictly nearer to the disc.

# %%
scene = build_scene(1)
print(segment_membership_test(scene, np.array([0.0])).residual)

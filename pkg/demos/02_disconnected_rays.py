# %% [markdown]
# # Disconnected admissible rays in two variables
#
# f(t1, t2) = t1^2 + 20 t1 t2 + 1000 t2^2 - 30 t2 + 1 with a sphere of radius
# 0.3. Along the ray t = (r, 0) the tangent-plane distance alpha crosses 0.3
# three times, so the admissible part of the ray splits in two.

# %%
import numpy as np
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from equidist import alpha_nd, infimum, example_quadform, ray_admissible_segments
from equidist.sphere import slit_alpha

q = example_quadform()
arg, low = infimum(q, [(-3, 3), (-3, 3)])
print("minimum", low, "at", arg)

# %%
u = np.array([1.0, 0.0])
rays = ray_admissible_segments(q, 0.3, u, 6.0)
print("segments:", [(round(a, 4), round(b, 4)) for a, b in rays.segments])
print("slit bound t_u+ =", round(rays.t_u_plus, 6))

# %%
r = np.linspace(0, 6, 1200)
fig, ax = plt.subplots(figsize=(7, 4))
ax.plot(r, alpha_nd(q, r[:, None] * u), label="alpha(r u)")
ax.plot(r, slit_alpha(q, u, r), "--", label="slit alpha")
ax.axhline(0.3, color="k", lw=0.8)
for a, b in rays.segments:
    ax.axvspan(a, b, alpha=0.15)
ax.set(xlabel="r", ylim=(-1.5, 1.5))
ax.legend()
fig.tight_layout()
fig.savefig("demos/disconnected_rays.png", dpi=120)

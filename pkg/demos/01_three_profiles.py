# %% [markdown]
# # Three convex profiles against a disc
#
# The disc of radius R about the origin and the region above a convex graph
# are disjoint. Every foot t on the graph gives one equidistant point, as long
# as the tangent line at t stays closer to the origin than R.
# Below: where that fails for sqrt(t^2+1), e^t and t^2+1, what the curves look
# like, and a brute-force check of a few points.

# %%
import numpy as np
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from equidist import Ball, Epigraph, Exp, Poly1D, Sqrt1p, critical_domain, trace_curve
from equidist.vertical import profile

cases = [("sqrt(t^2+1)", Sqrt1p(), 0.9), ("exp(t)", Exp(), 0.5), ("t^2+1", Poly1D([1.0, 0.0, 1.0]), 0.5)]

# %% [markdown]
# ## Admissible parameters

# %%
for label, f, R in cases:
    dom = critical_domain(f, R)
    print(f"{label:12s} R={R}:  t- = {dom.t_minus:.10g}   t+ = {dom.t_plus:.10g}")

# %% [markdown]
# ## Curves
# Near a finite end of the domain the common distance blows up, so the
# plotted window is clipped.

# %%
fig, axes = plt.subplots(1, 3, figsize=(13, 4))
for ax, (label, f, R) in zip(axes, cases):
    dom = critical_domain(f, R)
    c = trace_curve(f, R, dom.grid(-4, 4, 800, margin=1e-3))
    keep = np.abs(c.x) < 6
    ax.plot(c.x[keep], c.y[keep], label="equidistant curve")
    xs = np.linspace(-6, 6, 400)
    with np.errstate(over="ignore"):
        ax.plot(xs, f.value(xs), "k", lw=1, label="graph of f")
    th = np.linspace(0, 2 * np.pi, 200)
    ax.fill(R * np.cos(th), R * np.sin(th), alpha=0.3)
    ax.set(xlim=(-6, 6), ylim=(-4, 6), title=f"{label}, R={R}", aspect="equal")
axes[0].legend(loc="lower left")
fig.tight_layout()
fig.savefig("demos/three_profiles.png", dpi=120)

# %% [markdown]
# ## Cross-check
# Distances to both sets at the traced points, and a vertical scan at the
# same abscissae that knows nothing about the closed form.

# %%
for label, f, R in cases:
    dom = critical_domain(f, R)
    c = trace_curve(f, R, dom.grid(-2, 1.3, 25, margin=1e-3))
    pts = c.points()
    gap = np.max(np.abs(Ball(R).distance(pts) - Epigraph(f).distance(pts)))
    roots = np.array([s.g_minus for s in profile(c.x, Ball(R), f)])
    print(f"{label:12s} max |dK - dL| = {gap:.1e}   max |y - scanned root| = {np.max(np.abs(roots - c.y)):.1e}")

# %% [markdown]
# # Is a given function an equidistant function?
#
# A traced curve interpolated by a Hermite spline should pass the test; an
# arbitrary concave guess should not.

# %%
import numpy as np

from equidist import Poly1D, Sqrt1p, critical_domain, curve_to_G, is_equidistant_function, trace_curve

f, R = Sqrt1p(), 0.9
c = trace_curve(f, R, critical_domain(f, R).grid(-3, 3, 1201))
G = curve_to_G(c)
rep = is_equidistant_function(G, R, np.linspace(-2.7, 2.7, 201))
print("traced G:", rep.ok, rep.conditions, f"residual {rep.worst_equidistance_residual:.1e}")

# %% [markdown]
# The recovered function should be f itself.

# %%
t = np.array([p[0] for p in rep.recovered_f])
fv = np.array([p[1] for p in rep.recovered_f])
print("max |recovered - f| =", np.max(np.abs(fv - f.value(t))))

# %%
guess = Poly1D([-0.1, 0.0, 0.75])
rep = is_equidistant_function(guess, 0.5, np.linspace(-2, 2, 201))
print("concave guess:", rep.ok)
for line in rep.failures:
    print("  -", line)

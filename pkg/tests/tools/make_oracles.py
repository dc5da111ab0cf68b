"""Regenerate tests/oracle_values.py with mpmath at 50 digits.

Nothing here imports equidist: every number comes from the scalar
equations written out directly.
"""
from pathlib import Path

import mpmath as mp

mp.mp.dps = 50
out = {}


def alpha_1d(f, df, t):
    return (t * df(t) - f(t)) / mp.sqrt(1 + df(t) ** 2)


def point_1d(f, df, R, t):
    w = mp.sqrt(1 + df(t) ** 2)
    s = (t * t + f(t) ** 2 - R * R) / (2 * (R - alpha_1d(f, df, t)))
    return s, t + s * df(t) / w, f(t) - s / w


exp_f, exp_d = mp.exp, mp.exp
par_f, par_d = (lambda t: t * t + 1), (lambda t: 2 * t)

out["EXP_T_PLUS"] = mp.findroot(lambda t: alpha_1d(exp_f, exp_d, t) - mp.mpf("0.5"), 1.5)
out["PARABOLA_T_PLUS"] = mp.findroot(lambda t: alpha_1d(par_f, par_d, t) - mp.mpf("0.5"), 1.6)

s, x, y = point_1d(exp_f, exp_d, mp.mpf("0.5"), mp.mpf(0))
out["EXP_T0_S"], out["EXP_T0_X"], out["EXP_T0_Y"] = s, x, y
s, x, y = point_1d(par_f, par_d, mp.mpf("0.5"), mp.mpf(1))
out["PAR_T1_S"], out["PAR_T1_X"], out["PAR_T1_Y"] = s, x, y

# vertical line x = 1 over t^2+1 with R = 0.5: foot t solving x(t) = 1
t1 = mp.findroot(lambda t: point_1d(par_f, par_d, mp.mpf("0.5"), t)[1] - 1, 0.1)
out["PAR_X1_T"] = t1
out["PAR_X1_Y"] = point_1d(par_f, par_d, mp.mpf("0.5"), t1)[2]

# distance from the rounded point (5.2485, -0.1243) to the epigraph of t^2+1
px, py = mp.mpf("5.2485"), mp.mpf("-0.1243")
foot = mp.findroot(lambda s: (s - px) + (s * s + 1 - py) * 2 * s, 1.0)
out["ROUNDED_DIST"] = mp.sqrt((foot - px) ** 2 + (foot * foot + 1 - py) ** 2)
out["ROUNDED_FOOT"] = foot


# two-variable quadratic t1^2 + 20 t1 t2 + 1000 t2^2 - 30 t2 + 1
def q(a, b):
    return a * a + 20 * a * b + 1000 * b * b - 30 * b + 1


def q_grad(a, b):
    return 2 * a + 20 * b, 20 * a + 2000 * b - 30


def q_alpha(a, b):
    ga, gb = q_grad(a, b)
    return (a * ga + b * gb - q(a, b)) / mp.sqrt(1 + ga * ga + gb * gb)


R3 = mp.mpf("0.3")
ga, gb = q_grad(0, 0)
w = mp.sqrt(1 + ga * ga + gb * gb)
s = (q(0, 0) ** 2 - R3 * R3) / (2 * (R3 - q_alpha(0, 0)))
out["QF_T0_S"] = s
out["QF_T0_X2"] = s * gb / w
out["QF_T0_Y"] = q(0, 0) - s / w
out["QF_RAY_EDGES"] = [mp.findroot(lambda r: q_alpha(r, 0) - R3, r0) for r0 in (1.42, 1.87, 4.09)]
out["QF_SLIT"] = mp.findroot(lambda r: (r * r - 1) / mp.sqrt(1 + 4 * r * r) - R3, 1.37)


# G of (t - 1)^2 + 1 at x = 0 for Ball{0.5}: distance to the epigraph equals y - 0.5
def d_epi(x, y):
    foot = mp.findroot(lambda s: (s - x) + ((s - 1) ** 2 + 1 - y) * 2 * (s - 1), 0.8)
    return mp.sqrt((foot - x) ** 2 + ((foot - 1) ** 2 + 1 - y) ** 2)


out["SHIFTED_G_AT_0"] = mp.findroot(lambda y: d_epi(0, y) - (y - mp.mpf("0.5")), 1.0)

# fat Cantor scene: vertical line x0 = sqrt(3)/(sqrt(3) - 1), y0 = 1 + sqrt(3)/2
x0 = mp.sqrt(3) / (mp.sqrt(3) - 1)
y0 = 1 + mp.sqrt(3) / 2
out["SVC_X0"] = x0
out["SVC_COMMON_DISTANCE"] = mp.sqrt(x0 * x0 + y0 * y0) - 2


def fmt(v):
    if isinstance(v, list):
        return "[" + ", ".join(fmt(u) for u in v) + "]"
    return repr(float(v))


lines = ['"""Frozen reference values (mpmath, 50 digits); see tools/make_oracles.py."""', ""]
lines += [f"{k} = {fmt(v)}" for k, v in out.items()]
Path(__file__).resolve().parents[1].joinpath("oracle_values.py").write_text("\n".join(lines) + "\n")
print("\n".join(lines))

"""Structural physical approximation: mix with noise until positive.

Mixing a witness with white noise at ratio p makes it a state once p
reaches a critical value with the closed form p* = 4(3-a)/(15-4a). On the
boundary ellipses the approximated operator splits into pair terms that
are PPT on 2x2 supports plus a diagonal remainder, so it is separable.
"""
import numpy as np

from ewcones import (
    critical_p,
    critical_p_from_a,
    ellipse_point,
    n3_abc,
    spa_decompose,
    spa_mix,
    special_points,
    witness_from_params,
)

for sp in special_points():
    w = witness_from_params(sp.params)
    p_star = critical_p(w)
    closed = critical_p_from_a(sp.params.a)
    print(f"point ({sp.label}): p* = {p_star:.12f}, closed form {closed:.12f}")

# the mixture is exactly on the PSD boundary at p*
sp = special_points()[0]
w = witness_from_params(sp.params)
p_star = critical_p(w)
for p in (0.95 * p_star, p_star):
    low = np.linalg.eigvalsh(spa_mix(w, p))[0]
    print(f"  at p = {p:.6f}: smallest eigenvalue {low:+.2e}")

# separable decomposition on a boundary ellipse point
params = ellipse_point("II", 0.25, "+")
res = spa_decompose(params)
print(f"\nellipse II point: p* = {res.p_star:.6f},"
      f" normalization {res.normalization:.6f}")
print(f"  slack weights {tuple(round(s, 12) for s in res.slacks)}")
print(f"  pair terms separable: {res.pairs_separable},"
      f" reconstruction error {res.reconstruction_error:.2e}")

# the 3x3 analogue traces the same product relation in one angle
print()
for alpha in (0.0, np.pi / 3, 2 * np.pi / 3):
    q = n3_abc(alpha)
    gap = q.b * q.c - (1.0 - q.a) ** 2
    print(f"alpha = {alpha:.4f}: (a, b, c) = ({q.a:.4f}, {q.b:.4f}, {q.c:.4f}),"
          f" bc - (1-a)^2 = {gap:+.1e}")

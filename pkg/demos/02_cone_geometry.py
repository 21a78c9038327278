"""Where the witness parameters live: two quadric cones in (b, c, d) space.

Every parameter point from the rotation family lands on one of two cones.
Their boundary ellipses sit in the planes b + d = 2 and b + d = 1, the cones
share a symmetry axis, and four hand-picked points mark the corners.
"""
import numpy as np

from ewcones import (
    AXIS_DIRECTION,
    AXIS_POINT,
    WitnessParams,
    abcd_from_euler,
    cone_residuals,
    ellipse_point,
    product_relations,
    sample_cloud,
    special_points,
)

# random members split by parity: improper rotations fill cone I,
# proper rotations fill cone II
rng = np.random.default_rng(7)
for parity, cone in (("improper", "one"), ("proper", "two")):
    worst = 0.0
    for _ in range(500):
        p = abcd_from_euler(*rng.uniform(0, 2 * np.pi, 3), parity=parity)
        rep = cone_residuals(p)
        worst = max(worst, abs(getattr(rep, f"residual_{cone}")))
    print(f"{parity} rotations: worst cone-{cone} residual over 500 draws {worst:.2e}")

print()
for sp in special_points():
    rep = cone_residuals(sp.params)
    abcd = tuple(float(x) for x in sp.params.as_array())
    print(f"special point ({sp.label}): abcd = {abcd},"
          f" ellipse {sp.ellipse}, b+d = {rep.plane_coordinate}")

# the boundary ellipses carry exact product relations
print()
t = 0.3
two = ellipse_point("II", t)
one = ellipse_point("I", t)
r_two, _ = product_relations(two)
_, r_one = product_relations(one)
print(f"ellipse II at t={t}: bd - (1-a)^2 = {r_two:.2e}")
print(f"ellipse I  at t={t}: ac - (1-b)^2 = {r_one:.2e}")

# both cones share the axis through (0.5, 1, 0.5) along (1, -1, 1)
unit = AXIS_DIRECTION / np.linalg.norm(AXIS_DIRECTION)
for cone in ("I", "II"):
    cloud = sample_cloud(cone, 24)
    centroid = cloud[1:].mean(axis=0)
    rel = centroid - AXIS_POINT
    dist = np.linalg.norm(rel - (rel @ unit) * unit)
    print(f"cone {cone}: cloud centroid sits {dist:.2e} from the shared axis")

# a point far from both cones is flagged as such
rep = cone_residuals(WitnessParams(2.0, 1.0, 0.0, 0.0))
print(f"\noutside point: residuals ({rep.residual_one:+.2f}, {rep.residual_two:+.2f}),"
      f" member of either cone: {rep.on_cone_one or rep.on_cone_two}")

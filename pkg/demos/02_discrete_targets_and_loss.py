"""From continuous follow-up times to interval targets and the loss.

Fifteen equidistant intervals cover [0, 3000] days.  An uncensored
patient marks every fully survived interval in surv_s and the death
interval in surv_f; a censored patient gets survival credit for an
interval once their censoring time passes its midpoint, and an all-zero
surv_f.  The loss is the negative log-likelihood of those indicators
under the network's per-interval conditional survival probabilities.
"""

import numpy as np

from survkit import build_grid, loss, make_target

grid = build_grid(3000.0, 15)
print("interval boundaries:", grid.boundaries[:4], "...", grid.boundaries[-2:])

for time, event, label in ((450.0, 1, "death at day 450"), (450.0, 0, "censored at day 450"),
                           (500.0, 0, "censored at day 500 (midpoint rule, inclusive)")):
    target = make_target(grid, time, event)
    print(f"\n{label}")
    print("  surv_s:", target.surv_s.astype(int))
    print("  surv_f:", target.surv_f.astype(int))

# a perfect prediction has zero loss; predicting 0.5 everywhere for a
# first-interval death costs exactly ln 2
target = make_target(grid, 450.0, 1)
perfect = target.surv_s[None, :].copy()
print("\nloss(perfect prediction) =", loss(perfect, target.surv_s[None], target.surv_f[None]))

first_death = make_target(grid, 10.0, 1)
half = np.full((1, 15), 0.5)
print("loss(0.5 everywhere, death in interval 1) =",
      loss(half, first_death.surv_s[None], first_death.surv_f[None]), "= ln 2 =", np.log(2))

# the loss decomposes per patient: worse calibrated intervals cost more
rng = np.random.default_rng(0)
sloppy = np.clip(perfect + rng.uniform(-0.3, 0.3, size=perfect.shape), 0.01, 0.99)
print("loss(noisy prediction)  =", round(loss(sloppy, target.surv_s[None], target.surv_f[None]), 4))

# %% [markdown]
# # Weak values and the quantum description
#
# The same apparatus as a pre/post-selected photon.  The path projector has
# weak value 1 in L and 0 in R; the polarization flip has 0 in L and 1 in R.
# The post-selected detection rate agrees with the classical wave intensity
# to rounding error.

# %%
import numpy as np

from cheshire import (Attenuate, Hwp, cheshire_weak_values, closed_form_intensity,
                      postselected_probability, weak_response_check)

for name, value in cheshire_weak_values().items():
    print(f"<{name}>_w = {value}")

# %%
rng = np.random.default_rng(1)
worst = 0.0
for _ in range(1000):
    T_L, T_R = rng.uniform(size=2)
    th_L, th_R, phi = rng.uniform(-np.pi, np.pi, size=3)
    p = postselected_probability([Attenuate(T_L), Hwp(th_L)], [Attenuate(T_R), Hwp(th_R)], phi)
    worst = max(worst, abs(p - closed_form_intensity(T_L, T_R, th_L, th_R, phi)))
print("max |quantum - classical| over 1000 draws:", worst)

# %%
for eps in (0.08, 0.04, 0.02, 0.01):
    r = weak_response_check(eps, eps)
    print(eps, {k: round(v, 6) for k, v in r.items()})

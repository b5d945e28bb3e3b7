# %% [markdown]
# # Where is the polarization?  Half-wave plates in each arm
#
# A plate in arm L only costs cos^2(theta) of the signal (second order, no
# fringes).  A plate in arm R produces fringes of amplitude 2 sin(theta),
# first order in the angle.

# %%
import numpy as np

from cheshire import Hwp, fringe_decompose, propagate

phis = np.linspace(0, 2 * np.pi, 128, endpoint=False)
for deg in (5, 10, 20):
    th = np.radians(deg)
    for arm, left, right in (("L", [Hwp(th)], []), ("R", [], [Hwp(th)])):
        fit = fringe_decompose(phis, [propagate(left, right, p).d1_postselected for p in phis])
        print(f"{deg:>2} deg in {arm}: dc={fit.dc:.5f} amplitude={fit.amplitude:.5f}")

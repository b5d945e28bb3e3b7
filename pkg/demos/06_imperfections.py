# %% [markdown]
# # Imperfect optics
#
# Reduced fringe visibility, unequal arm powers and a slightly impure
# preselection break the clean separation by amounts of order 10-20%.
# This is a qualitative illustration only; the lab values are unknown.

# %%
import numpy as np

from cheshire import Hwp, Imperfections, fringe_decompose, propagate

phis = np.linspace(0, 2 * np.pi, 128, endpoint=False)
right = [Hwp(np.radians(10))]
ideal = fringe_decompose(phis, [propagate([], right, p).d1_postselected for p in phis])
for imp in (Imperfections(visibility=0.9), Imperfections(visibility=0.8),
            Imperfections(arm_power_imbalance=0.1), Imperfections(preselect_leak_angle=np.radians(3))):
    f = fringe_decompose(phis, [propagate([], right, p, imp).d1_postselected for p in phis])
    print(imp, f"amplitude change {f.amplitude / ideal.amplitude - 1:+.1%}, dc change {f.dc / ideal.dc - 1:+.1%}")

# %% [markdown]
# With a leaky preselection even an empty interferometer shows weak fringes,
# like the residual modulation seen with absorbers alone.

# %%
leaky = Imperfections(preselect_leak_angle=np.radians(3))
f = fringe_decompose(phis, [propagate([], [], p, leaky).d1_postselected for p in phis])
print(f"empty, 3 deg leak: dc={f.dc:.4f} amplitude={f.amplitude:.4f}")

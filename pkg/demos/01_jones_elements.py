# %% [markdown]
# # The optical elements
#
# Every element in the two arms is a 2x2 Jones matrix acting on an (H, V)
# phasor.  The half-wave plate is a *reflection* of the polarization:
# H goes to cos(t) H + sin(t) V, V goes to sin(t) H - cos(t) V.

# %%
import numpy as np

from cheshire import jones

h, v = jones.amplitude(1, 0), jones.amplitude(0, 1)
t = np.radians(20)
print("hwp(20deg) on H:", np.round(jones.apply(jones.hwp(t), h), 4))
print("hwp(20deg) on V:", np.round(jones.apply(jones.hwp(t), v), 4))

# %% [markdown]
# A 37% absorber transmits 63% of the intensity, so the amplitude shrinks by
# sqrt(0.63).  The polarizer in front of detector 1 keeps only H.

# %%
a = jones.amplitude(1, 1)
print("|attenuated|^2 / |a|^2 =", jones.norm2(jones.apply(jones.attenuator(0.63), a)) / jones.norm2(a))
print("H polarizer on (1, 1):", jones.apply(jones.linear_polarizer("H"), a))

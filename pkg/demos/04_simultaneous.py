# %% [markdown]
# # Both at once
#
# A weak absorber in L moves only the DC level; a small rotation in R
# moves only the fringe amplitude.  Swapping the arms leaves both alone.

# %%
import numpy as np

from cheshire import Attenuate, Hwp, fringe_decompose, propagate

phis = np.linspace(0, 2 * np.pi, 128, endpoint=False)
eps, th = 0.05, 0.05


def fit(left, right):
    return fringe_decompose(phis, [propagate(left, right, p).d1_postselected for p in phis])


a = fit([Attenuate(1 - eps)], [Hwp(th)])
b = fit([Hwp(th)], [Attenuate(1 - eps)])
print(f"absorb L, rotate R: dc={a.dc:.5f} (1-eps={1 - eps})  amplitude={a.amplitude:.5f} (2 theta={2 * th})")
print(f"rotate L, absorb R: dc={b.dc:.5f}  amplitude={b.amplitude:.2e}")

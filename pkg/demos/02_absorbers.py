# %% [markdown]
# # Where is the photon?  Absorbers in each arm
#
# Detector 1 reads the post-selected H light, normalized so the empty
# interferometer gives 1.  An absorber in arm L lowers it in proportion to
# the transmission; one in arm R does nothing at all, at any phase.

# %%
import numpy as np

from cheshire import Attenuate, propagate

phis = np.linspace(0, 2 * np.pi, 8, endpoint=False)
for label, left, right in [
    ("37% in L ", [Attenuate(0.63)], []),
    ("100% in L", [Attenuate(0.0)], []),
    ("37% in R ", [], [Attenuate(0.63)]),
    ("100% in R", [], [Attenuate(0.0)]),
]:
    row = [propagate(left, right, p).d1_postselected for p in phis]
    print(label, np.round(row, 6))

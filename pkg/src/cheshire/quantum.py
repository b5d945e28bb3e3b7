"""Pre- and post-selected single photons on polarization (x) path space.

Basis order is (H.L, H.R, V.L, V.R): polarization is the slow index and
path the fast one, so a polarization operator ``P`` acting only in arm
``X`` is ``np.kron(P, path_projector(X))``.
"""
import numpy as np

from . import jones
from .interferometer import Attenuate, Hwp, arm_matrix, fringe_decompose

H_KET = np.array([1, 0], dtype=complex)
V_KET = np.array([0, 1], dtype=complex)
L_KET = np.array([1, 0], dtype=complex)
R_KET = np.array([0, 1], dtype=complex)

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)

# |<post|pre>|^2 for the empty interferometer; normalizes detection rates.
EMPTY_PROBABILITY = 0.25


class DegeneratePostselection(ValueError):
    """Raised when the pre- and post-selected states are (nearly) orthogonal."""


def _readonly(arr):
    arr = np.asarray(arr, dtype=complex)
    arr.flags.writeable = False
    return arr


def product_state(pol, path):
    return _readonly(np.kron(pol, path))


def preselected():
    """(|H>|L> + |V>|R>)/sqrt2."""
    return _readonly((np.kron(H_KET, L_KET) + np.kron(V_KET, R_KET)) / np.sqrt(2))


def postselected(axis="H"):
    """|axis>(|L> + |R>)/sqrt2; the default is what detector 1 accepts."""
    axis = str(axis).upper()
    if axis not in ("H", "V"):
        raise ValueError(f"post-selection axis must be 'H' or 'V', got {axis!r}")
    pol = H_KET if axis == "H" else V_KET
    return _readonly(np.kron(pol, (L_KET + R_KET) / np.sqrt(2)))


def path_projector(arm):
    """Pi_arm on the full 4-dim space (identity on polarization)."""
    return polarization_in_arm(np.eye(2), arm)


def polarization_in_arm(op, arm):
    arm = str(arm).upper()
    if arm not in ("L", "R"):
        raise ValueError(f"arm must be 'L' or 'R', got {arm!r}")
    ket = L_KET if arm == "L" else R_KET
    return _readonly(np.kron(np.asarray(op, dtype=complex), np.outer(ket, ket.conj())))


def flip_in_arm(arm):
    """sigma_x (the H<->V flip) confined to one arm."""
    return polarization_in_arm(SIGMA_X, arm)


def weak_value(a, pre, post):
    """<post|A|pre> / <post|pre>."""
    overlap = np.vdot(post, pre)
    if abs(overlap) <= 1e-12:
        raise DegeneratePostselection(
            f"pre/post-selected overlap {abs(overlap):.3g} is too small for a weak value"
        )
    return complex(np.vdot(post, np.asarray(a) @ pre) / overlap)


def cheshire_weak_values():
    """The four weak values that locate the photon and its polarization."""
    pre, post = preselected(), postselected()
    return {
        "Pi_L": weak_value(path_projector("L"), pre, post),
        "Pi_R": weak_value(path_projector("R"), pre, post),
        "sigma Pi_L": weak_value(flip_in_arm("L"), pre, post),
        "sigma Pi_R": weak_value(flip_in_arm("R"), pre, post),
    }


def evolution_operator(left=(), right=(), phase=0.0):
    """Pi_L (x) (elements_L . phase) + Pi_R (x) elements_R, generally non-unitary."""
    j_left = arm_matrix(left) @ jones.phase_shift(phase)
    return polarization_in_arm(j_left, "L") + polarization_in_arm(arm_matrix(right), "R")


def postselected_probability(left=(), right=(), phase=0.0, postselect="H"):
    """Detection probability of the post-selected state, empty interferometer = 1.

    Absorbers enter as sqrt(T) amplitude factors; photons they remove never
    reach the post-selection and simply drop out of the rate.
    """
    m = evolution_operator(left, right, phase)
    amp = np.vdot(postselected(postselect), m @ preselected())
    return float(abs(amp) ** 2 / EMPTY_PROBABILITY)


def weak_response_check(epsilon, theta, n_phase=128):
    """Finite-difference responses of the post-selected rate to weak couplings.

    Returns a dict with ``absorb_L``/``absorb_R`` = (1 - P(T_X = 1-eps))/eps
    and ``rotate_L``/``rotate_R`` = fringe amplitude(theta_X = theta)/(2 theta).
    As eps, theta -> 0 these approach Re<Pi_L>_w, Re<Pi_R>_w,
    |<sigma Pi_L>_w| and |<sigma Pi_R>_w|.
    """
    if not 0 < epsilon <= 0.1:
        raise ValueError(f"epsilon must lie in (0, 0.1], got {epsilon!r}")
    if not 0 < theta <= 0.1:
        raise ValueError(f"theta must lie in (0, 0.1], got {theta!r}")

    phis = np.linspace(0, 2 * np.pi, n_phase, endpoint=False)

    def fringe_amplitude(left, right):
        rates = [postselected_probability(left, right, p) for p in phis]
        return fringe_decompose(phis, rates).amplitude

    absorber = [Attenuate(1 - epsilon)]
    plate = [Hwp(theta)]
    return {
        "absorb_L": (1 - postselected_probability(absorber, ())) / epsilon,
        "absorb_R": (1 - postselected_probability((), absorber)) / epsilon,
        "rotate_L": fringe_amplitude(plate, ()) / (2 * theta),
        "rotate_R": fringe_amplitude((), plate) / (2 * theta),
    }

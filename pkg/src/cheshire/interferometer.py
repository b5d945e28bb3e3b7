"""Classical-wave model of the two-arm polarization interferometer.

A Wollaston prism prepares H light in arm L and V light in arm R.  Each arm
carries an ordered list of elements, the arms recombine on a 50/50
non-polarizing beamsplitter with out1 = (A_L + A_R)/sqrt2 and
out2 = (A_L - A_R)/sqrt2, and detector 1 sits behind a linear polarizer.

All intensities are divided by the detector-1 signal of the empty, ideal
interferometer, so that reference reads 1 and constructive fringes reach 4.
"""
from dataclasses import dataclass
from typing import NamedTuple, Sequence, Union

import numpy as np

from . import jones

# Post-selected detector-1 intensity of the empty ideal interferometer:
# |(1/sqrt2)(1/sqrt2)|^2 for the H component of out1.
EMPTY_D1 = 0.25


@dataclass(frozen=True)
class Attenuate:
    T: float

    def __post_init__(self):
        jones.attenuator(self.T)

    def matrix(self):
        return jones.attenuator(self.T)


@dataclass(frozen=True)
class Hwp:
    theta_eff: float

    def __post_init__(self):
        jones.hwp(self.theta_eff)

    def matrix(self):
        return jones.hwp(self.theta_eff)


@dataclass(frozen=True)
class PhaseShift:
    phi: float

    def __post_init__(self):
        jones.phase_shift(self.phi)

    def matrix(self):
        return jones.phase_shift(self.phi)


OpticalElement = Union[Attenuate, Hwp, PhaseShift]
ArmConfig = Sequence[OpticalElement]


@dataclass(frozen=True)
class Imperfections:
    """Static deviations from the ideal apparatus.

    visibility scales the L-R interference cross term, arm_power_imbalance
    ``x`` gives amplitude weights sqrt((1+x)/2) and sqrt((1-x)/2) to arms L
    and R, and preselect_leak_angle ``eps`` turns the prepared polarizations
    into (cos eps, sin eps) in L and (-sin eps, cos eps) in R.
    """

    visibility: float = 1.0
    arm_power_imbalance: float = 0.0
    preselect_leak_angle: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.visibility <= 1.0:
            raise ValueError(f"visibility must lie in [0, 1], got {self.visibility!r}")
        if not -1.0 <= self.arm_power_imbalance <= 1.0:
            raise ValueError(
                f"arm power imbalance must lie in [-1, 1], got {self.arm_power_imbalance!r}"
            )
        if not np.isfinite(self.preselect_leak_angle):
            raise ValueError("leak angle must be finite")

    @property
    def is_ideal(self):
        return self == IDEAL


IDEAL = Imperfections()


class DetectorReadout(NamedTuple):
    d1_postselected: float
    d1_total: float
    d2_total: float


class FringeFit(NamedTuple):
    dc: float
    amplitude: float
    phase_offset: float
    residual: float


def arm_matrix(elements):
    """Product of the element matrices, first element acting first."""
    m = np.eye(2, dtype=complex)
    for el in elements:
        m = el.matrix() @ m
    return m


def preselected_amplitudes(imperfections=IDEAL):
    x = imperfections.arm_power_imbalance
    eps = imperfections.preselect_leak_angle
    w_l, w_r = np.sqrt((1 + x) / 2), np.sqrt((1 - x) / 2)
    a_l = w_l * np.array([np.cos(eps), np.sin(eps)], dtype=complex)
    a_r = w_r * np.array([-np.sin(eps), np.cos(eps)], dtype=complex)
    return a_l, a_r


def input_power(imperfections=IDEAL):
    """Total injected power in detector-normalized units (4 for any setting)."""
    a_l, a_r = preselected_amplitudes(imperfections)
    return (jones.norm2(a_l) + jones.norm2(a_r)) / EMPTY_D1


def _port_intensity(a, b, sign, visibility):
    # Mixing full and no-overlap intensities keeps every term non-negative.
    coherent = np.abs(a + sign * b) ** 2 / 2
    incoherent = (np.abs(a) ** 2 + np.abs(b) ** 2) / 2
    return visibility * coherent + (1 - visibility) * incoherent


def propagate(left=(), right=(), phase=0.0, imperfections=IDEAL, postselect="H"):
    """Detector intensities for one relative phase.

    Parameters
    ----------
    left, right : sequence of Attenuate, Hwp or PhaseShift
        Elements in each arm, in beam order.
    phase : float
        Phase shift (radians) applied to arm L ahead of its elements.
    imperfections : Imperfections
    postselect : {"H", "V"}
        Axis of the polarizer in front of detector 1.

    Returns
    -------
    DetectorReadout
    """
    axis = 0 if str(postselect).upper() == "H" else 1
    jones.linear_polarizer(postselect)  # validates the axis
    a_l, a_r = preselected_amplitudes(imperfections)
    a_l = arm_matrix(left) @ (jones.phase_shift(phase) @ a_l)
    a_r = arm_matrix(right) @ a_r
    vis = imperfections.visibility
    out1 = _port_intensity(a_l, a_r, +1, vis) / EMPTY_D1
    out2 = _port_intensity(a_l, a_r, -1, vis) / EMPTY_D1
    return DetectorReadout(float(out1[axis]), float(out1.sum()), float(out2.sum()))


def sweep(left, right, phases, imperfections=IDEAL, postselect="H"):
    """Evaluate :func:`propagate` over ``phases``; returns an (n, 3) array."""
    return np.array(
        [propagate(left, right, p, imperfections, postselect) for p in phases],
        dtype=float,
    ).reshape(-1, 3)


def closed_form_intensity(T_L, T_R, theta_L, theta_R, phi):
    """T_L cos^2 th_L + T_R sin^2 th_R + 2 cos(phi) sqrt(T_L T_R) cos th_L sin th_R."""
    for T in (T_L, T_R):
        if not 0.0 <= T <= 1.0:
            raise ValueError(f"transmission must lie in [0, 1], got {T!r}")
    return (
        T_L * np.cos(theta_L) ** 2
        + T_R * np.sin(theta_R) ** 2
        + 2 * np.cos(phi) * np.sqrt(T_L * T_R) * np.cos(theta_L) * np.sin(theta_R)
    )


def fringe_decompose(phi, signal):
    """Least-squares fit of ``signal`` to dc + amplitude * cos(phi - phase_offset).

    ``phi`` must be a uniform grid of at least 8 samples covering a full
    2*pi period (the grid step counts toward the coverage, so
    ``linspace(0, 2*pi, n, endpoint=False)`` qualifies).
    """
    phi = np.asarray(phi, dtype=float)
    signal = np.asarray(signal, dtype=float)
    if phi.ndim != 1 or phi.shape != signal.shape:
        raise ValueError("phi and signal must be 1-d arrays of equal length")
    n = phi.size
    if n < 8:
        raise ValueError(f"need at least 8 samples, got {n}")
    step = np.diff(phi)
    if np.any(step <= 0) or np.ptp(step) > 1e-9 * max(1.0, abs(step.mean())):
        raise ValueError("phase samples must be strictly increasing and uniform")
    if (phi[-1] - phi[0]) * n / (n - 1) < 2 * np.pi - 1e-9:
        raise ValueError("phase sweep must cover a full 2*pi period")

    design = np.column_stack([np.ones(n), np.cos(phi), np.sin(phi)])
    (dc, a, b), *_ = np.linalg.lstsq(design, signal, rcond=None)
    amplitude = float(np.hypot(a, b))
    offset = float(np.arctan2(b, a)) if amplitude > 1e-15 else 0.0
    resid = signal - design @ np.array([dc, a, b])
    return FringeFit(float(dc), amplitude, offset, float(np.sqrt(np.mean(resid**2))))

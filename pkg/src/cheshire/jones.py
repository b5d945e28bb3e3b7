"""Jones vectors and matrices for the two-arm interferometer.

Amplitudes are complex phasors in the (H, V) linear basis; the real field
E0 cos(wt + phi) is carried as E0 exp(i phi).  Every array returned here is
read-only.
"""
import numpy as np

H = "H"
V = "V"


def _frozen(arr):
    arr = np.asarray(arr, dtype=complex)
    if not np.all(np.isfinite(arr)):
        raise ValueError("non-finite Jones entry")
    arr.flags.writeable = False
    return arr


def amplitude(h, v):
    """Polarization amplitude ``[h, v]``."""
    return _frozen([h, v])


def matrix(m_hh, m_hv, m_vh, m_vv):
    return _frozen([[m_hh, m_hv], [m_vh, m_vv]])


def identity():
    return _frozen(np.eye(2))


def apply(m, a):
    """Act with Jones matrix ``m`` on amplitude ``a``."""
    return _frozen(np.asarray(m) @ np.asarray(a))


def norm2(a):
    """Intensity |h|^2 + |v|^2 of an amplitude."""
    a = np.asarray(a)
    return float(np.real(np.vdot(a, a)))


def attenuator(T):
    """Polarization-independent absorber with intensity transmission ``T``.

    The amplitude is scaled by sqrt(T), so ``T=0.63`` is a 37% absorber.
    """
    T = float(T)
    if not 0.0 <= T <= 1.0:
        raise ValueError(f"transmission must lie in [0, 1], got {T!r}")
    s = np.sqrt(T)
    return matrix(s, 0, 0, s)


def hwp(theta_eff):
    """Half-wave plate with fast axis at ``theta_eff / 2`` from H.

    H goes to cos(theta_eff) H + sin(theta_eff) V and V goes to
    sin(theta_eff) H - cos(theta_eff) V, i.e. a reflection of the
    polarization, not a rotation.
    """
    theta_eff = float(theta_eff)
    if not np.isfinite(theta_eff):
        raise ValueError("half-wave plate angle must be finite")
    c, s = np.cos(theta_eff), np.sin(theta_eff)
    return matrix(c, s, s, -c)


def phase_shift(phi):
    phi = float(phi)
    if not np.isfinite(phi):
        raise ValueError("phase must be finite")
    e = np.exp(1j * phi)
    return matrix(e, 0, 0, e)


def linear_polarizer(axis):
    """Projector onto the H or V axis."""
    axis = str(axis).upper()
    if axis == H:
        return matrix(1, 0, 0, 0)
    if axis == V:
        return matrix(0, 0, 0, 1)
    raise ValueError(f"polarizer axis must be 'H' or 'V', got {axis!r}")

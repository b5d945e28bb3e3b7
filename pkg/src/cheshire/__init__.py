"""Classical and quantum models of a polarization "Cheshire cat" interferometer."""
from .interferometer import (
    IDEAL,
    Attenuate,
    DetectorReadout,
    Hwp,
    Imperfections,
    PhaseShift,
    closed_form_intensity,
    fringe_decompose,
    propagate,
)
from .quantum import (
    cheshire_weak_values,
    postselected,
    postselected_probability,
    preselected,
    weak_response_check,
    weak_value,
)
from .scenario import (
    ParseError,
    Scenario,
    SweepResult,
    format_scenario,
    parse_scenario,
    read_csv,
    run_sweep,
    write_csv,
)

__version__ = "0.1.0"

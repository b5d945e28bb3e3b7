"""Text scenarios, phase sweeps and the CSV result format.

Scenario grammar (one directive per line, ``#`` starts a comment, keywords
are case-insensitive, angles are radians unless suffixed ``deg``)::

    arm L: attenuate 0.63        # intensity transmission in [0, 1]
    arm R: hwp 10deg             # half-wave plate, effective angle
    arm L: phase 0.5             # extra fixed phase
    imperfect: visibility 0.9
    imperfect: imbalance 0.05
    imperfect: leak 1deg
    sweep: 0 360deg 128
    postselect: H
    model: both                  # classical | quantum | both

Arm directives append elements in beam order; every other directive
overwrites the previous value.
"""
import dataclasses
import io
import math
import re
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .interferometer import IDEAL, Attenuate, Hwp, Imperfections, PhaseShift, sweep
from .quantum import postselected_probability

CLASSICAL = "classical"
QUANTUM = "quantum"
CSV_COLUMNS = ("phi", "d1_postselected", "d1_total", "d2_total")


class ParseError(ValueError):
    def __init__(self, line, message):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


@dataclass(frozen=True)
class Sweep:
    start: float = 0.0
    end: float = 2 * math.pi
    steps: int = 128

    def __post_init__(self):
        if int(self.steps) != self.steps or self.steps < 2:
            raise ValueError(f"sweep needs an integer number of steps >= 2, got {self.steps!r}")
        if not self.end > self.start:
            raise ValueError("sweep end must exceed its start")

    def phases(self):
        k = np.arange(self.steps)
        return self.start + (self.end - self.start) * k / self.steps


@dataclass(frozen=True)
class Scenario:
    left: tuple = ()
    right: tuple = ()
    imperfections: Imperfections = IDEAL
    sweep: Sweep = Sweep()
    postselect: str = "H"
    models: frozenset = frozenset({CLASSICAL, QUANTUM})


@dataclass(eq=False)
class SweepResult:
    phi: np.ndarray
    d1_postselected: np.ndarray
    d1_total: np.ndarray
    d2_total: np.ndarray
    quantum_d1: Optional[np.ndarray] = None

    def __len__(self):
        return len(self.phi)

    def columns(self):
        cols = {name: getattr(self, name) for name in CSV_COLUMNS}
        if self.quantum_d1 is not None:
            cols["quantum_d1"] = self.quantum_d1
        return cols

    def rows(self):
        cols = self.columns()
        for i in range(len(self)):
            yield {k: float(v[i]) for k, v in cols.items()}


# -- parsing ---------------------------------------------------------------

_NUMBER = r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_NUMBER_RE = re.compile(rf"^{_NUMBER}$")
_ANGLE_RE = re.compile(rf"^({_NUMBER})(deg)?$", re.IGNORECASE)
_DIRECTIVE_RE = re.compile(
    r"^(?:arm\s+(?P<arm>\S+)|(?P<key>imperfect|sweep|postselect|model))\s*:(?P<rest>.*)$",
    re.IGNORECASE,
)


def _number(tok, what):
    if not _NUMBER_RE.match(tok):
        raise ValueError(f"malformed number {tok!r} for {what}")
    x = float(tok)
    if not math.isfinite(x):
        raise ValueError(f"{what} must be finite, got {tok!r}")
    return x


def _angle(tok, what):
    m = _ANGLE_RE.match(tok)
    if not m:
        raise ValueError(f"malformed angle {tok!r} for {what}")
    x = _number(m.group(1), what)
    return math.radians(x) if m.group(2) else x


def _expect(args, n, usage):
    if len(args) != n:
        raise ValueError(f"expected '{usage}'")


class _Builder:
    def __init__(self, base=None):
        base = base or Scenario()
        self.arms = {"L": list(base.left), "R": list(base.right)}
        self.imperfect = dataclasses.asdict(base.imperfections)
        self.sweep = base.sweep
        self.postselect = base.postselect
        self.models = base.models

    def directive(self, line):
        m = _DIRECTIVE_RE.match(line)
        if not m:
            word = line.split(":")[0].strip() or line
            raise ValueError(f"unknown directive {word!r}")
        args = m.group("rest").split()
        if m.group("arm") is not None:
            self._arm(m.group("arm").upper(), args)
            return
        key = m.group("key").lower()
        getattr(self, "_" + key)(args)

    def _arm(self, arm, args):
        if arm not in self.arms:
            raise ValueError(f"arm must be L or R, got {arm!r}")
        if not args:
            raise ValueError("arm directive needs an element")
        kind = args[0].lower()
        if kind == "attenuate":
            _expect(args, 2, "attenuate <transmission>")
            T = _number(args[1], "transmission")
            if not 0.0 <= T <= 1.0:
                raise ValueError(f"transmission {T!r} outside [0, 1]")
            el = Attenuate(T)
        elif kind == "hwp":
            _expect(args, 2, "hwp <angle>")
            el = Hwp(_angle(args[1], "hwp angle"))
        elif kind == "phase":
            _expect(args, 2, "phase <angle>")
            el = PhaseShift(_angle(args[1], "phase"))
        else:
            raise ValueError(f"unknown element {args[0]!r}")
        self.arms[arm].append(el)

    def _imperfect(self, args):
        _expect(args, 2, "imperfect: visibility|imbalance|leak <value>")
        kind = args[0].lower()
        if kind == "visibility":
            self.imperfect["visibility"] = _number(args[1], "visibility")
        elif kind == "imbalance":
            self.imperfect["arm_power_imbalance"] = _number(args[1], "imbalance")
        elif kind == "leak":
            self.imperfect["preselect_leak_angle"] = _angle(args[1], "leak angle")
        else:
            raise ValueError(f"unknown imperfection {args[0]!r}")
        Imperfections(**self.imperfect)

    def _sweep(self, args):
        _expect(args, 3, "sweep: <start> <end> <steps>")
        start, end = _angle(args[0], "sweep start"), _angle(args[1], "sweep end")
        if not re.match(r"^\+?\d+$", args[2]):
            raise ValueError(f"sweep steps must be a positive integer, got {args[2]!r}")
        self.sweep = Sweep(start, end, int(args[2]))

    def _postselect(self, args):
        _expect(args, 1, "postselect: H|V")
        axis = args[0].upper()
        if axis not in ("H", "V"):
            raise ValueError(f"post-selection axis must be H or V, got {args[0]!r}")
        self.postselect = axis

    def _model(self, args):
        _expect(args, 1, "model: classical|quantum|both")
        kind = args[0].lower()
        choices = {
            CLASSICAL: frozenset({CLASSICAL}),
            QUANTUM: frozenset({QUANTUM}),
            "both": frozenset({CLASSICAL, QUANTUM}),
        }
        if kind not in choices:
            raise ValueError(f"unknown model {args[0]!r}")
        self.models = choices[kind]

    def build(self):
        return Scenario(
            left=tuple(self.arms["L"]),
            right=tuple(self.arms["R"]),
            imperfections=Imperfections(**self.imperfect),
            sweep=self.sweep,
            postselect=self.postselect,
            models=self.models,
        )


def _feed(builder, lines, first_line=1):
    for lineno, raw in enumerate(lines, start=first_line):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            builder.directive(line)
        except ParseError:
            raise
        except (ValueError, TypeError, OverflowError) as exc:
            raise ParseError(lineno, str(exc)) from None


def parse_scenario(text):
    """Parse scenario text (a string or a readable text stream)."""
    if hasattr(text, "read"):
        text = text.read()
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(1, f"scenario is not valid UTF-8: {exc}") from None
    builder = _Builder()
    _feed(builder, text.splitlines())
    return builder.build()


def apply_overrides(scenario, overrides):
    """Apply ``key=value`` overrides, e.g. ``imperfect=visibility 0.9``.

    Each override behaves exactly like appending ``key: value`` to the
    scenario text.  Errors report the 1-based index of the override.
    """
    builder = _Builder(scenario)
    lines = []
    for i, item in enumerate(overrides, start=1):
        if "=" not in item:
            raise ParseError(i, f"override {item!r} is not of the form key=value")
        key, value = item.split("=", 1)
        lines.append(f"{key}: {value}")
    _feed(builder, lines)
    return builder.build()


def format_scenario(s):
    """Canonical scenario text; re-parses to an identical Scenario."""
    out = []
    for arm, elements in (("L", s.left), ("R", s.right)):
        for el in elements:
            if isinstance(el, Attenuate):
                out.append(f"arm {arm}: attenuate {el.T!r}")
            elif isinstance(el, Hwp):
                out.append(f"arm {arm}: hwp {el.theta_eff!r}")
            else:
                out.append(f"arm {arm}: phase {el.phi!r}")
    imp = s.imperfections
    out.append(f"imperfect: visibility {imp.visibility!r}")
    out.append(f"imperfect: imbalance {imp.arm_power_imbalance!r}")
    out.append(f"imperfect: leak {imp.preselect_leak_angle!r}")
    out.append(f"sweep: {s.sweep.start!r} {s.sweep.end!r} {s.sweep.steps}")
    out.append(f"postselect: {s.postselect}")
    model = "both" if len(s.models) == 2 else next(iter(s.models))
    out.append(f"model: {model}")
    return "\n".join(out) + "\n"


# -- sweeps and CSV -----------------------------------------------------------

def run_sweep(s):
    """Evaluate the scenario at each phase of its sweep, in phase order.

    The classical columns are always filled; ``quantum_d1`` only when the
    quantum model is enabled.  The quantum model ignores imperfections.
    """
    phis = s.sweep.phases()
    classical = sweep(s.left, s.right, phis, s.imperfections, s.postselect)
    quantum = None
    if QUANTUM in s.models:
        quantum = np.array(
            [postselected_probability(s.left, s.right, p, s.postselect) for p in phis]
        )
    return SweepResult(phis, classical[:, 0], classical[:, 1], classical[:, 2], quantum)


def format_csv(r):
    cols = r.columns()
    lines = [",".join(cols)]
    for row in zip(*cols.values()):
        lines.append(",".join(format(float(x), ".17g") for x in row))
    return "\n".join(lines) + "\n"


def write_csv(r, sink):
    """Write ``r`` to a binary stream as ``\\n``-terminated CSV."""
    sink.write(format_csv(r).encode("ascii"))


def read_csv(source):
    """Inverse of :func:`write_csv`; accepts a binary/text stream or a string."""
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, bytes):
        source = source.decode("ascii")
    lines = io.StringIO(source).read().splitlines()
    header = lines[0].split(",")
    if tuple(header[:4]) != CSV_COLUMNS or header[4:] not in ([], ["quantum_d1"]):
        raise ValueError(f"unexpected CSV header {lines[0]!r}")
    data = np.array([[float(x) for x in ln.split(",")] for ln in lines[1:] if ln], dtype=float)
    data = data.reshape(-1, len(header))
    quantum = data[:, 4] if len(header) == 5 else None
    return SweepResult(data[:, 0], data[:, 1], data[:, 2], data[:, 3], quantum)

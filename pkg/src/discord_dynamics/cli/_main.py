from __future__ import annotations

import logging
import sys
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable

import click

from discord_dynamics import __version__
from discord_dynamics._errors import InvalidStateError, OptimizerError
from discord_dynamics.channels import ChannelKind, PauliChannel, evolve_c
from discord_dynamics.cli._format import (
    read_csv_text,
    to_csv_text,
    to_json_text,
)
from discord_dynamics.cli._verify import run_verification
from discord_dynamics.correlations import (
    Method,
    classical_bell_closed,
    discord_bell_closed,
    discord_numeric,
    evaluate_at,
    mutual_information,
    mutual_information_bell,
    sqd_bell_closed,
    sqd_numeric,
)
from discord_dynamics.dynamics import (
    DEFAULT_THRESHOLD,
    SweepConfig,
    frame_series,
    series_columns,
    strongest_kink,
    sweep,
    trajectory_frame,
)
from discord_dynamics.measurements import BlochDirection
from discord_dynamics.states import BellDiagonalState, to_density_matrix

logger = logging.getLogger(__name__)

ENVVAR_PREFIX = "DISCORD_DYNAMICS"
EXIT_VERIFY_FAILED = 1
EXIT_OPTIMIZER_FAILED = 3
KINK_MIN_STEPS = 5


class Subcommand(Enum):
    SWEEP = "sweep"
    POINT = "point"
    KINK = "kink"
    VERIFY = "verify"


class FloatList(click.ParamType):
    """Comma-separated list of non-negative floats."""

    name = "floats"

    def convert(self, value, param, ctx) -> tuple[float, ...]:
        if isinstance(value, tuple):
            return value
        try:
            out = tuple(float(v) for v in str(value).split(","))
        except ValueError:
            self.fail(f"{value!r} is not a list of numbers.", param, ctx)
        if any(not v >= 0 for v in out):
            self.fail(f"strengths must be non-negative: {value!r}", param, ctx)
        return out


@dataclass(frozen=True)
class RunSpec:
    """Validated flags of one command-line invocation."""

    subcommand: Subcommand
    state: BellDiagonalState
    channel: PauliChannel
    x_values: tuple[float, ...]
    method: Method
    t_max: float = 2.0
    steps: int = 401

    def __post_init__(self):
        if self.subcommand is Subcommand.KINK and self.steps < KINK_MIN_STEPS:
            raise click.UsageError(
                f"Kink detection needs --steps >= {KINK_MIN_STEPS}, got {self.steps}."
            )
        logger.info("%s: c = %s, %s", self.subcommand.value, self.state, self.channel)

    @classmethod
    def from_flags(
        cls,
        subcommand: Subcommand,
        c1: float,
        c2: float,
        c3: float,
        channel: str,
        x_values: tuple[float, ...],
        method: str,
        **kwargs,
    ) -> RunSpec:
        try:
            state = BellDiagonalState(c1, c2, c3)
        except InvalidStateError as e:
            raise click.UsageError(str(e)) from None
        return cls(
            subcommand=subcommand,
            state=state,
            channel=PauliChannel(ChannelKind(channel)),
            x_values=x_values,
            method=Method(method),
            **kwargs,
        )

    def to_sweep_config(self) -> SweepConfig:
        try:
            return SweepConfig(
                initial=self.state,
                channel=self.channel,
                x_values=self.x_values,
                t_max=self.t_max,
                steps=self.steps,
                method=self.method,
            )
        except ValueError as e:
            raise click.UsageError(str(e)) from None


def _state_options(func: Callable) -> Callable:
    options = [
        click.option("--c1", type=float, default=1.0, show_default=True),
        click.option("--c2", type=float, default=-0.6, show_default=True),
        click.option("--c3", type=float, default=0.6, show_default=True),
        click.option(
            "--channel",
            type=click.Choice([k.value for k in ChannelKind]),
            default=ChannelKind.PHASE_FLIP.value,
            show_default=True,
            help="Local Pauli channel acting on both qubits.",
        ),
        click.option(
            "--method",
            type=click.Choice([m.value for m in Method]),
            default=Method.CLOSED_FORM.value,
            show_default=True,
            help="Closed forms (Bell-diagonal) or numeric minimization.",
        ),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _sweep_options(func: Callable) -> Callable:
    options = [
        click.option(
            "--x",
            "x_values",
            type=FloatList(),
            default="0.5",
            show_default=True,
            help="Comma-separated weak measurement strengths.",
        ),
        click.option(
            "--t-max",
            type=click.FloatRange(min=0, min_open=True),
            default=2.0,
            show_default=True,
            help="End of the gamma*t grid.",
        ),
        click.option(
            "--steps",
            type=click.IntRange(min=2),
            default=401,
            show_default=True,
            help="Number of grid points, endpoints included.",
        ),
    ]
    for option in reversed(options):
        func = option(func)
    return _state_options(func)


_out_option = click.option(
    "--out",
    type=click.Path(dir_okay=False, writable=True),
    default=None,
    help="Output file (standard output if omitted).",
)


def _write(text: str, out: str | None) -> None:
    with click.open_file(out or "-", "w") as f:
        f.write(text)


def _run_sweep(spec: RunSpec):
    try:
        return sweep(spec.to_sweep_config())
    except OptimizerError as e:
        click.echo(f"Error: {e}", err=True)
        sys.exit(EXIT_OPTIMIZER_FAILED)


@click.group(context_settings={"auto_envvar_prefix": ENVVAR_PREFIX})
@click.version_option(__version__)
@click.option(
    "-v", "--verbose", count=True, help="Log progress to stderr (-vv: debug)."
)
def main(verbose: int):
    """Quantum discord and super quantum discord under local Pauli noise."""
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbose, logging.DEBUG)
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )


@main.command("sweep")
@_sweep_options
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["csv", "json"]),
    default="csv",
    show_default=True,
)
@_out_option
def cmd_sweep(c1, c2, c3, channel, method, x_values, t_max, steps, fmt, out):
    """Tabulate I, C, D and D_w over a gamma*t grid."""
    spec = RunSpec.from_flags(
        Subcommand.SWEEP,
        c1,
        c2,
        c3,
        channel,
        x_values,
        method,
        t_max=t_max,
        steps=steps,
    )
    points = _run_sweep(spec)
    if fmt == "csv":
        text = to_csv_text(trajectory_frame(points))
    else:
        text = to_json_text([p.to_json_dict() for p in points])
    _write(text, out)


def _point_payload(
    state: BellDiagonalState, method: Method, x: float
) -> dict[str, Any]:
    if method is Method.CLOSED_FORM:
        return {
            "mutual_info": mutual_information_bell(state),
            "classical": classical_bell_closed(state).value,
            "discord": discord_bell_closed(state).value,
            "sqd": sqd_bell_closed(state, x).value,
            "method": method.value,
        }
    rho = to_density_matrix(state)
    mutual_info = mutual_information(rho)
    discord = discord_numeric(rho)
    return {
        "mutual_info": mutual_info,
        "classical": mutual_info - discord.value,
        "discord": discord.value,
        "sqd": sqd_numeric(rho, x).value,
        "method": method.value,
        "argmin_theta_phi": [discord.argmin.theta, discord.argmin.phi],
    }


def _fixed_basis_payload(
    state: BellDiagonalState, x: float, theta: float, phi: float
) -> dict[str, Any]:
    rho = to_density_matrix(state)
    evaluation = evaluate_at(rho, BlochDirection.from_angles(theta, phi), x)
    return {
        "mutual_info": mutual_information(rho),
        **evaluation.to_json_dict(),
        "method": "fixed",
    }


@main.command("point")
@_state_options
@click.option(
    "--x",
    type=click.FloatRange(min=0),
    default=0.5,
    show_default=True,
    help="Weak measurement strength.",
)
@click.option(
    "--gamma-t",
    type=click.FloatRange(min=0),
    default=0.0,
    show_default=True,
    help="Scaled time at which the state is evaluated.",
)
@click.option("--theta", type=float, default=None, help="Fixed polar angle on B.")
@click.option("--phi", type=float, default=None, help="Fixed azimuthal angle on B.")
@_out_option
def cmd_point(c1, c2, c3, channel, method, x, gamma_t, theta, phi, out):
    """Evaluate all measures at a single gamma*t."""
    if (theta is None) != (phi is None):
        raise click.UsageError("--theta and --phi must be given together.")
    spec = RunSpec.from_flags(Subcommand.POINT, c1, c2, c3, channel, (x,), method)
    state = evolve_c(spec.state, spec.channel, gamma_t / spec.channel.gamma)
    try:
        if theta is not None:
            payload = _fixed_basis_payload(state, x, theta, phi)
        else:
            payload = _point_payload(state, spec.method, x)
    except OptimizerError as e:
        click.echo(f"Error: {e}", err=True)
        sys.exit(EXIT_OPTIMIZER_FAILED)
    payload = {"gamma_t": gamma_t, "x": x, "c": list(state.coefficients), **payload}
    _write(to_json_text(payload), out)


@main.command("kink")
@_sweep_options
@click.option(
    "--threshold",
    type=click.FloatRange(min=0),
    default=DEFAULT_THRESHOLD,
    show_default=True,
    help="Slope jump (bits per unit gamma*t) above which a kink is flagged.",
)
@_out_option
def cmd_kink(c1, c2, c3, channel, method, x_values, t_max, steps, threshold, out):
    """Report the strongest slope jump of C, D and every D_w series."""
    spec = RunSpec.from_flags(
        Subcommand.KINK, c1, c2, c3, channel, x_values, method, t_max=t_max, steps=steps
    )
    # detect on exactly the values a CSV reader would see
    frame = read_csv_text(to_csv_text(trajectory_frame(_run_sweep(spec))))
    reports = [
        strongest_kink(frame_series(frame, column), threshold, name=column)
        for column in series_columns(frame)
    ]
    _write(to_json_text([r.to_json_dict() for r in reports]), out)


@main.command("verify")
@click.option("--samples", type=click.IntRange(min=1), default=100, show_default=True)
@click.option("--seed", type=int, default=42, show_default=True)
@_out_option
def cmd_verify(samples, seed, out):
    """Run the closed-form, channel and limit consistency checks."""
    try:
        report = run_verification(samples=samples, seed=seed)
    except OptimizerError as e:
        click.echo(f"Error: {e}", err=True)
        sys.exit(EXIT_OPTIMIZER_FAILED)
    _write(report.render(), out)
    if not report.passed:
        sys.exit(EXIT_VERIFY_FAILED)

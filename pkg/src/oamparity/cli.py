"""oamparity CLI - signals, sensitivities, figure data and self-validation."""

import math
import sys
from collections.abc import Iterator, Sequence
from contextlib import contextmanager
from pathlib import Path
from typing import Annotated, Optional

import click
import typer
from pydantic import ValidationError
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from oamparity import __version__
from oamparity.config.settings import get_settings
from oamparity.errors import OamParityError, ParameterError
from oamparity.flows import (
    FigureId,
    SweepResult,
    SweepSpec,
    run_optimal_sweep,
    run_sensitivity_sweep,
    run_signal_sweep,
    run_validation,
    write_figure,
)
from oamparity.interferometer import NoiseConfig, Variant
from oamparity.observability import setup_logging
from oamparity.tools import render_csv, write_csv

app = typer.Typer(
    name="oamparity",
    help="OAM-enhanced angular displacement estimation with squeezed light and parity detection",
    add_completion=False,
)

console = Console()
err_console = Console(stderr=True)

EXIT_PARAMETER_ERROR = 1
EXIT_VALIDATION_FAILED = 2

# Newer typer releases raise exceptions from a vendored click, so collect both families.
USAGE_ERRORS: tuple[type[Exception], ...] = tuple(
    {click.ClickException}
    | {cls for cls in typer.BadParameter.__mro__ if cls.__name__ == "ClickException"}
)
ABORTS: tuple[type[BaseException], ...] = tuple({click.Abort, typer.Abort})

ANGLE_COLUMNS = frozenset({"phi", "delta_phi", "phi_opt", "delta_phi_min", "hl", "snl"})

# Shared options
VariantOpt = Annotated[Variant, typer.Option("--variant", help="Noise model")]
ROpt = Annotated[Optional[float], typer.Option("--r", help="Squeezing factor r")]
NbarOpt = Annotated[Optional[float], typer.Option("--nbar", help="Mean photon number N (instead of --r)")]
EllOpt = Annotated[int, typer.Option("--ell", help="OAM quantum number")]
PhiMinOpt = Annotated[Optional[float], typer.Option("--phi-min", help="Lower phi bound [default: 0]")]
PhiMaxOpt = Annotated[
    Optional[float], typer.Option("--phi-max", help="Upper phi bound [default: pi/(2 ell)]")
]
PhiStepsOpt = Annotated[int, typer.Option("--phi-steps", help="Number of phi grid points")]
LossOpt = Annotated[Optional[float], typer.Option("--loss", help="Photon loss L (variant loss)")]
DarkOpt = Annotated[Optional[float], typer.Option("--dark", help="Dark-count rate d (variant dark)")]
NthOpt = Annotated[Optional[float], typer.Option("--nth", help="Thermal occupation (variant thermal)")]
TransmissivityOpt = Annotated[
    Optional[float],
    typer.Option("--transmissivity", help="Virtual beam-splitter transmissivity T (variant thermal)"),
]
OutOpt = Annotated[Optional[Path], typer.Option("--out", "-o", help="Output CSV file [default: stdout]")]
JobsOpt = Annotated[Optional[int], typer.Option("--jobs", "-j", help="Worker threads for the sweep")]
DegreesOpt = Annotated[bool, typer.Option("--degrees", help="Read and write angles in degrees")]


def version_callback(value: bool) -> None:
    """Print version and exit."""
    if value:
        console.print(f"[bold]oamparity[/bold] version {__version__}")
        raise typer.Exit()


@app.callback()
def main(
    version: Optional[bool] = typer.Option(
        None,
        "--version",
        "-v",
        callback=version_callback,
        is_eager=True,
        help="Show version and exit",
    ),
) -> None:
    """OAM-enhanced angular displacement estimation with squeezed light and parity detection."""
    setup_logging()


def _describe(exc: Exception) -> str:
    if isinstance(exc, ValidationError):
        return "; ".join(
            f"{'.'.join(str(part) for part in error['loc']) or 'input'}: {error['msg']}"
            for error in exc.errors()
        )
    return str(exc)


@contextmanager
def _parameter_errors() -> Iterator[None]:
    """Turn invalid parameters into a message on stderr and exit code 1."""
    try:
        yield
    except (ValidationError, OamParityError) as exc:
        err_console.print(f"[bold red]✗ Invalid parameters:[/bold red] {_describe(exc)}")
        raise typer.Exit(EXIT_PARAMETER_ERROR) from exc


def _noise(
    loss: float | None, dark: float | None, nth: float | None, transmissivity: float | None
) -> NoiseConfig:
    """NoiseConfig holding only the values given on the command line."""
    given = {
        "loss": loss,
        "dark_rate": dark,
        "n_thermal": nth,
        "transmissivity": transmissivity,
    }
    return NoiseConfig(**{name: value for name, value in given.items() if value is not None})


def _radians(value: float | None, degrees: bool) -> float | None:
    if value is None or not degrees:
        return value
    return math.radians(value)


def _rows_for_output(result: SweepResult, degrees: bool) -> list[tuple[float, ...]]:
    if not degrees:
        return result.rows
    convert = [name in ANGLE_COLUMNS for name in result.columns]
    return [
        tuple(math.degrees(value) if angle else value for value, angle in zip(row, convert, strict=True))
        for row in result.rows
    ]


def _emit(result: SweepResult, out: Path | None, degrees: bool) -> None:
    rows = _rows_for_output(result, degrees)
    if out is None:
        typer.echo(render_csv(result.columns, rows), nl=False)
        return
    write_csv(out, result.columns, rows)
    err_console.print(f"[green]✓ Wrote {len(rows)} rows to {out}[/green]")


def _phi_spec(
    variant: Variant,
    r: float | None,
    nbar: float | None,
    ell: int,
    phi_min: float | None,
    phi_max: float | None,
    phi_steps: int,
    noise: NoiseConfig,
    jobs: int | None,
    degrees: bool,
) -> SweepSpec:
    if r is None and nbar is None:
        raise ParameterError("one of --r or --nbar is required")
    return SweepSpec(
        variant=variant,
        r=r,
        nbar=nbar,
        ell=ell,
        phi_min=_radians(phi_min, degrees),
        phi_max=_radians(phi_max, degrees),
        phi_steps=phi_steps,
        noise=noise,
        jobs=jobs,
    )


@app.command()
def signal(
    variant: VariantOpt = Variant.IDEAL,
    r: ROpt = None,
    nbar: NbarOpt = None,
    ell: EllOpt = 1,
    phi_min: PhiMinOpt = None,
    phi_max: PhiMaxOpt = None,
    phi_steps: PhiStepsOpt = 201,
    loss: LossOpt = None,
    dark: DarkOpt = None,
    nth: NthOpt = None,
    transmissivity: TransmissivityOpt = None,
    out: OutOpt = None,
    jobs: JobsOpt = None,
    degrees: DegreesOpt = False,
) -> None:
    """
    Tabulate the parity signal <Pi_B> over a phi grid.

    Example:
        oamparity signal --r 1 --ell 1 --phi-max 3.14159 --phi-steps 5
        oamparity signal --variant loss --loss 0.01 --r 1 -o signal.csv
    """
    with _parameter_errors():
        spec = _phi_spec(
            variant, r, nbar, ell, phi_min, phi_max, phi_steps,
            _noise(loss, dark, nth, transmissivity), jobs, degrees,
        )
        result = run_signal_sweep(spec)
    _emit(result, out, degrees)


@app.command()
def sensitivity(
    variant: VariantOpt = Variant.IDEAL,
    r: ROpt = None,
    nbar: NbarOpt = None,
    ell: EllOpt = 1,
    phi_min: PhiMinOpt = None,
    phi_max: PhiMaxOpt = None,
    phi_steps: PhiStepsOpt = 201,
    loss: LossOpt = None,
    dark: DarkOpt = None,
    nth: NthOpt = None,
    transmissivity: TransmissivityOpt = None,
    out: OutOpt = None,
    jobs: JobsOpt = None,
    degrees: DegreesOpt = False,
) -> None:
    """
    Tabulate the error-propagation sensitivity over a phi grid.

    Points where the signal slope vanishes are written as ``inf``.
    """
    with _parameter_errors():
        spec = _phi_spec(
            variant, r, nbar, ell, phi_min, phi_max, phi_steps,
            _noise(loss, dark, nth, transmissivity), jobs, degrees,
        )
        result = run_sensitivity_sweep(spec)
    _emit(result, out, degrees)


@app.command()
def optimal(
    variant: VariantOpt = Variant.IDEAL,
    ell: EllOpt = 1,
    r_min: Annotated[float, typer.Option("--r-min", help="Smallest squeezing factor")] = 0.5,
    r_max: Annotated[float, typer.Option("--r-max", help="Largest squeezing factor")] = 1.5,
    r_steps: Annotated[int, typer.Option("--r-steps", help="Number of r grid points")] = 11,
    loss: LossOpt = None,
    dark: DarkOpt = None,
    nth: NthOpt = None,
    transmissivity: TransmissivityOpt = None,
    out: OutOpt = None,
    jobs: JobsOpt = None,
    degrees: DegreesOpt = False,
) -> None:
    """
    Optimal sensitivity over phi for each r, with Heisenberg and shot-noise limits.

    Example:
        oamparity optimal --variant loss --loss 0.01 --ell 2
    """
    with _parameter_errors():
        spec = SweepSpec(
            variant=variant,
            ell=ell,
            r_min=r_min,
            r_max=r_max,
            r_steps=r_steps,
            noise=_noise(loss, dark, nth, transmissivity),
            jobs=jobs,
        )
        result = run_optimal_sweep(spec)
    _emit(result, out, degrees)


@app.command()
def figure(
    figure_id: Annotated[FigureId, typer.Argument(help="Figure to reproduce")],
    out: Annotated[
        Optional[Path], typer.Option("--out", "-o", help="Output directory [default: figure-<id>]")
    ] = None,
    jobs: JobsOpt = None,
) -> None:
    """Write the curve data of one figure: a CSV per curve plus manifest.json."""
    out_dir = out or Path(f"figure-{figure_id.value}")
    with _parameter_errors():
        manifest = write_figure(figure_id, out_dir, jobs=jobs)

    table = Table(title=f"Figure {figure_id.value}: {manifest.description}")
    table.add_column("File", style="cyan")
    table.add_column("Variant", style="yellow")
    table.add_column("Rows", style="green", justify="right")
    for curve in manifest.curves:
        table.add_row(curve.file, curve.variant.value, str(curve.rows))
    err_console.print(table)
    err_console.print(f"[green]✓ Wrote {len(manifest.curves)} curves to {out_dir}[/green]")


def _parse_tolerances(values: Sequence[str]) -> dict[str, float]:
    overrides: dict[str, float] = {}
    for item in values:
        name, sep, raw = item.partition("=")
        if not sep or not name.strip():
            raise ParameterError(f"--tolerance expects name=value, got {item!r}")
        try:
            overrides[name.strip()] = float(raw)
        except ValueError as exc:
            raise ParameterError(f"tolerance {name.strip()!r} is not a number: {raw!r}") from exc
    return overrides


@app.command()
def validate(
    tolerance: Annotated[
        Optional[list[str]],
        typer.Option("--tolerance", "-t", help="Override a check tolerance, name=value (repeatable)"),
    ] = None,
) -> None:
    """Run the cross-check suite; exit 0 only if every check passes."""
    with _parameter_errors():
        report = run_validation(_parse_tolerances(tolerance or []))

    table = Table(title="Validation")
    table.add_column("Check", style="cyan")
    table.add_column("Measured", justify="right")
    table.add_column("Tolerance", justify="right")
    table.add_column("Status")
    for check in report.checks:
        status = "[green]✓ pass[/green]" if check.passed else "[red]✗ FAIL[/red]"
        table.add_row(check.name, f"{check.measured:.3e}", f"{check.tolerance:.1e}", status)
    console.print(table)

    for check in report.failures:
        if check.error:
            err_console.print(f"[red]{check.name}: {check.error}[/red]")

    if not report.passed:
        console.print(f"\n[bold red]✗ {len(report.failures)} of {len(report.checks)} checks failed[/bold red]")
        raise typer.Exit(EXIT_VALIDATION_FAILED)
    console.print(f"\n[bold green]✓ All {len(report.checks)} checks passed[/bold green]")


@app.command()
def config() -> None:
    """Show the active configuration."""
    settings = get_settings()

    console.print(Panel("[bold]oamparity Configuration[/bold]", expand=False))

    general_table = Table(title="General")
    general_table.add_column("Setting", style="cyan")
    general_table.add_column("Value", style="yellow")
    general_table.add_row("Log Level", settings.log_level)
    general_table.add_row("Jobs", str(settings.jobs))
    general_table.add_row("Optimizer grid points", str(settings.optimizer.grid_points))
    general_table.add_row("Optimizer xatol", f"{settings.optimizer.xatol:g}")
    general_table.add_row("Oracle leakage target", f"{settings.oracle.leakage_target:g}")
    general_table.add_row("Oracle max terms", str(settings.oracle.max_terms))
    console.print(general_table)

    tolerance_table = Table(title="Validation Tolerances")
    tolerance_table.add_column("Check", style="cyan")
    tolerance_table.add_column("Tolerance", style="yellow")
    for name, value in settings.tolerances.model_dump().items():
        tolerance_table.add_row(name, f"{value:g}")
    console.print(tolerance_table)


def run() -> None:
    """Console entry point: usage errors exit with 1 instead of click's 2."""
    try:
        code = app(standalone_mode=False)
    except USAGE_ERRORS as exc:
        exc.show()  # type: ignore[attr-defined]
        sys.exit(EXIT_PARAMETER_ERROR)
    except ABORTS:
        err_console.print("[red]Aborted[/red]")
        sys.exit(EXIT_PARAMETER_ERROR)
    sys.exit(code if isinstance(code, int) else 0)


if __name__ == "__main__":
    run()

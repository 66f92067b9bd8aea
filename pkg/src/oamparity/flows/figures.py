"""Curve data for the sensitivity figures: one CSV per curve plus a JSON manifest."""

from enum import Enum
from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

from oamparity.errors import ParameterError
from oamparity.flows.sweeps import SweepResult, SweepSpec, run_optimal_sweep, run_sensitivity_sweep
from oamparity.interferometer import NoiseConfig, Variant
from oamparity.observability.logging import get_logger
from oamparity.tools import write_csv

_logger = get_logger(__name__)

MANIFEST_NAME = "manifest.json"

CurveKind = Literal["sensitivity", "optimal"]


class FigureId(str, Enum):
    FIG_2A = "2a"
    FIG_2B = "2b"
    FIG_3A = "3a"
    FIG_3B = "3b"
    FIG_4A = "4a"
    FIG_4B = "4b"
    FIG_5 = "5"


class CurveSpec(BaseModel):
    """One curve of a figure: a sweep and the file it goes to."""

    model_config = ConfigDict(frozen=True)

    name: str
    kind: CurveKind
    sweep: SweepSpec


class CurveEntry(BaseModel):
    file: str
    kind: CurveKind
    variant: Variant
    parameters: dict[str, float | int] = Field(default_factory=dict)
    columns: list[str]
    rows: int


class FigureManifest(BaseModel):
    figure: FigureId
    description: str
    curves: list[CurveEntry]


def _phi_curve(name: str, variant: Variant, noise: NoiseConfig) -> CurveSpec:
    # phi spans one period [0, pi/2] at ell = 1, centred on the optimum pi/4
    return CurveSpec(name=name, kind="sensitivity", sweep=SweepSpec(variant=variant, r=1.0, ell=1, noise=noise))


def _r_curve(name: str, variant: Variant, noise: NoiseConfig, ell: int = 1) -> CurveSpec:
    return CurveSpec(name=name, kind="optimal", sweep=SweepSpec(variant=variant, ell=ell, noise=noise))


def figure_curves(figure: FigureId) -> tuple[str, list[CurveSpec]]:
    """Description and curves of ``figure`` with its fixed curve parameters."""
    match FigureId(figure):
        case FigureId.FIG_2A:
            return "Sensitivity vs phi under photon loss, ell=1, r=1", [
                _phi_curve(f"loss_L{loss:g}", Variant.LOSS, NoiseConfig(loss=loss))
                for loss in (0.0, 0.01, 0.03)
            ]
        case FigureId.FIG_2B:
            return "Optimal sensitivity vs r under photon loss, ell=1", [
                _r_curve(f"loss_L{loss:g}", Variant.LOSS, NoiseConfig(loss=loss)) for loss in (0.01, 0.03)
            ]
        case FigureId.FIG_3A:
            return "Sensitivity vs phi with dark counts, ell=1, r=1", [
                _phi_curve(f"dark_d{d:g}", Variant.DARK, NoiseConfig(dark_rate=d)) for d in (0.01, 0.1)
            ]
        case FigureId.FIG_3B:
            return "Optimal sensitivity vs r with dark counts, ell=1", [
                _r_curve(f"dark_d{d:g}", Variant.DARK, NoiseConfig(dark_rate=d)) for d in (0.01, 0.1)
            ]
        case FigureId.FIG_4A:
            return "Sensitivity vs phi with thermal noise n_th=0.1, ell=1, r=1", [
                _phi_curve(
                    f"thermal_T{t:g}", Variant.THERMAL, NoiseConfig(n_thermal=0.1, transmissivity=t)
                )
                for t in (0.99, 0.97)
            ]
        case FigureId.FIG_4B:
            return "Optimal sensitivity vs r with thermal noise n_th=0.1, ell=1", [
                _r_curve(f"thermal_T{t:g}", Variant.THERMAL, NoiseConfig(n_thermal=0.1, transmissivity=t))
                for t in (0.99, 0.97)
            ]
        case FigureId.FIG_5:
            return "Optimal sensitivity vs r under photon loss L=0.01 for several OAM numbers", [
                _r_curve(f"loss_ell{ell}", Variant.LOSS, NoiseConfig(loss=0.01), ell=ell) for ell in (1, 2)
            ]
    raise ParameterError(f"unknown figure {figure!r}")


def _parameters(curve: CurveSpec) -> dict[str, float | int]:
    sweep = curve.sweep
    params: dict[str, float | int] = {"ell": sweep.ell}
    if curve.kind == "sensitivity":
        low, high = sweep.phi_bounds
        params.update({"r": sweep.r or 0.0, "phi_min": low, "phi_max": high, "phi_steps": sweep.phi_steps})
    else:
        params.update({"r_min": sweep.r_min, "r_max": sweep.r_max, "r_steps": sweep.r_steps})
    for name in sorted(sweep.noise.model_fields_set):
        params[name] = getattr(sweep.noise, name)
    return params


def run_curve(curve: CurveSpec, jobs: int | None = None) -> SweepResult:
    sweep = curve.sweep.model_copy(update={"jobs": jobs}) if jobs else curve.sweep
    if curve.kind == "sensitivity":
        return run_sensitivity_sweep(sweep)
    return run_optimal_sweep(sweep)


def write_figure(figure: FigureId, out_dir: Path, jobs: int | None = None) -> FigureManifest:
    """Write every curve of ``figure`` into ``out_dir`` and return its manifest."""
    figure = FigureId(figure)
    description, curves = figure_curves(figure)
    out_dir.mkdir(parents=True, exist_ok=True)

    entries = []
    for curve in curves:
        result = run_curve(curve, jobs)
        filename = f"fig{figure.value}_{curve.name}.csv"
        write_csv(out_dir / filename, result.columns, result.rows)
        entries.append(
            CurveEntry(
                file=filename,
                kind=curve.kind,
                variant=curve.sweep.variant,
                parameters=_parameters(curve),
                columns=list(result.columns),
                rows=len(result.rows),
            )
        )

    manifest = FigureManifest(figure=figure, description=description, curves=entries)
    (out_dir / MANIFEST_NAME).write_text(manifest.model_dump_json(indent=2) + "\n", encoding="utf-8")
    _logger.info("figure_written", figure=figure.value, curves=len(entries), out_dir=str(out_dir))
    return manifest

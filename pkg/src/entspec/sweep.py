"""Configuration parsing, parameter sweeps, figure presets, grid serialisation.

Configs are JSON documents.  Field names carry their unit as a suffix
(``_ev``, ``_fs`` for fs^-1 bandwidths, ``_debye``, ``_k``, ``_fs2``);
axis values stay in those config units while the evaluation kernels work
in eV internally.  Sweep axes address parameters through dotted paths,
e.g. ``source.sigma_m`` or ``system.mode.huang_rhys``; the special paths
``delta.omega_plus``/``delta.omega_minus`` offset every source from its
base, ``detuning.tpa``/``detuning.srs`` shift the intermediate level of one
pathway (omega_eg for absorption, omega_eg1 for Raman) with the source
central frequencies held fixed, and ``system.temperature`` rescales the
low-frequency decay proportionally to T from the base temperature.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, EvaluationError, SingularModelError
from .grids import Grid, config_hash
from .photon_source import PhotonPairSource, jsi
from .three_level import (
    DetuningSet,
    ThreeLevelRaman,
    ThreeLevelTPA,
    p_srs_3lvl,
    p_tpa_3lvl,
    ratio_3lvl,
)
from .units import HBAR_EV_FS
from .vibronic import VibrationalMode, VibronicSystem, p_srs_vibronic, p_tpa_vibronic

MODELS = ("three_level", "vibronic")
OBSERVABLES = ("tpa", "srs", "ratio", "jsi")
SCALES = ("linear", "log")


@dataclass(frozen=True)
class AxisSpec:
    path: str
    min: float
    max: float
    count: int
    scale: str = "linear"

    def values(self) -> np.ndarray:
        if self.scale == "log":
            return np.logspace(math.log10(self.min), math.log10(self.max), self.count)
        return np.linspace(self.min, self.max, self.count)


@dataclass(frozen=True)
class SweepConfig:
    model: str
    observable: str
    system: dict | None
    source: dict | None
    source_tpa: dict | None
    source_srs: dict | None
    axis1: AxisSpec | None
    axis2: AxisSpec | None
    n_max: int = 30
    log10_output: bool = False
    note: str = ""

    def resolved(self) -> dict:
        """Canonical snapshot of the validated config, in config units."""
        doc: dict = {"model": self.model, "observable": self.observable}
        if self.system is not None:
            doc["system"] = self.system
        if self.source is not None:
            doc["source"] = self.source
        if self.source_tpa is not None:
            doc["source_tpa"] = self.source_tpa
        if self.source_srs is not None:
            doc["source_srs"] = self.source_srs
        for name, ax in (("axis1", self.axis1), ("axis2", self.axis2)):
            if ax is not None:
                doc[name] = {
                    "path": ax.path,
                    "min": ax.min,
                    "max": ax.max,
                    "count": ax.count,
                    "scale": ax.scale,
                }
        doc["n_max"] = self.n_max
        doc["log10_output"] = self.log10_output
        if self.note:
            doc["note"] = self.note
        return doc


# --------------------------------------------------------------------------
# validation

_SOURCE_KEYS = {"omega_s0_ev", "omega_i0_ev", "sigma_p_fs", "sigma_m_fs"}
_MODE_KEYS = {"omega_j_ev", "huang_rhys", "low_freq_decay_fs2", "lam"}
_VIBRONIC_KEYS = {
    "omega_eg_ev",
    "omega_fe_ev",
    "omega_eg1_ev",
    "omega_eg2_ev",
    "mu_eg_debye",
    "mu_fe_debye",
    "mu_eg1_debye",
    "mu_eg2_debye",
    "mode",
    "temperature_k",
}
_TL_TPA_KEYS = {"omega_eg_ev", "omega_fe_ev", "mu_eg_debye", "mu_fe_debye"}
_TL_RAMAN_KEYS = {"omega_eg1_ev", "omega_eg2_ev", "mu_eg1_debye", "mu_eg2_debye"}
_AXIS_KEYS = {"path", "min", "max", "count", "scale"}
_TOP_KEYS = {
    "model",
    "observable",
    "system",
    "source",
    "source_tpa",
    "source_srs",
    "axis1",
    "axis2",
    "n_max",
    "log10_output",
    "note",
}


def _require_record(doc, key, allowed, required, context):
    rec = doc[key]
    if not isinstance(rec, dict):
        raise ConfigError(f"'{key}' in {context} must be an object")
    unknown = set(rec) - allowed
    if unknown:
        raise ConfigError(f"unknown key '{sorted(unknown)[0]}' in {context}.{key}")
    missing = required - set(rec)
    if missing:
        raise ConfigError(f"missing key '{sorted(missing)[0]}' in {context}.{key}")
    return rec


def _number(rec, key, context):
    v = rec[key]
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ConfigError(f"'{key}' in {context} must be a number, got {v!r}")
    if not math.isfinite(float(v)):
        raise ConfigError(f"'{key}' in {context} must be finite")
    return float(v)


def _validate_source(doc, key) -> dict:
    rec = _require_record(doc, key, _SOURCE_KEYS, _SOURCE_KEYS, "config")
    return {k: _number(rec, k, key) for k in sorted(rec)}


def _validate_axis(doc, key) -> AxisSpec:
    rec = _require_record(doc, key, _AXIS_KEYS, {"path", "min", "max", "count"}, "config")
    path = rec["path"]
    if not isinstance(path, str):
        raise ConfigError(f"'path' in {key} must be a string")
    lo = _number(rec, "min", key)
    hi = _number(rec, "max", key)
    count = rec["count"]
    if isinstance(count, bool) or not isinstance(count, int):
        raise ConfigError(f"'count' in {key} must be an integer")
    if count < 2:
        raise ConfigError(f"'count' in {key} must be >= 2, got {count}")
    scale = rec.get("scale", "linear")
    if scale not in SCALES:
        raise ConfigError(f"'scale' in {key} must be one of {SCALES}, got {scale!r}")
    if scale == "log" and lo <= 0:
        raise ConfigError(f"'min' in {key} must be positive for a log axis")
    if not hi > lo:
        raise ConfigError(f"'{key}' needs max > min, got ({lo!r}, {hi!r})")
    return AxisSpec(path, lo, hi, count, scale)


def parse_config_dict(doc: dict) -> SweepConfig:
    if not isinstance(doc, dict):
        raise ConfigError("config document must be a JSON object")
    unknown = set(doc) - _TOP_KEYS
    if unknown:
        raise ConfigError(f"unknown key '{sorted(unknown)[0]}' in config")
    missing = {"model", "observable"} - set(doc)
    if missing:
        raise ConfigError(
            "missing required keys: model, observable, and source "
            "(or source_tpa and source_srs); absent: " + ", ".join(sorted(missing))
        )
    model = doc["model"]
    if model not in MODELS:
        raise ConfigError(f"'model' must be one of {MODELS}, got {model!r}")
    observable = doc["observable"]
    if observable not in OBSERVABLES:
        raise ConfigError(f"'observable' must be one of {OBSERVABLES}, got {observable!r}")

    has_single = "source" in doc
    has_pair = "source_tpa" in doc or "source_srs" in doc
    if has_single and has_pair:
        raise ConfigError("give either 'source' or the 'source_tpa'/'source_srs' pair")
    if has_pair and not ("source_tpa" in doc and "source_srs" in doc):
        raise ConfigError("'source_tpa' and 'source_srs' must be given together")
    if not has_single and not has_pair:
        raise ConfigError("missing 'source' (or 'source_tpa' and 'source_srs')")
    if has_pair and observable != "ratio":
        raise ConfigError(f"observable '{observable}' takes a single 'source'")

    source = _validate_source(doc, "source") if has_single else None
    source_tpa = _validate_source(doc, "source_tpa") if has_pair else None
    source_srs = _validate_source(doc, "source_srs") if has_pair else None

    system = None
    if observable != "jsi":
        if "system" not in doc:
            raise ConfigError(f"observable '{observable}' requires a 'system' record")
        if model == "vibronic":
            rec = _require_record(doc, "system", _VIBRONIC_KEYS, _VIBRONIC_KEYS, "config")
            mode = _require_record(
                rec, "mode", _MODE_KEYS, _MODE_KEYS - {"lam"}, "config.system"
            )
            system = {
                k: _number(rec, k, "system") for k in sorted(rec) if k != "mode"
            }
            system["mode"] = {k: _number(mode, k, "system.mode") for k in sorted(mode)}
        else:
            needed = set()
            if observable in ("tpa", "ratio"):
                needed.add("tpa")
            if observable in ("srs", "ratio"):
                needed.add("raman")
            rec = _require_record(doc, "system", {"tpa", "raman"}, needed, "config")
            system = {}
            if "tpa" in rec:
                sub = _require_record(rec, "tpa", _TL_TPA_KEYS, _TL_TPA_KEYS, "system")
                system["tpa"] = {k: _number(sub, k, "system.tpa") for k in sorted(sub)}
            if "raman" in rec:
                sub = _require_record(
                    rec, "raman", _TL_RAMAN_KEYS, _TL_RAMAN_KEYS, "system"
                )
                system["raman"] = {
                    k: _number(sub, k, "system.raman") for k in sorted(sub)
                }
    elif "system" in doc:
        raise ConfigError("observable 'jsi' does not take a 'system' record")

    axis1 = _validate_axis(doc, "axis1") if "axis1" in doc else None
    axis2 = _validate_axis(doc, "axis2") if "axis2" in doc else None
    if axis1 is None and axis2 is not None:
        raise ConfigError("'axis2' requires 'axis1'")

    n_max = doc.get("n_max", 30)
    if isinstance(n_max, bool) or not isinstance(n_max, int) or n_max < 0:
        raise ConfigError(f"'n_max' must be a non-negative integer, got {n_max!r}")
    log10_output = doc.get("log10_output", False)
    if not isinstance(log10_output, bool):
        raise ConfigError("'log10_output' must be a boolean")
    note = doc.get("note", "")
    if not isinstance(note, str):
        raise ConfigError("'note' must be a string")

    cfg = SweepConfig(
        model,
        observable,
        system,
        source,
        source_tpa,
        source_srs,
        axis1,
        axis2,
        n_max,
        log10_output,
        note,
    )
    # building the base state and sources exercises every constructor-level
    # invariant so bad values surface as validation errors
    state = _base_state(cfg)
    _build_source(state, "tpa")
    _build_source(state, "srs")
    for name, ax in (("axis1", axis1), ("axis2", axis2)):
        if ax is not None:
            _applier(cfg, ax.path, name)
    return cfg


def parse_config(document: str) -> SweepConfig:
    """Parse and fully validate a JSON config document."""
    try:
        doc = json.loads(document)
    except json.JSONDecodeError as exc:
        raise ConfigError(
            f"config parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    return parse_config_dict(doc)


# --------------------------------------------------------------------------
# evaluation state

def _source_state(rec: dict, prefix: str, state: dict) -> None:
    state[prefix + "_s0"] = rec["omega_s0_ev"]
    state[prefix + "_i0"] = rec["omega_i0_ev"]
    state[prefix + "_sp"] = rec["sigma_p_fs"] * HBAR_EV_FS
    state[prefix + "_sm"] = rec["sigma_m_fs"] * HBAR_EV_FS
    state[prefix + "_sum"] = None
    state[prefix + "_diff"] = None


def _base_state(cfg: SweepConfig) -> dict:
    state: dict = {
        "dplus": 0.0,
        "dminus": 0.0,
        "shift_eg_tpa": 0.0,
        "shift_eg1_srs": 0.0,
        "omega_s": None,
        "omega_i": None,
        "temperature_set": None,
    }
    shared = cfg.source if cfg.source is not None else None
    _source_state(shared if shared is not None else cfg.source_tpa, "tpa", state)
    _source_state(shared if shared is not None else cfg.source_srs, "srs", state)
    state["shared_source"] = shared is not None
    if cfg.system is not None and cfg.model == "vibronic":
        sys_rec = cfg.system
        mode = sys_rec["mode"]
        for key in ("omega_eg", "omega_fe", "omega_eg1", "omega_eg2"):
            state["sys_" + key] = sys_rec[key + "_ev"]
        for key in ("mu_eg", "mu_fe", "mu_eg1", "mu_eg2"):
            state["sys_" + key] = sys_rec[key + "_debye"]
        state["mode_omega_j"] = mode["omega_j_ev"]
        state["mode_F"] = mode["huang_rhys"]
        state["mode_D"] = mode["low_freq_decay_fs2"]
        state["mode_lam"] = mode.get("lam")
        state["sys_T"] = sys_rec["temperature_k"]
        # constructor-level validation of the base record
        _vibronic_system(state)
    elif cfg.system is not None:
        if "tpa" in cfg.system:
            t = cfg.system["tpa"]
            state["tl_omega_eg"] = t["omega_eg_ev"]
            state["tl_omega_fe"] = t["omega_fe_ev"]
            state["tl_mu_eg"] = t["mu_eg_debye"]
            state["tl_mu_fe"] = t["mu_fe_debye"]
            _tl_tpa(state)
        if "raman" in cfg.system:
            r = cfg.system["raman"]
            state["tl_omega_eg1"] = r["omega_eg1_ev"]
            state["tl_omega_eg2"] = r["omega_eg2_ev"]
            state["tl_mu_eg1"] = r["mu_eg1_debye"]
            state["tl_mu_eg2"] = r["mu_eg2_debye"]
            _tl_raman(state)
    return state


def _build_source(state: dict, prefix: str) -> PhotonPairSource:
    s0 = state[prefix + "_s0"]
    i0 = state[prefix + "_i0"]
    total = state[prefix + "_sum"]
    diff = state[prefix + "_diff"]
    total = (s0 + i0 if total is None else total) + state["dplus"]
    diff = (s0 - i0 if diff is None else diff) + state["dminus"]
    return PhotonPairSource(
        0.5 * (total + diff),
        0.5 * (total - diff),
        state[prefix + "_sp"],
        state[prefix + "_sm"],
    )


def _effective_decay(state: dict) -> float:
    decay = state["mode_D"]
    if state["temperature_set"] is not None:
        decay = decay * state["temperature_set"] / state["sys_T"]
    return decay


def _vibronic_system(state: dict, shift_eg: float = 0.0, shift_eg1: float = 0.0) -> VibronicSystem:
    mode = VibrationalMode(
        state["mode_omega_j"], state["mode_F"], _effective_decay(state), state["mode_lam"]
    )
    temperature = (
        state["sys_T"] if state["temperature_set"] is None else state["temperature_set"]
    )
    return VibronicSystem(
        omega_eg=state["sys_omega_eg"] + shift_eg,
        omega_fe=state["sys_omega_fe"],
        omega_eg1=state["sys_omega_eg1"] + shift_eg1,
        omega_eg2=state["sys_omega_eg2"],
        mu_eg=state["sys_mu_eg"],
        mu_fe=state["sys_mu_fe"],
        mu_eg1=state["sys_mu_eg1"],
        mu_eg2=state["sys_mu_eg2"],
        mode=mode,
        temperature=temperature,
    )


def _tl_tpa(state: dict, shift_eg: float = 0.0) -> ThreeLevelTPA:
    return ThreeLevelTPA(
        state["tl_omega_eg"] + shift_eg,
        state["tl_omega_fe"],
        state["tl_mu_eg"],
        state["tl_mu_fe"],
    )


def _tl_raman(state: dict, shift_eg1: float = 0.0) -> ThreeLevelRaman:
    return ThreeLevelRaman(
        state["tl_omega_eg1"] + shift_eg1,
        state["tl_omega_eg2"],
        state["tl_mu_eg1"],
        state["tl_mu_eg2"],
    )


# --------------------------------------------------------------------------
# axis appliers: path -> (unit label, writer into the point state)

def _set_keys(keys, convert=1.0):
    def apply(state, value):
        for key in keys:
            state[key] = value * convert

    return apply


def _applier(cfg: SweepConfig, path: str, context: str):
    shared = cfg.source is not None
    vib = cfg.model == "vibronic"
    obs = cfg.observable
    table: dict[str, tuple[str, object, bool]] = {
        "omega_s": ("eV", _set_keys(["omega_s"]), obs == "jsi"),
        "omega_i": ("eV", _set_keys(["omega_i"]), obs == "jsi"),
        "source.sigma_p": ("fs^-1", _set_keys(["tpa_sp", "srs_sp"], HBAR_EV_FS), shared),
        "source.sigma_m": ("fs^-1", _set_keys(["tpa_sm", "srs_sm"], HBAR_EV_FS), shared),
        "source.omega_s0": ("eV", _set_keys(["tpa_s0", "srs_s0"]), shared),
        "source.omega_i0": ("eV", _set_keys(["tpa_i0", "srs_i0"]), shared),
        "source.omega_plus": ("eV", _set_keys(["tpa_sum", "srs_sum"]), shared),
        "source.omega_minus": ("eV", _set_keys(["tpa_diff", "srs_diff"]), shared),
        "source_tpa.sigma_p": ("fs^-1", _set_keys(["tpa_sp"], HBAR_EV_FS), not shared),
        "source_tpa.sigma_m": ("fs^-1", _set_keys(["tpa_sm"], HBAR_EV_FS), not shared),
        "source_tpa.omega_plus": ("eV", _set_keys(["tpa_sum"]), not shared),
        "source_tpa.omega_minus": ("eV", _set_keys(["tpa_diff"]), not shared),
        "source_srs.sigma_p": ("fs^-1", _set_keys(["srs_sp"], HBAR_EV_FS), not shared),
        "source_srs.sigma_m": ("fs^-1", _set_keys(["srs_sm"], HBAR_EV_FS), not shared),
        "source_srs.omega_plus": ("eV", _set_keys(["srs_sum"]), not shared),
        "source_srs.omega_minus": ("eV", _set_keys(["srs_diff"]), not shared),
        "delta.omega_plus": ("eV", _set_keys(["dplus"]), obs != "jsi"),
        "delta.omega_minus": ("eV", _set_keys(["dminus"]), obs != "jsi"),
        "detuning.tpa": ("eV", _set_keys(["shift_eg_tpa"]), obs in ("tpa", "ratio")),
        "detuning.srs": ("eV", _set_keys(["shift_eg1_srs"]), obs in ("srs", "ratio")),
        "system.temperature": ("K", _set_keys(["temperature_set"]), vib and obs != "jsi"),
        "system.mode.huang_rhys": ("1", _set_keys(["mode_F"]), vib and obs != "jsi"),
        "system.mode.low_freq_decay": ("fs^-2", _set_keys(["mode_D"]), vib and obs != "jsi"),
        "system.mode.omega_j": ("eV", _set_keys(["mode_omega_j"]), vib and obs != "jsi"),
        "system.omega_eg": ("eV", _set_keys(["sys_omega_eg"]), vib and obs != "jsi"),
        "system.omega_fe": ("eV", _set_keys(["sys_omega_fe"]), vib and obs != "jsi"),
        "system.omega_eg1": ("eV", _set_keys(["sys_omega_eg1"]), vib and obs != "jsi"),
        "system.omega_eg2": ("eV", _set_keys(["sys_omega_eg2"]), vib and obs != "jsi"),
        "system.tpa.omega_eg": ("eV", _set_keys(["tl_omega_eg"]), not vib and obs in ("tpa", "ratio")),
        "system.tpa.omega_fe": ("eV", _set_keys(["tl_omega_fe"]), not vib and obs in ("tpa", "ratio")),
        "system.raman.omega_eg1": ("eV", _set_keys(["tl_omega_eg1"]), not vib and obs in ("srs", "ratio")),
        "system.raman.omega_eg2": ("eV", _set_keys(["tl_omega_eg2"]), not vib and obs in ("srs", "ratio")),
    }
    if path not in table:
        raise ConfigError(f"unknown axis path '{path}' in {context}")
    unit, apply, available = table[path]
    if not available:
        raise ConfigError(
            f"axis path '{path}' in {context} is not applicable to this config "
            f"(model={cfg.model!r}, observable={cfg.observable!r}, "
            f"{'shared source' if shared else 'per-process sources'})"
        )
    return unit, apply


def _axis_label(cfg: SweepConfig, ax: AxisSpec) -> str:
    unit, _ = _applier(cfg, ax.path, "axis")
    return f"{ax.path} [{unit}]"


# --------------------------------------------------------------------------
# observable kernels

def _evaluator(cfg: SweepConfig):
    obs = cfg.observable
    vib = cfg.model == "vibronic"
    n_max = cfg.n_max

    if obs == "jsi":
        def run(state):
            src = _build_source(state, "tpa")
            ws = state["omega_s"] if state["omega_s"] is not None else src.omega_s0
            wi = state["omega_i"] if state["omega_i"] is not None else src.omega_i0
            return jsi(src, ws, wi)

        return run

    if vib:
        if obs == "tpa":
            def run(state):
                sys = _vibronic_system(state, shift_eg=state["shift_eg_tpa"])
                return p_tpa_vibronic(sys, _build_source(state, "tpa"), n_max)

        elif obs == "srs":
            def run(state):
                sys = _vibronic_system(state, shift_eg1=state["shift_eg1_srs"])
                return p_srs_vibronic(sys, _build_source(state, "srs"), n_max)

        else:
            def run(state):
                sys_t = _vibronic_system(state, shift_eg=state["shift_eg_tpa"])
                sys_s = _vibronic_system(state, shift_eg1=state["shift_eg1_srs"])
                num = p_tpa_vibronic(sys_t, _build_source(state, "tpa"), n_max)
                den = p_srs_vibronic(sys_s, _build_source(state, "srs"), n_max)
                if den == 0.0 or not math.isfinite(den):
                    raise SingularModelError(
                        f"Raman intensity underflowed to {den!r}; ratio undefined"
                    )
                return num / den

        return run

    if obs == "tpa":
        def run(state):
            return p_tpa_3lvl(_tl_tpa(state, state["shift_eg_tpa"]), _build_source(state, "tpa"))

    elif obs == "srs":
        def run(state):
            return p_srs_3lvl(_tl_raman(state, state["shift_eg1_srs"]), _build_source(state, "srs"))

    else:
        def run(state):
            tpa = _tl_tpa(state, state["shift_eg_tpa"])
            raman = _tl_raman(state, state["shift_eg1_srs"])
            src_t = _build_source(state, "tpa")
            src_s = _build_source(state, "srs")
            det = DetuningSet.from_central_frequencies(tpa, raman, src_t, src_s)
            return ratio_3lvl(tpa, raman, src_t, src_s, det)

    return run


def make_kernel(cfg: SweepConfig):
    """Return kernel(assignments) evaluating the observable at one point.

    ``assignments`` maps axis paths to values in config units; an empty
    mapping evaluates the base configuration.
    """
    base = _base_state(cfg)
    evaluate = _evaluator(cfg)
    appliers: dict[str, object] = {
        ax.path: _applier(cfg, ax.path, "kernel")[1]
        for ax in (cfg.axis1, cfg.axis2)
        if ax is not None
    }

    def kernel(assignments: dict[str, float]) -> float:
        state = dict(base)
        for path, value in assignments.items():
            if path not in appliers:
                appliers[path] = _applier(cfg, path, "kernel")[1]
            appliers[path](state, value)
        value = evaluate(state)
        if cfg.log10_output:
            if not value > 0:
                raise EvaluationError(f"cannot take log10 of non-positive value {value!r}")
            value = math.log10(value)
        if not math.isfinite(value):
            raise EvaluationError(f"non-finite value {value!r}")
        return value

    return kernel


_AUTO_NOTES = {
    "detuning.tpa": "detuning.tpa shifts omega_eg of the absorption pathway; sources fixed",
    "detuning.srs": "detuning.srs shifts omega_eg1 of the Raman pathway; sources fixed",
    "delta.omega_plus": "delta.omega_plus offsets every source's central-frequency sum from its base",
    "delta.omega_minus": "delta.omega_minus offsets every source's central-frequency difference from its base",
    "system.temperature": "system.temperature rescales low_freq_decay by T / T_base (proportional-to-T decay)",
}


def run_sweep(cfg: SweepConfig, jobs: int = 1) -> Grid:
    """Evaluate the observable on the axis grid; deterministic for any jobs."""
    if cfg.axis1 is None:
        raise ConfigError("sweep requires 'axis1'")
    kernel = make_kernel(cfg)
    a1 = cfg.axis1.values()
    a2 = cfg.axis2.values() if cfg.axis2 is not None else np.array([0.0])
    label1 = _axis_label(cfg, cfg.axis1)
    label2 = _axis_label(cfg, cfg.axis2) if cfg.axis2 is not None else "none [-]"

    def eval_row(i: int) -> list[float]:
        v1 = float(a1[i])
        row = []
        for j in range(a2.size):
            assignments = {cfg.axis1.path: v1}
            if cfg.axis2 is not None:
                assignments[cfg.axis2.path] = float(a2[j])
            try:
                row.append(kernel(assignments))
            except (ValueError, ArithmeticError, EvaluationError) as exc:
                raise EvaluationError(
                    f"evaluation failed at {label1}={v1!r}, {label2}={float(a2[j])!r}: {exc}"
                ) from exc
        return row

    values = np.empty((a1.size, a2.size))
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            for i, row in enumerate(pool.map(eval_row, range(a1.size))):
                values[i] = row
    else:
        for i in range(a1.size):
            values[i] = eval_row(i)

    resolved = cfg.resolved()
    meta = {"config": resolved, "config_hash": config_hash(resolved)}
    notes = [cfg.note] if cfg.note else []
    for ax in (cfg.axis1, cfg.axis2):
        if ax is not None and ax.path in _AUTO_NOTES:
            notes.append(_AUTO_NOTES[ax.path])
    if notes:
        meta["note"] = "; ".join(notes)
    return Grid(label1, label2, a1, a2, values, metadata=meta)


# --------------------------------------------------------------------------
# figure presets (pyrene parameters)

_PYRENE = {
    "omega_eg_ev": 3.9,
    "omega_fe_ev": 3.6,
    "omega_eg1_ev": 4.07,
    "omega_eg2_ev": 3.9,
    "mu_eg_debye": 4.35,
    "mu_fe_debye": 6.99,
    "mu_eg1_debye": 4.35,
    "mu_eg2_debye": 4.35,
    "mode": {"omega_j_ev": 0.17, "huang_rhys": 1.0, "low_freq_decay_fs2": 0.536},
    "temperature_k": 295.0,
}

# anti-correlated pairs resonant with the absorption ladder (idler first)
_SRC_TPA = {"omega_s0_ev": 3.6, "omega_i0_ev": 3.9, "sigma_p_fs": 0.05, "sigma_m_fs": 0.3}
# correlated pairs at the first Raman side-line (omega_sum 8.14, omega_diff 0.17)
_SRC_SRS = {"omega_s0_ev": 4.155, "omega_i0_ev": 3.985, "sigma_p_fs": 0.3, "sigma_m_fs": 0.05}


def _axis(path, lo, hi, count, scale="linear"):
    return {"path": path, "min": lo, "max": hi, "count": count, "scale": scale}


def _fig2(decay: float) -> dict:
    system = json.loads(json.dumps(_PYRENE))
    system["mode"]["low_freq_decay_fs2"] = decay
    return {
        "model": "vibronic",
        "observable": "ratio",
        "system": system,
        "source": {"omega_s0_ev": 3.75, "omega_i0_ev": 3.75, "sigma_p_fs": 0.1, "sigma_m_fs": 0.1},
        "axis1": _axis("source.sigma_m", 0.025, 1.0, 100, "log"),
        "axis2": _axis("source.sigma_p", 0.025, 1.0, 100, "log"),
        "n_max": 30,
        "log10_output": True,
        "note": (
            "absorption/Raman ratio for one shared source at omega_sum 7.5 eV, "
            f"omega_diff 0; low_freq_decay {decay} fs^-2"
        ),
    }


def _presets() -> dict:
    return {
        "fig1c": {
            "model": "vibronic",
            "observable": "jsi",
            "source": dict(_SRC_SRS),
            "axis1": _axis("omega_s", 3.455, 4.855, 121),
            "axis2": _axis("omega_i", 3.285, 4.685, 121),
            "log10_output": False,
            "note": "joint spectral intensity of the correlated (Raman) source",
        },
        "fig1d": {
            "model": "vibronic",
            "observable": "jsi",
            "source": dict(_SRC_TPA),
            "axis1": _axis("omega_s", 2.9, 4.3, 121),
            "axis2": _axis("omega_i", 3.2, 4.6, 121),
            "log10_output": False,
            "note": "joint spectral intensity of the anti-correlated (absorption) source",
        },
        "fig2a": _fig2(3.0),
        "fig2b": _fig2(300.0),
        "fig3a": {
            "model": "vibronic",
            "observable": "tpa",
            "system": json.loads(json.dumps(_PYRENE)),
            "source": dict(_SRC_TPA),
            "axis1": _axis("source.omega_plus", 6.8, 8.2, 141),
            "axis2": _axis("source.omega_minus", -0.4, 0.4, 81),
            "n_max": 30,
            "log10_output": False,
            "note": "absorption intensity vs central-frequency sum and difference",
        },
        "fig3b": {
            "model": "vibronic",
            "observable": "srs",
            "system": json.loads(json.dumps(_PYRENE)),
            "source": dict(_SRC_SRS),
            "axis1": _axis("source.omega_plus", 7.37, 8.57, 121),
            "axis2": _axis("source.omega_minus", -0.4, 0.74, 115),
            "n_max": 30,
            "log10_output": False,
            "note": "Raman intensity vs central-frequency sum and difference",
        },
        "fig3c": {
            "model": "vibronic",
            "observable": "ratio",
            "system": json.loads(json.dumps(_PYRENE)),
            "source_tpa": dict(_SRC_TPA),
            "source_srs": dict(_SRC_SRS),
            "axis1": _axis("delta.omega_plus", -0.3, 0.3, 61),
            "axis2": _axis("delta.omega_minus", -0.3, 0.3, 61),
            "n_max": 30,
            "log10_output": True,
            "note": (
                "ratio over +-0.3 eV offsets around each process's own peak "
                "(absorption at 7.5/-0.3 eV, Raman at 8.14/0.17 eV)"
            ),
        },
        "fig4a": {
            "model": "vibronic",
            "observable": "ratio",
            "system": json.loads(json.dumps(_PYRENE)),
            "source_tpa": dict(_SRC_TPA),
            "source_srs": dict(_SRC_SRS),
            "axis1": _axis("system.mode.huang_rhys", 0.05, 5.0, 81),
            "axis2": _axis("system.mode.low_freq_decay", 0.05, 50.0, 81, "log"),
            "n_max": 30,
            "log10_output": True,
            "note": "ratio vs vibronic coupling strength and low-frequency decay rate",
        },
        "fig4b": {
            "model": "vibronic",
            "observable": "ratio",
            "system": json.loads(json.dumps(_PYRENE)),
            "source_tpa": dict(_SRC_TPA),
            "source_srs": dict(_SRC_SRS),
            "axis1": _axis("detuning.tpa", -0.5, 0.5, 101),
            "axis2": _axis("detuning.srs", -0.5, 0.5, 101),
            "n_max": 30,
            "log10_output": True,
            "note": "ratio vs intermediate-state detunings, sources fixed at each peak",
        },
        "fig5": {
            "model": "vibronic",
            "observable": "ratio",
            "system": json.loads(json.dumps(_PYRENE)),
            "source_tpa": dict(_SRC_TPA),
            "source_srs": dict(_SRC_SRS),
            "axis1": _axis("system.temperature", 100.0, 600.0, 101),
            "n_max": 30,
            "log10_output": False,
            "note": "ratio vs temperature; low_freq_decay anchored at 0.536 fs^-2 at 295 K",
        },
    }


FIGURE_NAMES = tuple(sorted(_presets()))


def figure_preset(name: str) -> SweepConfig:
    """Built-in sweep configuration reproducing one of the reference figures."""
    presets = _presets()
    if name not in presets:
        raise ConfigError(
            f"unknown figure preset {name!r}; known presets: {', '.join(sorted(presets))}"
        )
    return parse_config_dict(presets[name])

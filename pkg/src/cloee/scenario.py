"""Scenario configuration: typed flat key-value files with dotted sections.

Example config::

    # hospital room, default QoS
    channel.a = 19.2
    channel.noise_figure = 10
    energy.eps_p = 20e-12
    qos.r0 = 15e3
    qos.n_s = 24
    solver.n_t_max = 8190
    distances = 1.0:10.0:0.1
    strategies = 1:2616, 2:2616, 4:2616, 16:2616, 32:2616
    seed = 1
    shadowing = off

Unknown keys and malformed values are rejected with the offending key path,
so sweeps stay reproducible from the file alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .channel import ChannelParams
from .energy import EnergyParams
from .errors import ConfigError
from .frame import VALID_N_CPB
from .metrics import LinkModel, QosSpec
from .optimizer import SolverConfig

DEFAULT_DISTANCES: tuple[float, ...] = tuple(round(1.0 + 0.1 * i, 9) for i in range(91))
# Fixed benchmark strategies: lowest/highest burst orders plus two mid modes,
# all at the 2616-bit frame the static comparisons use.
DEFAULT_STRATEGIES: tuple[tuple[int, int], ...] = (
    (1, 2616), (2, 2616), (4, 2616), (16, 2616), (32, 2616),
)


@dataclass(frozen=True)
class Scenario:
    """Everything a sweep needs: models, QoS, solver knobs, grid and seed."""

    channel: ChannelParams = ChannelParams()
    energy: EnergyParams = EnergyParams()
    qos: QosSpec = QosSpec()
    solver: SolverConfig = SolverConfig()
    distances: tuple[float, ...] = DEFAULT_DISTANCES
    strategies: tuple[tuple[int, int], ...] = DEFAULT_STRATEGIES
    seed: int = 0
    shadowing: bool = False
    uniform_section_ber: bool = False
    integration_per_pulse: bool = False
    workers: int = 1

    def __post_init__(self):
        if not self.distances:
            raise ConfigError("distances", "must not be empty")
        for d in self.distances:
            if d <= 0:
                raise ConfigError("distances", f"distances must be > 0, got {d}")
        for n_cpb, n_t in self.strategies:
            if n_cpb not in VALID_N_CPB:
                raise ConfigError("strategies", f"n_cpb must be one of {VALID_N_CPB}, got {n_cpb}")
            if n_t < 63:
                raise ConfigError("strategies", f"static n_t must be >= 63, got {n_t}")
        if self.workers < 1:
            raise ConfigError("workers", f"must be >= 1, got {self.workers}")

    def link_model(self) -> LinkModel:
        return LinkModel(
            channel=self.channel,
            energy=self.energy,
            uniform_section_ber=self.uniform_section_ber,
            integration_per_pulse=self.integration_per_pulse,
        )

    def shadowing_draws(self) -> tuple[float, ...]:
        """One chi per distance, seeded; zeros when shadowing is off."""
        if not self.shadowing:
            return tuple(0.0 for _ in self.distances)
        rng = np.random.default_rng(self.seed)
        return tuple(float(x) for x in rng.normal(0.0, self.channel.sigma, len(self.distances)))


# --------------------------------------------------------------------------
# config file parsing


def _parse_float(key: str, raw: str) -> float:
    try:
        return float(raw)
    except ValueError:
        raise ConfigError(key, f"expected a number, got {raw!r}") from None


def _parse_int(key: str, raw: str) -> int:
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(key, f"expected an integer, got {raw!r}") from None


def _parse_bool(key: str, raw: str) -> bool:
    low = raw.lower()
    if low in ("on", "true", "yes", "1"):
        return True
    if low in ("off", "false", "no", "0"):
        return False
    raise ConfigError(key, f"expected on|off, got {raw!r}")


def _parse_distances(key: str, raw: str) -> tuple[float, ...]:
    raw = raw.strip()
    if ":" in raw:
        parts = raw.split(":")
        if len(parts) != 3:
            raise ConfigError(key, f"range syntax is start:stop:step, got {raw!r}")
        start, stop, step = (_parse_float(key, p) for p in parts)
        if step <= 0:
            raise ConfigError(key, f"range step must be > 0, got {step}")
        count = int(round((stop - start) / step)) + 1
        if count < 1 or start + (count - 1) * step > stop + 1e-9 * step:
            count = max(1, int((stop - start) / step + 1e-9) + 1)
        return tuple(round(start + i * step, 9) for i in range(count))
    return tuple(_parse_float(key, p) for p in raw.split(",") if p.strip())


def _parse_strategies(key: str, raw: str) -> tuple[tuple[int, int], ...]:
    pairs = []
    for item in raw.split(","):
        item = item.strip()
        if not item:
            continue
        if ":" not in item:
            raise ConfigError(key, f"strategy syntax is n_cpb:n_t, got {item!r}")
        a, b = item.split(":", 1)
        pairs.append((_parse_int(key, a.strip()), _parse_int(key, b.strip())))
    if not pairs:
        raise ConfigError(key, "expected at least one n_cpb:n_t pair")
    return tuple(pairs)


_FLOAT_KEYS = {
    "channel.a", "channel.b", "channel.sigma", "channel.noise_density",
    "channel.noise_figure", "channel.impl_margin", "channel.w_rx",
    "energy.eps_p", "energy.p_cor", "energy.p_adc", "energy.p_lna",
    "energy.p_vga", "energy.p_syn", "energy.p_gen", "energy.t_st",
    "qos.r0", "solver.delta",
}
_INT_KEYS = {
    "energy.m_fingers", "energy.rho_r", "energy.rho_c",
    "qos.n_s", "solver.max_iter", "solver.n_t_max", "seed", "workers",
}
_BOOL_KEYS = {"shadowing", "model.uniform_section_ber", "model.integration_per_pulse"}


def parse_scenario(text: str, source: str = "<config>") -> Scenario:
    values: dict[str, object] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        if "=" not in stripped:
            raise ConfigError(f"{source}:{lineno}", f"expected key = value, got {stripped!r}")
        key, raw = (part.strip() for part in stripped.split("=", 1))
        if key in values:
            raise ConfigError(key, "duplicate key")
        if key in _FLOAT_KEYS:
            values[key] = _parse_float(key, raw)
        elif key in _INT_KEYS:
            values[key] = _parse_int(key, raw)
        elif key in _BOOL_KEYS:
            values[key] = _parse_bool(key, raw)
        elif key == "solver.alpha0":
            values[key] = None if raw.lower() in ("auto", "none") else _parse_float(key, raw)
        elif key == "solver.step_rule":
            values[key] = raw
        elif key == "distances":
            values[key] = _parse_distances(key, raw)
        elif key == "strategies":
            values[key] = _parse_strategies(key, raw)
        else:
            raise ConfigError(key, "unknown key")

    def section(prefix: str) -> dict[str, object]:
        plen = len(prefix) + 1
        return {k[plen:]: v for k, v in values.items() if k.startswith(prefix + ".")}

    def build(cls, prefix: str):
        try:
            return cls(**section(prefix))
        except ValueError as exc:
            raise ConfigError(prefix, str(exc)) from None

    try:
        return Scenario(
            channel=build(ChannelParams, "channel"),
            energy=build(EnergyParams, "energy"),
            qos=build(QosSpec, "qos"),
            solver=build(SolverConfig, "solver"),
            distances=values.get("distances", DEFAULT_DISTANCES),
            strategies=values.get("strategies", DEFAULT_STRATEGIES),
            seed=values.get("seed", 0),
            shadowing=values.get("shadowing", False),
            uniform_section_ber=values.get("model.uniform_section_ber", False),
            integration_per_pulse=values.get("model.integration_per_pulse", False),
            workers=values.get("workers", 1),
        )
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError("scenario", str(exc)) from None


def load_scenario(path: str | Path) -> Scenario:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(str(path), f"cannot read config: {exc}") from None
    return parse_scenario(text, source=str(path))

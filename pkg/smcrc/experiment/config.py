"""Experiment configuration. A config is a YAML mapping; every top level key also has a command
line override. Example:

    model:
      name: lgss
      outlier_prob: 0.1
    data:
      simulate_seed: 2019
      horizon: 100
    filter: pfrc
    particles: 1024
    replicates: 1000
    threshold: constant:1e-8
    seed: 1
    grid:
      - {filter: bpf}
      - {threshold: "constant:1e-14"}
"""

#  Copyright (c) 2026 smcrc developers. See LICENSE

import pathlib
from dataclasses import dataclass, field, replace, fields
from typing import Optional, Tuple

import numpy as np

from ..core.errors import ConfigError, SmcError
from ..core.model import StateSpaceModel, simulate
from ..core.randomstream import RandomStream
from ..models.lgss import LgssParams, lgss_model
from ..models.hmm import DiscreteHmm, hmm_model, random_hmm
from ..models.coin import CoinModel, coin_model, parse_outcome
from ..models.datasets import read_dataset
from ..thresholds.schedule import ThresholdSchedule, parse_threshold_spec
from ..thresholds.schedulefile import read_schedule
from .yaml import load_yaml

import logging
logger = logging.getLogger(__name__)


filter_names = ("bpf", "pfrc", "alive")
default_horizons = {"lgss": 100, "coin": 1, "hmm": 5}


@dataclass(frozen=True)
class ModelSpec:
    name: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.name not in default_horizons:
            raise ConfigError(f"Unknown model {self.name!r}; expected one of {sorted(default_horizons)}")

    def lgss_params(self) -> LgssParams:
        try:
            return LgssParams(**{k: float(v) for k, v in self.params.items()})
        except TypeError as e:
            raise ConfigError(f"Bad lgss parameters: {e}")

    def build(self, horizon: int = None) -> StateSpaceModel:
        horizon = horizon or default_horizons[self.name]
        try:
            if self.name == "lgss":
                return lgss_model(self.lgss_params(), horizon=horizon)
            if self.name == "coin":
                if horizon != 1:
                    raise ConfigError("The coin model has a single step")
                return coin_model(CoinModel(**{k: float(v) for k, v in self.params.items()}))
            return hmm_model(self.hmm(), horizon=horizon)
        except (TypeError, KeyError) as e:
            raise ConfigError(f"Bad {self.name} parameters: {e}")

    def hmm(self) -> DiscreteHmm:
        if self.name == "coin":
            return CoinModel(**self.params).as_hmm()
        if "random" in self.params:
            r = self.params["random"]
            return random_hmm(int(r["states"]), int(r["symbols"]), RandomStream(int(r["seed"])))
        missing = {"initial", "transition", "emission"} - set(self.params)
        if missing:
            raise ConfigError(f"hmm model needs {sorted(missing)}")
        return DiscreteHmm(
            initial=np.array(self.params["initial"], dtype=float),
            transition=np.array(self.params["transition"], dtype=float),
            emission=np.array(self.params["emission"], dtype=float))


@dataclass(frozen=True)
class DataSource:
    path: Optional[pathlib.Path] = None
    observations: Optional[Tuple] = None
    simulate_seed: Optional[int] = None
    horizon: Optional[int] = None


@dataclass(frozen=True)
class PilotSpec:
    particles: int
    seed: int


@dataclass(frozen=True)
class RowSpec:
    filter: str
    particles: int
    threshold: Optional[str] = None


@dataclass(frozen=True)
class ExperimentConfig:
    model: ModelSpec
    filter: str = "bpf"
    particles: int = 1024
    replicates: int = 1000
    threshold: Optional[str] = None
    seed: Optional[int] = None
    data: DataSource = DataSource()
    output: Optional[pathlib.Path] = None
    jobs: int = 1
    baseline_particles: Optional[int] = None
    budget_factor: int = 1000
    pilot: Optional[PilotSpec] = None
    grid: Tuple[dict, ...] = ()
    base_path: pathlib.Path = pathlib.Path(".")

    def override(self, **kwargs) -> "ExperimentConfig":
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})

    def rows(self) -> Tuple[RowSpec, ...]:
        base = RowSpec(filter=self.filter, particles=self.particles, threshold=self.threshold)
        if not self.grid:
            return base,
        return tuple(replace(base, **row) for row in self.grid)

    def validate(self) -> "ExperimentConfig":
        if self.seed is None:
            raise ConfigError("A seed is required (--seed)")
        if self.replicates < 1:
            raise ConfigError("Need at least one replicate")
        if self.jobs < 1:
            raise ConfigError("Need at least one job")
        if self.budget_factor < 2:
            raise ConfigError("budget_factor must be at least 2")
        if self.pilot is not None and (self.pilot.seed is None or self.pilot.particles < 1):
            raise ConfigError("A pilot needs a seed and at least one particle")
        for row in self.rows():
            if row.filter not in filter_names:
                raise ConfigError(f"Unknown filter {row.filter!r}; expected one of {filter_names}")
            if row.particles < 1:
                raise ConfigError("Need at least one particle")
            if row.filter == "pfrc" and not row.threshold:
                raise ConfigError("The pfrc filter needs a threshold")
        return self

    def resolve_path(self, path) -> pathlib.Path:
        path = pathlib.Path(path).expanduser()
        return path if path.is_absolute() else self.base_path / path

    def schedule(self, spec: str) -> ThresholdSchedule:
        try:
            if spec.startswith("file:"):
                return read_schedule(self.resolve_path(spec[len("file:"):].strip()))
            return parse_threshold_spec(spec)
        except OSError as e:
            raise ConfigError(f"Cannot read schedule: {e}")

    def observations(self) -> np.ndarray:
        data = self.data
        if data.path is not None:
            obs, kind = read_dataset(self.resolve_path(data.path))
            logger.info(f"Loaded {len(obs)} {kind} observations from {data.path}")
            return obs
        if data.observations is not None:
            if self.model.name == "lgss":
                return np.array(data.observations, dtype=float)
            if self.model.name == "coin":
                return np.array([parse_outcome(y) for y in data.observations], dtype=int)
            return np.array(data.observations, dtype=int)
        if data.simulate_seed is not None:
            model = self.model.build(data.horizon)
            return simulate(model, RandomStream(data.simulate_seed)).observations
        raise ConfigError("No data: give data.path, data.observations or data.simulate_seed")


_scalar_keys = {
    "filter": str, "particles": int, "replicates": int, "threshold": str, "seed": int,
    "jobs": int, "baseline_particles": int, "budget_factor": int,
}


def config_from_dict(d: dict, base_path: pathlib.Path = pathlib.Path(".")) -> ExperimentConfig:
    known = {f.name for f in fields(ExperimentConfig)} - {"base_path"}
    unknown = set(d) - known
    if unknown:
        raise ConfigError(f"Unknown config keys: {sorted(unknown)}")

    model = d.get("model")
    if isinstance(model, str):
        model = {"name": model}
    if not isinstance(model, dict) or "name" not in model:
        raise ConfigError("Config needs a model with a name")
    model = dict(model)
    kwargs = {"model": ModelSpec(name=model.pop("name"), params=model), "base_path": base_path}

    try:
        for k, cast in _scalar_keys.items():
            if d.get(k) is not None:
                kwargs[k] = cast(d[k])

        data = dict(d.get("data") or {})
        if data.get("observations") is not None:
            data["observations"] = tuple(data["observations"])
        kwargs["data"] = DataSource(**data)

        if d.get("output") is not None:
            kwargs["output"] = pathlib.Path(d["output"])
        if d.get("pilot") is not None:
            kwargs["pilot"] = PilotSpec(**d["pilot"])
        if d.get("grid") is not None:
            kwargs["grid"] = tuple(dict(row) for row in d["grid"])
            for row in kwargs["grid"]:
                extra = set(row) - {"filter", "particles", "threshold"}
                if extra:
                    raise ConfigError(f"Unknown grid keys: {sorted(extra)}")
    except (TypeError, ValueError) as e:
        if isinstance(e, SmcError):
            raise
        raise ConfigError(f"Bad config value: {e}")

    return ExperimentConfig(**kwargs)


def load_config(path: pathlib.Path) -> ExperimentConfig:
    path = pathlib.Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise ConfigError(f"Cannot read config: {e}")
    return config_from_dict(load_yaml(text, source=str(path)), base_path=path.parent)

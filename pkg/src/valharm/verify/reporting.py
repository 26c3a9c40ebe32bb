"""Machine-readable records for verification campaigns.

Reports are deterministic for a fixed config (records sorted, rationals as
p/q strings, enclosures as decimal endpoint strings); only the wall-time
field varies between identical runs.
"""

from __future__ import annotations

import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from .. import __version__, intervals

SCHEMA = "valharm-report/1"

HOLDS_EXACT = "holds-exact"
HOLDS_CERTIFIED = "holds-certified"
INCONCLUSIVE = "inconclusive-enclosure"
VIOLATION = "VIOLATION"

CAMPAIGNS = (
    "bivaluation-symmetry",
    "bm-minkowski-valuation",
    "intrinsic-bm",
    "general-minkowski",
    "general-bm",
    "r-constant",
    "upbound",
    "class-reduction",
)

EXIT_OK = 0
EXIT_VIOLATION = 2
EXIT_INCONCLUSIVE = 3
EXIT_USAGE = 64


class ConfigError(ValueError):
    pass


@dataclass
class ExperimentConfig:
    campaign: str
    n: int = 3
    i: int = 2
    trials: int = 100
    seed: int = 1
    ball_level: int = 2
    rel_tol_equality: str = "1e-25"
    slack_floor: str = "0"

    def validate(self) -> "ExperimentConfig":
        if self.campaign not in CAMPAIGNS:
            raise ConfigError(f"unknown campaign {self.campaign!r}; know {CAMPAIGNS}")
        if self.n != 3:
            raise ConfigError("verification campaigns run in ambient dimension 3")
        if self.trials < 1:
            raise ConfigError("trials >= 1 required")
        if self.ball_level < 0:
            raise ConfigError("ball_level >= 0 required")
        try:
            if float(self.rel_tol_equality) <= 0 or float(self.slack_floor) < 0:
                raise ConfigError("tolerances must be positive (slack floor non-negative)")
        except ValueError as exc:
            raise ConfigError(f"bad tolerance: {exc}") from exc
        allowed_i = {
            "bivaluation-symmetry": (1, 2),
            "bm-minkowski-valuation": (2,),
            "intrinsic-bm": (2, 3),
            "general-minkowski": (0, 1),
            "general-bm": (1,),
            "r-constant": (1, 2),
            "upbound": (2,),
            "class-reduction": (2,),
        }[self.campaign]
        if self.i not in allowed_i:
            raise ConfigError(f"campaign {self.campaign} supports i in {allowed_i}")
        return self

    @property
    def exact_required(self) -> bool:
        return ((self.campaign == "bivaluation-symmetry" and self.i == 2)
                or self.campaign == "class-reduction"
                or (self.campaign == "general-minkowski" and self.i == 0))

    def rel_tol_iv(self):
        return intervals.iv_from_decimal(self.rel_tol_equality)

    def slack_floor_iv(self):
        return intervals.iv_from_decimal(self.slack_floor)

    def to_json(self) -> dict:
        return {
            "campaign": self.campaign,
            "n": self.n,
            "i": self.i,
            "trials": self.trials,
            "seed": self.seed,
            "ball_level": self.ball_level,
            "tolerances": {
                "rel_equality": self.rel_tol_equality,
                "slack_floor": self.slack_floor,
            },
        }

    @classmethod
    def from_json(cls, data: dict) -> "ExperimentConfig":
        if not isinstance(data, dict):
            raise ConfigError("config must be a JSON object")
        known = {"campaign", "n", "i", "trials", "seed", "ball_level", "tolerances"}
        unknown = set(data) - known
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        if "campaign" not in data:
            raise ConfigError("config needs a 'campaign' key")
        tol = data.get("tolerances", {})
        if not isinstance(tol, dict):
            raise ConfigError("'tolerances' must be an object")
        cfg = cls(
            campaign=str(data["campaign"]),
            n=int(data.get("n", 3)),
            i=int(data.get("i", 2)),
            trials=int(data.get("trials", 100)),
            seed=int(data.get("seed", 1)),
            ball_level=int(data.get("ball_level", 2)),
            rel_tol_equality=str(tol.get("rel_equality", "1e-25")),
            slack_floor=str(tol.get("slack_floor", "0")),
        )
        return cfg.validate()


def rational_json(q: Fraction) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def value_json(v) -> object:
    """Exact rationals as p/q strings; intervals as {lo, hi} objects."""
    if isinstance(v, (int, Fraction)):
        return {"exact": rational_json(Fraction(v))}
    return intervals.to_json(v)


@dataclass
class TrialRecord:
    index: int
    kind: str                      # "random" or a named probe
    inputs: dict
    lhs: object
    rhs: object
    slack: object
    verdict: str
    note: str = ""

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "kind": self.kind,
            "inputs": self.inputs,
            "lhs": value_json(self.lhs) if self.lhs is not None else None,
            "rhs": value_json(self.rhs) if self.rhs is not None else None,
            "slack": value_json(self.slack) if self.slack is not None else None,
            "verdict": self.verdict,
            "note": self.note,
        }


@dataclass
class Report:
    config: ExperimentConfig
    records: list[TrialRecord] = field(default_factory=list)
    extras: dict = field(default_factory=dict)
    wall_time_s: float = 0.0

    def summary(self) -> dict:
        counts = {HOLDS_EXACT: 0, HOLDS_CERTIFIED: 0, INCONCLUSIVE: 0, VIOLATION: 0}
        for rec in self.records:
            counts[rec.verdict] += 1
        return counts

    def exit_code(self) -> int:
        counts = self.summary()
        if counts[VIOLATION]:
            return EXIT_VIOLATION
        if counts[INCONCLUSIVE] and self.config.exact_required:
            return EXIT_INCONCLUSIVE
        return EXIT_OK

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "config": self.config.to_json(),
            "records": [r.to_json() for r in sorted(self.records, key=lambda r: r.index)],
            "summary": self.summary(),
            "extras": self.extras,
            "wall_time_s": self.wall_time_s,
            "versions": {
                "python": sys.version.split()[0],
                "mpmath": mpmath.__version__,
                "valharm": __version__,
                "precision_digits": intervals.precision_digits(),
            },
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=1)

    def csv_rows(self) -> list[list[str]]:
        rows = [["index", "kind", "verdict", "lhs", "rhs", "slack", "note"]]

        def flat(v):
            if v is None:
                return ""
            j = value_json(v)
            return j.get("exact") or f"[{j['lo']};{j['hi']}]"

        for rec in sorted(self.records, key=lambda r: r.index):
            rows.append([str(rec.index), rec.kind, rec.verdict,
                         flat(rec.lhs), flat(rec.rhs), flat(rec.slack), rec.note])
        return rows


class Stopwatch:
    def __enter__(self):
        self.t0 = time.monotonic()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.monotonic() - self.t0
        return False

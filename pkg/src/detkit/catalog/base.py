"""Registry infrastructure: identity records, deterministic sampling,
trial execution, and the JSON verification report."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from ..exactnum import PolyQ, fmt_rat, rat


class Resample(Exception):
    """Sampled parameters fell outside the record's domain; try again."""


class UnknownIdentityError(KeyError):
    pass


# ---------------------------------------------------------------------------
# deterministic sampling helpers


def trial_rng(seed: int, identity_id: str, trial: int) -> random.Random:
    return random.Random(f"{seed}:{identity_id}:{trial}")


def rand_frac(rng, lo: int = -9, hi: int = 9, max_den: int = 5) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def rand_nonzero(rng, lo: int = -9, hi: int = 9, max_den: int = 5) -> Fraction:
    for _ in range(100):
        x = rand_frac(rng, lo, hi, max_den)
        if x != 0:
            return x
    raise Resample


def distinct_fracs(rng, count: int, nonzero: bool = False, lo: int = -9, hi: int = 9,
                   max_den: int = 5) -> tuple[Fraction, ...]:
    out: list[Fraction] = []
    if count == 0:
        return ()
    for _ in range(100 * count + 100):
        x = rand_frac(rng, lo, hi, max_den)
        if nonzero and x == 0:
            continue
        if x in out:
            continue
        out.append(x)
        if len(out) == count:
            return tuple(out)
    raise Resample


def rand_q(rng, max_den: int = 9) -> Fraction:
    """Small-denominator rational strictly inside (0, 1)."""
    den = rng.randint(2, max_den)
    num = rng.randint(1, den - 1)
    return Fraction(num, den)


def decreasing_ints(rng, count: int, hi: int = 12, lo: int = 0) -> tuple[int, ...]:
    if hi - lo + 1 < count:
        raise ValueError("range too small")
    vals = rng.sample(range(lo, hi + 1), count)
    return tuple(sorted(vals, reverse=True))


def prod(items, start=None):
    out = Fraction(1) if start is None else start
    for x in items:
        out = out * x
    return out


# ---------------------------------------------------------------------------
# report types


def _ser(value):
    if isinstance(value, Fraction):
        return fmt_rat(value)
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, PolyQ):
        return repr(value)
    if isinstance(value, (tuple, list)):
        return [_ser(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _ser(v) for k, v in value.items()}
    return str(value)


@dataclass
class Trial:
    params: dict
    lhs: object
    rhs: object
    ok: bool
    micros: Optional[int] = None

    def to_json_dict(self, deterministic: bool = True) -> dict:
        return {
            "params": _ser(self.params),
            "lhs": _ser(self.lhs),
            "rhs": _ser(self.rhs),
            "pass": self.ok,
            "micros": None if deterministic else self.micros,
        }


@dataclass
class VerifyReport:
    id: str
    trials: list[Trial] = field(default_factory=list)
    notes: tuple[str, ...] = ()

    @property
    def overall(self) -> bool:
        return all(t.ok for t in self.trials)

    def to_json_dict(self, deterministic: bool = True) -> dict:
        out = {
            "id": self.id,
            "trials": [t.to_json_dict(deterministic) for t in self.trials],
            "overall": self.overall,
        }
        if self.notes:
            out["notes"] = list(self.notes)
        return out


# ---------------------------------------------------------------------------
# identity records


@dataclass(frozen=True)
class IdentityRecord:
    """One registry entry.

    `trial(rng, n) -> (params, lhs, rhs)` runs a single randomized check;
    `builder(n, **params)` exposes the LHS matrix when the identity is a
    plain determinant evaluation (None for structural verifiers).
    """

    id: str
    trial: Callable
    max_n: int
    min_n: int = 1
    builder: Optional[Callable] = None
    closed: Optional[Callable] = None
    sampler: Optional[Callable] = None
    tags: frozenset = frozenset()


REGISTRY: dict[str, IdentityRecord] = {}
_ORDER: list[str] = []


def register(record: IdentityRecord) -> IdentityRecord:
    if record.id in REGISTRY:
        raise ValueError(f"duplicate registry id {record.id!r}")
    REGISTRY[record.id] = record
    _ORDER.append(record.id)
    return record


def registry_ids() -> tuple[str, ...]:
    """All ids, in registration (= report) order."""
    return tuple(_ORDER)


def get_record(identity_id: str) -> IdentityRecord:
    try:
        return REGISTRY[identity_id]
    except KeyError:
        raise UnknownIdentityError(identity_id) from None


def det_record(identity_id: str, sampler, builder, closed, max_n: int,
               min_n: int = 1, strategy: str = None, tags=()) -> IdentityRecord:
    """Record whose check is det(builder(params)) == closed(params)."""
    from ..linalg import det

    def trial(rng, n):
        params = sampler(rng, n)
        lhs = det(builder(n, **params), strategy)
        rhs = closed(n, **params)
        return params, lhs, rhs

    return register(IdentityRecord(
        id=identity_id, trial=trial, max_n=max_n, min_n=min_n,
        builder=builder, closed=closed, sampler=sampler, tags=frozenset(tags)))


def run_trial(record: IdentityRecord, rng, n: int) -> Trial:
    start = time.perf_counter()
    for _ in range(200):
        try:
            params, lhs, rhs = record.trial(rng, n)
        except (Resample, ZeroDivisionError):
            continue
        micros = int((time.perf_counter() - start) * 1e6)
        if isinstance(lhs, bool) and isinstance(rhs, bool):
            ok = lhs == rhs
        else:
            ok = lhs == rhs
        return Trial(params, lhs, rhs, ok, micros)
    raise RuntimeError(f"{record.id}: no in-domain parameters after 200 samples")


def verify_identity(identity_id: str, trials: int = 5, seed: int = 0,
                    max_n: int = None) -> VerifyReport:
    """Run `trials` randomized checks of one registry identity at its
    size cap (optionally lowered by max_n); exact comparison."""
    record = get_record(identity_id)
    n = record.max_n if max_n is None else min(record.max_n, max_n)
    n = max(n, record.min_n)
    report = VerifyReport(record.id)
    for t in range(trials):
        rng = trial_rng(seed, record.id, t)
        trial = run_trial(record, rng, n)
        trial.params = {"n": n, **trial.params}
        report.trials.append(trial)
    return report


def build_matrix(identity_id: str, n: int, **params):
    record = get_record(identity_id)
    if record.builder is None:
        raise ValueError(f"{identity_id!r} has no plain matrix builder")
    return record.builder(n, **params)


def closed_form(identity_id: str, n: int, **params):
    record = get_record(identity_id)
    if record.closed is None:
        raise ValueError(f"{identity_id!r} has no closed-form evaluator")
    return record.closed(n, **params)

"""Sweep lens spaces, classify their GOF-knots and attach surgery verdicts.

Exports are byte-stable: JSON Lines (one record per space) and CSV (one row
per knot, plus a knot-less row for spaces without GOF-knots).
"""

from __future__ import annotations

import csv
import io
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path

from .baker import GofKnot, classify
from .errors import GofError
from .lens import LensSpace
from .verdict import (
    AllIntegral,
    MonodromyClass,
    SurgeryVerdict,
    all_integral_lo,
    lo_family_matches,
    monodromy_class,
    verdicts,
)

DEFAULT_SLOPES = range(-5, 6)
CSV_HEADER = ["alpha", "beta", "label", "p", "q", "braid", "trace", "class", "all_integral_lo"]


@dataclass(frozen=True)
class KnotEntry:
    knot: GofKnot
    monodromy_class: MonodromyClass
    all_integral_lo: AllIntegral
    lo_families: tuple  # ((family, ((name, value), ...)), ...)
    verdicts: tuple

    def to_dict(self):
        d = self.knot.to_dict()
        d["class"] = self.monodromy_class.value
        d["all_integral_lo"] = self.all_integral_lo.value
        d["lo_families"] = [{"family": f, "params": dict(p)} for f, p in self.lo_families]
        d["verdicts"] = [v.to_dict() for v in self.verdicts]
        return d

    @classmethod
    def from_dict(cls, data):
        knot_keys = ("label", "params", "braid", "matrix", "trace", "ambient")
        return cls(
            knot=GofKnot.from_dict({k: data[k] for k in knot_keys}),
            monodromy_class=MonodromyClass(data["class"]),
            all_integral_lo=AllIntegral(data["all_integral_lo"]),
            lo_families=tuple(
                (f["family"], tuple(f["params"].items())) for f in data["lo_families"]
            ),
            verdicts=tuple(SurgeryVerdict.from_dict(v) for v in data["verdicts"]),
        )


@dataclass(frozen=True)
class AtlasRecord:
    space: LensSpace
    knots: tuple

    def to_dict(self):
        return {"space": self.space.to_dict(), "knots": [k.to_dict() for k in self.knots]}

    @classmethod
    def from_dict(cls, data):
        return cls(
            LensSpace.from_dict(data["space"]),
            tuple(KnotEntry.from_dict(k) for k in data["knots"]),
        )


@dataclass(frozen=True)
class AtlasStats:
    counts: dict
    lo_knot_count: int

    def to_dict(self):
        return {"counts": {str(k): v for k, v in self.counts.items()}, "lo_knot_count": self.lo_knot_count}


def canonical_spaces(max_alpha):
    """Canonical lens spaces with 0 <= alpha <= max_alpha, by (alpha, beta)."""
    if max_alpha < 0:
        return
    yield LensSpace(0, 1)
    if max_alpha >= 1:
        yield LensSpace(1, 0)
    for alpha in range(2, max_alpha + 1):
        for beta in range(1, alpha):
            if math.gcd(alpha, beta) != 1:
                continue
            inv = pow(beta, -1, alpha)
            if beta <= min(alpha - beta, inv, alpha - inv):
                yield LensSpace(alpha, beta)


def entry_for(knot, slopes=DEFAULT_SLOPES):
    return KnotEntry(
        knot=knot,
        monodromy_class=monodromy_class(knot.matrix),
        all_integral_lo=all_integral_lo(knot),
        lo_families=tuple((f, tuple(p.items())) for f, p in lo_family_matches(knot.matrix)),
        verdicts=tuple(verdicts(knot, slopes)),
    )


def record_for(space, slopes=DEFAULT_SLOPES):
    return AtlasRecord(space, tuple(entry_for(k, slopes) for k in classify(space)))


def _record_task(args):
    space, slopes = args
    return record_for(space, slopes)


def enumerate_atlas(max_alpha, slopes=DEFAULT_SLOPES, workers=1):
    """One record per canonical lens space up to ``max_alpha``.

    With ``workers > 1`` spaces are processed in a process pool; the output
    order is the serial order either way.
    """
    if max_alpha < 0:
        raise GofError(f"max_alpha must be >= 0, got {max_alpha}")
    slopes = tuple(slopes)
    spaces = list(canonical_spaces(max_alpha))
    if workers <= 1:
        return [record_for(s, slopes) for s in spaces]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_record_task, [(s, slopes) for s in spaces], chunksize=64))


def stats(records):
    counts = {0: 0, 1: 0, 2: 0, 3: 0}
    lo = 0
    for rec in records:
        counts[len(rec.knots)] = counts.get(len(rec.knots), 0) + 1
        lo += sum(1 for k in rec.knots if k.all_integral_lo is AllIntegral.ALL_LO)
    return AtlasStats(counts, lo)


# ---------------------------------------------------------------------------
# persistence


@contextmanager
def _open_dest(destination):
    if destination in ("-", None):
        yield sys.stdout
        return
    if hasattr(destination, "write"):
        yield destination
        return
    path = Path(destination)
    try:
        fh = open(path, "w", encoding="utf-8", newline="\n")
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror}") from exc
    with fh:
        yield fh


def dumps_record(record):
    return json.dumps(record.to_dict(), separators=(",", ":"), ensure_ascii=False)


def export_json(records, destination):
    """Write JSON Lines, one record per line."""
    with _open_dest(destination) as fh:
        for rec in records:
            fh.write(dumps_record(rec))
            fh.write("\n")


def load_json(source):
    path = Path(source)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot read {path}: {exc.strerror}") from exc
    return [AtlasRecord.from_dict(json.loads(line)) for line in text.splitlines() if line]


def csv_rows(records):
    for rec in records:
        a, b = rec.space.alpha, rec.space.beta
        if not rec.knots:
            yield [a, b, "", "", "", "", "", "", ""]
        for entry in rec.knots:
            k = entry.knot
            params = k.param_dict
            yield [
                a, b, k.label, params.get("p", ""), params.get("q", ""), str(k.braid),
                k.trace, entry.monodromy_class.value, entry.all_integral_lo.value,
            ]


def export_csv(records, destination):
    with _open_dest(destination) as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        writer.writerows(csv_rows(records))


def to_jsonl(records):
    buf = io.StringIO()
    export_json(records, buf)
    return buf.getvalue()


def to_csv(records):
    buf = io.StringIO()
    export_csv(records, buf)
    return buf.getvalue()


def read_csv(source):
    with open(source, encoding="utf-8", newline="") as fh:
        return list(csv.DictReader(fh))

"""Knot-table ingestion, profile caching, and batch report generation.

Input tables are CSV with a header row and columns

    name, determinant, signature, cover_kind, cover_args [, u, g4, notes]

Unknown columns are ignored with a warning.  Cover file arguments are
resolved relative to the table's directory.  Reports are deterministic:
records are processed in file order, every list is canonically sorted, and
two runs over the same inputs produce byte-identical outputs.
"""

from __future__ import annotations

import csv
import hashlib
import io
import os
import sys
import tempfile
from dataclasses import dataclass

from .obstruct import (CoverSpec, KnotRecord, ObstructionReport, parse_cover_spec,
                       resolve_profile, run_checks)
from .profiles import DProfile, parse_profile, serialize_profile

REQUIRED_COLUMNS = ("name", "determinant", "signature", "cover_kind", "cover_args")
OPTIONAL_COLUMNS = ("u", "g4", "notes")


class TableError(ValueError):
    """Malformed knot table; message carries file, line and column."""


def parse_table(path: str, warn=lambda msg: print(msg, file=sys.stderr)):
    """Parse and validate a knot table; returns a list of KnotRecord.

    Every malformed row raises a TableError naming the line and column;
    an empty file yields an empty list.
    """
    records = []
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            return []
        header = [h.strip() for h in header]
        for col in REQUIRED_COLUMNS:
            if col not in header:
                raise TableError(f"{path}: missing required column {col!r}")
        for col in header:
            if col not in REQUIRED_COLUMNS + OPTIONAL_COLUMNS:
                warn(f"{path}: ignoring unknown column {col!r}")
        idx = {col: header.index(col) for col in header}

        for lineno, row in enumerate(reader, start=2):
            if not row or all(not c.strip() for c in row):
                continue
            def cell(col, default=""):
                i = idx.get(col)
                return row[i].strip() if i is not None and i < len(row) else default
            name = cell("name")
            if not name:
                raise TableError(f"{path}:{lineno}: empty knot name")
            try:
                det = int(cell("determinant"))
            except ValueError:
                raise TableError(f"{path}:{lineno}: column 'determinant' is not an integer")
            try:
                sig = int(cell("signature"))
            except ValueError:
                raise TableError(f"{path}:{lineno}: column 'signature' is not an integer")
            try:
                cover = parse_cover_spec(cell("cover_kind"), cell("cover_args"))
            except ValueError as e:
                raise TableError(f"{path}:{lineno}: bad cover: {e}")
            opt = {}
            for col, key in (("u", "unknotting"), ("g4", "slice_genus")):
                raw = cell(col)
                if raw:
                    try:
                        opt[key] = int(raw)
                    except ValueError:
                        raise TableError(f"{path}:{lineno}: column {col!r} is not an integer")
            try:
                rec = KnotRecord(name, det, sig, cover, notes=cell("notes"), **opt)
            except ValueError as e:
                raise TableError(f"{path}:{lineno}: {e}")
            records.append(rec)
    return records


class ProfileCache:
    """Append-only directory of canonical profile files keyed by the content
    hash of the cover specification.

    A cache hit returns text byte-identical to recomputation (profiles
    serialize canonically); writes are atomic (temp file + rename).
    """

    def __init__(self, directory: str):
        self.directory = directory
        os.makedirs(directory, exist_ok=True)

    @staticmethod
    def key(spec: CoverSpec) -> str:
        return hashlib.sha256(spec.canonical().encode()).hexdigest()

    def path_for(self, spec: CoverSpec) -> str:
        return os.path.join(self.directory, self.key(spec) + ".profile")

    def get(self, spec: CoverSpec):
        path = self.path_for(spec)
        if os.path.exists(path):
            with open(path) as fh:
                return parse_profile(fh.read())
        return None

    def put(self, spec: CoverSpec, profile: DProfile):
        path = self.path_for(spec)
        if os.path.exists(path):
            return
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(serialize_profile(profile))
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    def resolve(self, rec: KnotRecord, base_dir: str) -> DProfile:
        cached = self.get(rec.cover)
        if cached is not None:
            return DProfile(cached.group, cached.values, label=f"Sigma({rec.name})")
        prof = resolve_profile(rec, base_dir)
        self.put(rec.cover, prof)
        return prof


def run_report(records, checks, out_dir: str, base_dir: str = ".",
               cache: ProfileCache = None):
    """Run the requested checks on every record and write the report files.

    Per-record failures are isolated: a failing record gets an error block
    and an ``error`` row in the summary instead of aborting the batch.
    Returns the summary as a list of dicts.
    """
    os.makedirs(out_dir, exist_ok=True)
    checks = list(checks)
    summary = []
    for rec in records:
        row = {"name": rec.name, "det": rec.determinant, "sigma": rec.signature}
        block_path = os.path.join(out_dir, f"{rec.name}.txt")
        try:
            if cache is not None and rec.cover.kind != "none":
                prof = cache.resolve(rec, base_dir)
                report = _run_checks_with_profile(rec, checks, prof, base_dir)
            else:
                report = run_checks(rec, checks, base_dir)
            with open(block_path, "w") as fh:
                fh.write(report.to_text())
            for chk in checks:
                v = report.verdicts[chk]
                word = "obstructed" if v.obstructed else "not_obstructed"
                if v.flags:
                    word += "*"
                row[chk] = word
        except Exception as e:         # noqa: BLE001 - isolate record failures
            with open(block_path, "w") as fh:
                fh.write(f"knot: {rec.name}\nerror: {e}\n")
            for chk in checks:
                row[chk] = "error"
            row["error"] = str(e)
        summary.append(row)

    cols = ["name", "det", "sigma"] + checks + (
        ["error"] if any("error" in r for r in summary) else [])
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(cols)
    for row in summary:
        writer.writerow([row.get(c, "") for c in cols])
    with open(os.path.join(out_dir, "summary.csv"), "w") as fh:
        fh.write(buf.getvalue())
    return summary


def _run_checks_with_profile(rec, checks, prof, base_dir):
    from .obstruct import CHECK_FUNCTIONS, check_cstar_k, _oriented_profiles
    verdicts = {}
    sign_mode = "n/a"
    if abs(rec.signature) in (0, 2):
        sign_mode = _oriented_profiles(rec, prof)[1]
    for chk in checks:
        if chk.startswith("cstar:"):
            k = int(chk.split(":", 1)[1])
            verdicts[chk] = check_cstar_k(rec, k, P=prof, base_dir=base_dir)
        elif chk in CHECK_FUNCTIONS:
            verdicts[chk] = CHECK_FUNCTIONS[chk](rec, P=prof, base_dir=base_dir)
        else:
            raise ValueError(f"unknown check {chk!r}")
    return ObstructionReport(rec.name, verdicts, sign_mode)

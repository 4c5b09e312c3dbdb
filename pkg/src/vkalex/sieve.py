"""Batch slice-obstruction sieve over census files.

A census file holds one diagram per line, `name  gausscode`, with blank
lines and # comments skipped.  Each record gets the determinant polynomial
computed; a nonzero value obstructs sliceness.  An external flags file
(`name key=value ...`) can then be merged in, and a record survives the
sieve when its graded genus flag is zero and its polynomial vanishes.
"""

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor

from . import alexander, gauss


class CensusParseError(Exception):
    def __init__(self, message, line_no):
        super().__init__("line %d: %s" % (line_no, message))
        self.line_no = line_no


class CensusRecord:
    __slots__ = ("name", "code", "flags")

    def __init__(self, name, code, flags=None):
        self.name = name
        self.code = code
        self.flags = dict(flags or {})

    def __repr__(self):
        return "CensusRecord(%r, %r)" % (self.name, self.code)


def load_census(path, skip_bad=False):
    """Read census records.  Returns (records, skipped_count); a malformed
    line raises CensusParseError unless skip_bad is set, in which case it is
    only counted."""
    records = []
    skipped = 0
    with open(path) as fh:
        for line_no, line in enumerate(fh, start=1):
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            parts = text.split(None, 1)
            if len(parts) != 2:
                if skip_bad:
                    skipped += 1
                    continue
                raise CensusParseError("expected 'name gausscode'", line_no)
            name, code = parts[0], parts[1].strip()
            try:
                gauss.parse_gauss_code(code)
            except (gauss.GaussSyntaxError, gauss.GaussValidationError) as exc:
                if skip_bad:
                    skipped += 1
                    continue
                raise CensusParseError(str(exc), line_no)
            records.append(CensusRecord(name, code))
    return records, skipped


def _sieve_one(item):
    """Worker: compute one row from (name, code).  Must stay module-level
    and take plain data so process pools can pickle it."""
    name, code = item
    try:
        d = gauss.to_diagram(gauss.parse_gauss_code(code))
        g = alexander.delta0(d)
        zero = g.is_zero
        row = {
            "name": name,
            "crossings": d.crossings,
            "delta0": str(g.canonical),
            "delta0_zero": zero,
        }
        if len(d.components) == 1:
            row["writhe"] = str(alexander.writhe_polynomial(d))
        else:
            row["writhe"] = ""
        row["obstructed"] = not zero
        return row
    except Exception as exc:
        return {"name": name, "error": "%s: %s" % (type(exc).__name__, exc)}


class SieveReport:
    def __init__(self, rows, summary):
        self.rows = rows
        self.summary = summary

    def to_json(self):
        return json.dumps({"rows": self.rows, "summary": self.summary},
                          indent=2)

    def to_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["name", "crossings", "delta0", "delta0_zero", "writhe",
                    "obstructed"])
        for row in self.rows:
            if "error" in row:
                w.writerow([row["name"], "", "error: " + row["error"], "", "",
                            ""])
                continue
            w.writerow([row["name"], row["crossings"], row["delta0"],
                        str(row["delta0_zero"]).lower(), row["writhe"],
                        str(row["obstructed"]).lower()])
        return buf.getvalue()

    def to_text(self):
        lines = []
        for row in self.rows:
            if "error" in row:
                lines.append("%-12s error: %s" % (row["name"], row["error"]))
                continue
            verdict = "obstructed" if row["obstructed"] else "no obstruction"
            extra = ""
            if "survives" in row:
                extra = "  survives=%s" % str(row["survives"]).lower()
            lines.append("%-12s n=%-3d %-14s delta0 = %s%s"
                         % (row["name"], row["crossings"], verdict,
                            row["delta0"], extra))
        lines.append("")
        parts = ["total=%d" % self.summary["total"],
                 "delta0_zero=%d" % self.summary["delta0_zero_count"],
                 "obstructed=%d" % self.summary["obstructed_count"]]
        if "errors" in self.summary:
            parts.append("errors=%d" % self.summary["errors"])
        if "survivor_count" in self.summary:
            parts.append("survivors=%d" % self.summary["survivor_count"])
        lines.append("  ".join(parts))
        for w in self.summary.get("warnings", []):
            lines.append("warning: %s" % w)
        return "\n".join(lines) + "\n"


def run_sieve(records, parallel=True):
    """Compute rows for all records, in input order.  parallel=False keeps
    everything in-process; the outputs are identical either way."""
    items = [(r.name, r.code) for r in records]
    if parallel and len(items) > 1:
        with ProcessPoolExecutor() as pool:
            rows = list(pool.map(_sieve_one, items))
    else:
        rows = [_sieve_one(it) for it in items]
    errors = sum(1 for r in rows if "error" in r)
    summary = {
        "total": len(rows),
        "delta0_zero_count": sum(1 for r in rows if r.get("delta0_zero")),
        "obstructed_count": sum(1 for r in rows if r.get("obstructed")),
    }
    if errors:
        summary["errors"] = errors
    return SieveReport(rows, summary)


def _parse_flag_value(v):
    if v == "true":
        return True
    if v == "false":
        return False
    return v


def load_flags(path):
    """Flags file: `name key=value [key=value ...]` per line, same comment
    rules as the census."""
    flags = {}
    with open(path) as fh:
        for line_no, line in enumerate(fh, start=1):
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            parts = text.split()
            if len(parts) < 2 or any("=" not in p for p in parts[1:]):
                raise CensusParseError("expected 'name key=value ...'",
                                       line_no)
            kv = {}
            for p in parts[1:]:
                k, _, v = p.partition("=")
                kv[k] = _parse_flag_value(v)
            flags.setdefault(parts[0], {}).update(kv)
    return flags


def merge_external_flags(report, flags_path):
    """Attach external flags to the report rows and mark survivors: a record
    survives when graded_genus_zero is set and its polynomial vanished.
    Flag names that match no row become warnings."""
    flags = load_flags(flags_path)
    known = set()
    survivors = 0
    for row in report.rows:
        known.add(row["name"])
        if "error" in row:
            continue
        kv = flags.get(row["name"], {})
        row.update(kv)
        row["survives"] = bool(kv.get("graded_genus_zero")) \
            and row["delta0_zero"]
        if row["survives"]:
            survivors += 1
    warnings = ["no census record named %r" % n
                for n in flags if n not in known]
    report.summary["survivor_count"] = survivors
    if warnings:
        report.summary["warnings"] = warnings
    return report

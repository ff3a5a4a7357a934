"""JSON report documents for searches and the claim suite."""

import json

from . import __version__
from .matrixfile import render_matrix
from .search import INCONCLUSIVE, SKIPPED

SCHEMA_VERSION = 1


def claim_to_dict(report):
    d = {
        "claim_id": report.claim_id,
        "task": report.task,
        "outcome": report.outcome,
        "expected": report.expected,
        "status": report.status,
        "witnesses": [render_matrix(A) for A in report.witnesses],
        "nodes_explored": report.nodes_explored,
        "elapsed_ms": round(report.elapsed * 1000, 3),
        "notes": list(report.notes),
        "stats": report.stats,
    }
    if report.count is not None:
        d["count"] = report.count
    return d


def verdict(reports):
    """'pass' iff every claim that ran to a conclusion matched expectations."""
    statuses = [r.status for r in reports]
    if "fail" in statuses:
        return "fail"
    if all(s in (INCONCLUSIVE, SKIPPED) for s in statuses) and INCONCLUSIVE in statuses:
        return "inconclusive"
    return "pass"


def report_document(reports, fields, command):
    fields = [f.to_dict() for f in fields]
    return {
        "schema_version": SCHEMA_VERSION,
        "version": __version__,
        "command": command,
        "field": fields[0] if fields else None,
        "fields": fields,
        "claims": [claim_to_dict(r) for r in reports],
        "verdict": verdict(reports),
    }


def dumps(doc):
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def markdown_summary(doc):
    lines = [f"# Claim suite (invmds {doc['version']})", "",
             "| claim | outcome | expected | status | nodes | ms |",
             "|---|---|---|---|---|---|"]
    for c in doc["claims"]:
        lines.append(f"| {c['claim_id']} | {c['outcome']} | {c['expected']} | "
                     f"{c['status']} | {c['nodes_explored']} | {c['elapsed_ms']:.0f} |")
        for note in c["notes"]:
            if note.startswith("skipped") or c["status"] == "fail":
                lines.append(f"|  | {note} | | | | |")
    lines += ["", f"**verdict: {doc['verdict']}**", ""]
    return "\n".join(lines)

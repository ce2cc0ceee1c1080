"""
Serialization of analysis reports: canonical JSON, a plain-text table, a
delimited summary, and rendered figures.

JSON output is schema-versioned with a fixed key order, so identical
inputs and budgets produce byte-identical documents.  The file writer
drops a report directory containing report.json, entropy.csv, and two
figures: the per-iteration coordinate growth of every classified word and
the Burau spectral-radius profile over the unit circle.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os

from . import burau
from .analysis import EntropyCertificate, GroupAnalysisReport
from .dynnikov import ClassifiedWord
from .permgroups import UNSOLVABLE

SCHEMA = "solbraid-report/1"
WORD_SCHEMA = "solbraid-entropy/1"

__all__ = [
    "SCHEMA",
    "WORD_SCHEMA",
    "report_to_mapping",
    "emit_report",
    "write_report_files",
    "write_word_files",
]


def _dlen_json(value):
    return "UNSOLVABLE" if value is UNSOLVABLE else value


def _finding_json(name: str, cw: ClassifiedWord) -> dict:
    out = {
        "name": name,
        "word": str(cw.word),
        "classification": cw.label.value,
        "estimate": round(cw.estimate.value, 9),
        "estimate_verdict": cw.estimate.verdict.value,
        "burau_lower_bound": round(cw.burau_bound, 9),
        "rigorous": cw.rigorous,
    }
    if cw.exact is not None:
        out["exact"] = round(cw.exact, 9)
    return out


def _certificate_json(cert: EntropyCertificate | None):
    if cert is None:
        return None
    return {
        "word": str(cert.word),
        "dynnikov_estimate": round(cert.dynnikov_estimate, 9),
        "burau_lower_bound": round(cert.burau_lower_bound, 9),
        "rigorous": cert.rigorous,
    }


def report_to_mapping(report: GroupAnalysisReport) -> dict:
    """Flatten a report into the fixed-key-order JSON shape."""
    return {
        "schema": SCHEMA,
        "spec": report.spec.to_mapping(),
        "perm_image": {
            "order": report.perm.order,
            "orbits": [list(o) for o in report.perm.orbit_partition],
            "solvable": report.perm.solvable,
            "derived_length": _dlen_json(report.perm.derived_length),
            "dlen_sandwich": {
                "status": report.sandwich.status,
                "dlen_group": report.sandwich.dlen_group,
                "dlen_image": _dlen_json(report.sandwich.dlen_image),
            },
        },
        "entropy": {
            "generators": [_finding_json(n, cw) for n, cw in report.generator_findings],
            "search": {
                "status": report.search_status,
                "certificate": _certificate_json(report.certificate),
            },
        },
        "kernel": {
            "status": report.kernel_check.status,
            "reason": report.kernel_check.reason,
            "words": [str(w) for w in report.kernel_check.words],
            "commutes": report.kernel_check.commutes,
            "witness": (
                [str(w) for w in report.kernel_check.witness]
                if report.kernel_check.witness else None
            ),
            "linking_rank": report.kernel_check.linking_rank,
            "findings": [_finding_json(str(w), cw) for w, cw in report.kernel_findings],
        },
        "verdict": {
            "theorem": report.verdict,
            "anomalies": list(report.anomalies),
        },
    }


def _text_report(report: GroupAnalysisReport) -> str:
    lines = []
    spec = report.spec
    lines.append(f"subgroup of B_{spec.n} with {len(spec.generators)} generator(s)")
    for name, w in spec.generators:
        lines.append(f"  {name:<8s} {w}")
    if spec.structure:
        lines.append(f"  declared structure: {spec.structure}")
    lines.append("")
    p = report.perm
    lines.append("permutation image")
    lines.append(f"  order           {p.order}")
    lines.append(f"  orbits          {' '.join('{' + ' '.join(map(str, o)) + '}' for o in p.orbit_partition)}")
    lines.append(f"  solvable        {p.solvable}")
    lines.append(f"  derived length  {_dlen_json(p.derived_length)}")
    s = report.sandwich
    if s.status == "SKIPPED":
        lines.append("  dlen sandwich   SKIPPED (no declared structure)")
    else:
        lines.append(
            f"  dlen sandwich   {s.status} "
            f"({s.dlen_group} - 1 <= {_dlen_json(s.dlen_image)} <= {s.dlen_group})"
        )
    lines.append("")
    lines.append("entropy")
    lines.append(f"  {'name':<12s}{'classification':<20s}{'estimate':>10s}{'burau':>10s}  word")
    for name, cw in report.generator_findings:
        lines.append(
            f"  {name:<12s}{cw.label.value:<20s}{cw.estimate.value:>10.6f}"
            f"{cw.burau_bound:>10.6f}  {cw.word}"
        )
    lines.append(f"  search: {report.search_status}")
    cert = report.certificate
    if cert is not None:
        kind = "rigorous" if cert.rigorous else "heuristic"
        lines.append(
            f"  certificate ({kind}): word [{cert.word}] "
            f"estimate {cert.dynnikov_estimate:.6f} burau >= {cert.burau_lower_bound:.6f}"
        )
    lines.append("")
    k = report.kernel_check
    lines.append("kernel sample")
    lines.append(f"  status          {k.status}" + (f" ({k.reason})" if k.reason else ""))
    lines.append(f"  words           {len(k.words)}")
    lines.append(f"  commutes        {k.commutes}")
    lines.append(f"  linking rank    {k.linking_rank}")
    lines.append("")
    lines.append(f"verdict: {report.verdict}")
    for a in report.anomalies:
        lines.append(f"anomaly: {a}")
    return "\n".join(lines) + "\n"


def emit_report(report: GroupAnalysisReport, format: str = "json") -> str:
    """Serialize a report as canonical JSON or a human-readable table."""
    if format == "json":
        return json.dumps(report_to_mapping(report), indent=2) + "\n"
    if format == "text":
        return _text_report(report)
    raise ValueError(f"unknown report format {format!r} (know: json, text)")


def _findings_rows(report: GroupAnalysisReport):
    for name, cw in report.generator_findings:
        yield ("generator", name, cw)
    for w, cw in report.kernel_findings:
        yield ("kernel", str(w), cw)


def _write_csv(rows, path: str) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([
        "kind", "name", "word", "n", "classification",
        "estimate", "burau_lower_bound", "rigorous", "exact",
    ])
    for kind, name, cw in rows:
        writer.writerow([
            kind, name, str(cw.word), cw.word.n, cw.label.value,
            f"{cw.estimate.value:.9f}", f"{cw.burau_bound:.9f}", cw.rigorous,
            "" if cw.exact is None else f"{cw.exact:.9f}",
        ])
    with open(path, "w") as fh:
        fh.write(buf.getvalue())


def _plot_growth(rows, path: str) -> None:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    plotted = False
    for kind, name, cw in rows:
        log = cw.estimate.growth_log
        if not log:
            continue
        plotted = True
        ax.plot(range(1, len(log) + 1), log, lw=1.0, label=f"{name} [{cw.word}]")
    if not plotted:
        ax.text(0.5, 0.5, "all orbits periodic: no growth to plot",
                ha="center", va="center", transform=ax.transAxes)
    ax.set_xlabel("iteration")
    ax.set_ylabel("log-norm increment (nats)")
    ax.set_title("coordinate growth per iteration")
    if plotted:
        ax.legend(fontsize=7, loc="best")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _plot_spectrum(rows, path: str, samples: int = 256) -> None:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    thetas = [2.0 * math.pi * j / samples for j in range(samples + 1)]
    for kind, name, cw in rows:
        if not cw.word.letters:
            continue
        M = burau.reduced_burau(cw.word)
        values = [
            math.log(max(burau.spectral_radius(burau.evaluate_on_circle(M, th)), 1.0))
            for th in thetas
        ]
        ax.plot(thetas, values, lw=1.0, label=f"{name} [{cw.word}]")
    ax.set_xlabel("theta")
    ax.set_ylabel("log spectral radius (clamped at 0)")
    ax.set_title("Burau spectral profile on the unit circle")
    ax.legend(fontsize=7, loc="best")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_report_files(report: GroupAnalysisReport, outdir: str) -> list[str]:
    """Write report.json, entropy.csv, and the two figures into outdir."""
    os.makedirs(outdir, exist_ok=True)
    rows = list(_findings_rows(report))
    paths = []

    path = os.path.join(outdir, "report.json")
    with open(path, "w") as fh:
        fh.write(emit_report(report, "json"))
    paths.append(path)

    path = os.path.join(outdir, "entropy.csv")
    _write_csv(rows, path)
    paths.append(path)

    path = os.path.join(outdir, "entropy_growth.png")
    _plot_growth(rows, path)
    paths.append(path)

    path = os.path.join(outdir, "burau_spectrum.png")
    _plot_spectrum(rows, path)
    paths.append(path)
    return paths


def word_to_mapping(cw: ClassifiedWord) -> dict:
    out = {
        "schema": WORD_SCHEMA,
        "word": str(cw.word),
        "n": cw.word.n,
        "classification": cw.label.value,
        "estimate": round(cw.estimate.value, 9),
        "estimate_verdict": cw.estimate.verdict.value,
        "iterations": cw.estimate.iterations,
        "periodic_orbits": cw.estimate.periodic,
        "burau_lower_bound": round(cw.burau_bound, 9),
        "rigorous": cw.rigorous,
    }
    if cw.exact is not None:
        out["exact"] = round(cw.exact, 9)
    return out


def write_word_files(cw: ClassifiedWord, outdir: str) -> list[str]:
    """Report directory for a single classified word."""
    os.makedirs(outdir, exist_ok=True)
    rows = [("word", "w", cw)]
    paths = []

    path = os.path.join(outdir, "entropy.json")
    with open(path, "w") as fh:
        fh.write(json.dumps(word_to_mapping(cw), indent=2) + "\n")
    paths.append(path)

    path = os.path.join(outdir, "growth.csv")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["iteration", "log_norm_increment"])
    for i, x in enumerate(cw.estimate.growth_log, start=1):
        writer.writerow([i, f"{x:.12f}"])
    with open(path, "w") as fh:
        fh.write(buf.getvalue())
    paths.append(path)

    path = os.path.join(outdir, "entropy_growth.png")
    _plot_growth(rows, path)
    paths.append(path)

    path = os.path.join(outdir, "burau_spectrum.png")
    _plot_spectrum(rows, path)
    paths.append(path)
    return paths

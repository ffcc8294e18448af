"""JSON/CSV serialisation for bases, signature reports and transcripts."""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .bell_basis import BellState
from .dense_coding import TranscriptEntry
from .lelm import ModeUnitary, detection_distribution


class BasisFormatError(ValueError):
    """Malformed basis export."""


def basis_to_dict(states: Sequence[BellState], d: int, mode: str) -> dict:
    return {
        "d": d,
        "mode": mode,
        "states": [
            {
                "c": s.c,
                "p": s.p,
                "amplitudes": [[float(a.real), float(a.imag)] for a in s.amplitudes],
            }
            for s in states
        ],
    }


def basis_from_dict(data: dict) -> tuple[int, str, list[BellState]]:
    try:
        d = int(data["d"])
        mode = str(data["mode"])
        states = []
        for entry in data["states"]:
            amps = np.array([complex(re, im) for re, im in entry["amplitudes"]])
            states.append(BellState(d, int(entry["c"]), int(entry["p"]), amps, mode))
    except (KeyError, TypeError, ValueError) as exc:
        raise BasisFormatError(f"malformed basis file: {exc}") from exc
    return d, mode, states


def read_basis(path: str | Path) -> tuple[int, str, list[BellState]]:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise BasisFormatError(f"{path}: not valid JSON ({exc})") from exc
    return basis_from_dict(data)


def signature_report(
    states: Iterable[BellState], device: ModeUnitary, statistics: str
) -> dict:
    out = []
    d = device.d
    for s in states:
        dist = detection_distribution(s, device, statistics)
        out.append(
            {
                "c": s.c,
                "p": s.p,
                "support": [list(sig) for sig in sorted(dist.support())],
                "distribution": [[a, b, prob] for (a, b), prob in sorted(dist.entries.items())],
            }
        )
    return {"d": d, "statistics": statistics, "device": "fig1", "states": out}


def signature_report_csv(report: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["d", "statistics", "c", "p", "n1", "n2", "probability"])
    for s in report["states"]:
        for n1, n2, prob in s["distribution"]:
            writer.writerow([report["d"], report["statistics"], s["c"], s["p"], n1, n2, repr(prob)])
    return buf.getvalue()


def transcript_lines(entries: Iterable[TranscriptEntry]) -> str:
    return "".join(json.dumps(e.to_json()) + "\n" for e in entries)


def read_transcript(text: str) -> list[TranscriptEntry]:
    entries = []
    for line in text.splitlines():
        if line.strip():
            row = json.loads(line)
            entries.append(TranscriptEntry(row["sent"], tuple(row["signature"]), row["decoded"]))
    return entries

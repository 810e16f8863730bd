import csv
import logging
import os
from typing import Iterable

from config import RUN_MANIFEST_PATH
from .schema import PlotRow, Report


def _ensure_parent(path: str) -> None:
    parent = os.path.dirname(os.path.abspath(path))
    os.makedirs(parent, exist_ok=True)


class ReportWriter:
    """Appends reports as JSON lines to a run manifest."""

    def __init__(self, path: str = RUN_MANIFEST_PATH):
        self._path = path
        self._logger = logging.getLogger(self.__class__.__name__)

    @property
    def path(self) -> str:
        return self._path

    def append(self, report: Report) -> None:
        _ensure_parent(self._path)
        with open(self._path, "a", encoding="utf-8") as fh:
            fh.write(report.to_json() + "\n")
        self._logger.debug(f"Appended report {report.name} to {self._path}")


def write_plot_csv(path: str, rows: Iterable[PlotRow]) -> int:
    """Write x,y,series rows with a header; returns the number of data rows."""
    _ensure_parent(path)
    count = 0
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["x", "y", "series"])
        for row in rows:
            writer.writerow([repr(row.x), repr(row.y), row.series])
            count += 1
    return count

"""Time series of named observables."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = ["ObservableSeries"]


@dataclass
class ObservableSeries:
    """A scaled-time grid plus one named real column per observable."""

    t: np.ndarray
    columns: dict[str, np.ndarray] = field(default_factory=dict)

    def __post_init__(self):
        self.t = np.asarray(self.t, dtype=np.float64)
        for name, col in self.columns.items():
            col = np.asarray(col, dtype=np.float64)
            if col.shape != self.t.shape:
                raise ValueError(f"column {name!r} length differs from the grid")
            if np.isnan(col).any():
                raise ValueError(f"column {name!r} contains NaN")
            self.columns[name] = col

    def __getitem__(self, name: str) -> np.ndarray:
        return self.columns[name]

    def write_csv(self, path) -> None:
        """UTF-8 CSV, header `T,<col>,...`, 17 significant digits, \\n endings."""
        names = list(self.columns)
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(",".join(["T"] + names) + "\n")
            cols = [self.t] + [self.columns[n] for n in names]
            for row in zip(*cols):
                fh.write(",".join(f"{v:.17g}" for v in row) + "\n")

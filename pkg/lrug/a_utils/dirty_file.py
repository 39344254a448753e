# SPDX-FileCopyrightText: (c) 2024 lrug authors
# SPDX-License-Identifier: MIT
import os
from pathlib import Path
from typing import Optional


class WritingToTempFile:
    """We write the data to a temporary file next to the target first, and
    when it's complete, we rename it over the target. A reader never sees a
    half-written table file.
    """

    def __init__(self, file: Path):
        self.final = file
        self.dirty: Optional[Path] = file.parent / (file.name + ".tmp")

    def __enter__(self):
        return self

    def commit(self):
        assert self.dirty is not None
        os.replace(self.dirty, self.final)
        self.dirty = None

    def __exit__(self, exc_type, exc_val, exc_tb):
        if self.dirty is not None:
            try:
                self.dirty.unlink()
            except FileNotFoundError:
                pass


def write_bytes_atomic(file: Path, data: bytes):
    with WritingToTempFile(file) as wttf:
        assert wttf.dirty is not None
        wttf.dirty.write_bytes(data)
        wttf.commit()

# SPDX-FileCopyrightText: (c) 2024 lrug authors
# SPDX-License-Identifier: MIT

import unittest
from pathlib import Path
from tempfile import TemporaryDirectory

from lrug.a_utils.dirty_file import WritingToTempFile, write_bytes_atomic


class StubError(Exception):
    pass


class TestDirtyFiles(unittest.TestCase):

    def setUp(self) -> None:
        self._temp_dir_obj = TemporaryDirectory()
        self.td = Path(self._temp_dir_obj.name)
        self.target = self.td / "toy.tables"

    def tearDown(self) -> None:
        self._temp_dir_obj.cleanup()

    def files_count(self) -> int:
        return len(list(self.td.rglob("*")))

    def test_writing_new_and_committing(self):
        with WritingToTempFile(self.target) as wttf:
            self.assertEqual(self.files_count(), 0)
            wttf.dirty.write_bytes(b"lrug-tables")
            self.assertEqual(self.files_count(), 1)
            wttf.commit()
        self.assertEqual(self.files_count(), 1)
        self.assertEqual(self.target.read_bytes(), b"lrug-tables")

    def test_error_before_commit(self):
        with self.assertRaises(StubError):
            with WritingToTempFile(self.target) as wttf:
                wttf.dirty.write_bytes(b"half of the ta")
                raise StubError
        # the temporary file is gone and the target never appeared
        self.assertEqual(self.files_count(), 0)

    def test_error_after_commit(self):
        with self.assertRaises(StubError):
            with WritingToTempFile(self.target) as wttf:
                wttf.dirty.write_bytes(b"lrug-tables")
                wttf.commit()
                raise StubError
        self.assertEqual(self.files_count(), 1)
        self.assertEqual(self.target.read_bytes(), b"lrug-tables")

    def test_replacing_not_committing(self):
        self.target.write_bytes(b"old tables")
        with self.assertRaises(StubError):
            with WritingToTempFile(self.target) as wttf:
                wttf.dirty.write_bytes(b"new tables")
                self.assertEqual(self.files_count(), 2)
                raise StubError
        self.assertEqual(self.files_count(), 1)
        self.assertEqual(self.target.read_bytes(), b"old tables")

    def test_write_bytes_atomic(self):
        self.target.write_bytes(b"old tables")
        write_bytes_atomic(self.target, b"new tables")
        self.assertEqual(self.files_count(), 1)
        self.assertEqual(self.target.read_bytes(), b"new tables")


if __name__ == "__main__":
    unittest.main()

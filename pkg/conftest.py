"""Collect the project's self-checking test modules under pytest.

Each ``test_*.py`` module exposes ``run_tests() -> bool`` (see
presentation_lab/scripts/run_all_tests.py); wrap it as a single pytest item
that fails when it returns a falsy value.
"""

import importlib
import sys
from pathlib import Path

import pytest

_SRC = Path(__file__).parent / "presentation_lab"
if str(_SRC) not in sys.path:
    sys.path.insert(0, str(_SRC))


class RunTestsItem(pytest.Item):
    def __init__(self, *, modname, **kwargs):
        super().__init__(**kwargs)
        self.modname = modname

    def runtest(self):
        ok = importlib.import_module(self.modname).run_tests()
        assert ok, f"{self.modname}.run_tests() reported failure"

    def reportinfo(self):
        return self.path, 0, f"{self.modname}.run_tests"


class RunTestsFile(pytest.File):
    def collect(self):
        rel = self.path.relative_to(_SRC).with_suffix("")
        modname = ".".join(rel.parts)
        yield RunTestsItem.from_parent(self, name="run_tests", modname=modname)


def pytest_collect_file(parent, file_path):
    if (
        file_path.suffix == ".py"
        and file_path.name.startswith("test_")
        and _SRC in file_path.parents
    ):
        return RunTestsFile.from_parent(parent, path=file_path)
    return None

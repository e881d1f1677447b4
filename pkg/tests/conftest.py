import sys
from pathlib import Path

import hypothesis
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from almonomial.amcore import is_almost_monomial
from almonomial.cli import parse_group_spec

hypothesis.settings.register_profile("suite", deadline=None, max_examples=60)
hypothesis.settings.load_profile("suite")


class GroupCache:
    """Session-wide cache so expensive analyses run once per group spec."""

    def __init__(self):
        self._groups = {}

    def group(self, spec: str):
        if spec not in self._groups:
            self._groups[spec] = parse_group_spec(spec)
        return self._groups[spec]

    def verdict(self, spec: str):
        return is_almost_monomial(self.group(spec))


_CACHE = GroupCache()


@pytest.fixture(scope="session")
def cache() -> GroupCache:
    return _CACHE

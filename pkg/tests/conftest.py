import json
from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def reference():
    """High-precision values frozen by tools/make_reference.py."""
    with open(FIXTURES / "reference.json") as fh:
        return json.load(fh)

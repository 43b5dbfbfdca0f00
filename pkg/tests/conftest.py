import os

import pytest

from flagschur import Diagram


def D(*cols):
    return Diagram(tuple(tuple(c) for c in cols))


def pytest_collection_modifyitems(config, items):
    if os.environ.get("FLAGSCHUR_SLOW") == "1":
        return
    skip = pytest.mark.skip(reason="slow sweep; set FLAGSCHUR_SLOW=1")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)

import os

import pytest

DEGREE7 = os.environ.get("PICENTRAL_DEGREE7", "") in ("1", "true", "yes")


def pytest_collection_modifyitems(config, items):
    if DEGREE7:
        return
    skip = pytest.mark.skip(reason="set PICENTRAL_DEGREE7=1 to run")
    for item in items:
        if "degree7" in item.keywords:
            item.add_marker(skip)

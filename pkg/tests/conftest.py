from __future__ import annotations

import pytest

from taftquiver.catalog import spec_n4d2, spec_r3, spec_s3


@pytest.fixture(scope="session")
def s3():
    return spec_s3()


@pytest.fixture(scope="session")
def r3():
    return spec_r3()


@pytest.fixture(scope="session")
def n4d2():
    return spec_n4d2()

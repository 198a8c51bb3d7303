import pytest

from spiderwalk import SpidernetParams, build_spidernet


@pytest.fixture(scope="session")
def big_463():
    """S(4,6,3) truncated at radius 12; shared by the heavier walk tests."""
    return build_spidernet(SpidernetParams(4, 6, 3), 12)


@pytest.fixture(scope="session")
def big_442():
    """S(4,4,2) at radius 12: realizable stand-in with the same (p, q, r)
    as the unrealizable S(3,4,2)."""
    return build_spidernet(SpidernetParams(4, 4, 2), 12)

import pytest

from ppforge import field_of_order

_CACHE = {}


def get_field(q):
    """Shared field instances so table construction runs once per order."""
    if q not in _CACHE:
        _CACHE[q] = field_of_order(q)
    return _CACHE[q]


@pytest.fixture
def field():
    return get_field

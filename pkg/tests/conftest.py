import pytest

from maxminer import parse_matrix

DEMO_MATRIX = """\
1 1 0
1 0 1
1 1 1
1 0 1
1 0 0
"""


@pytest.fixture
def demo_db():
    """5 transactions over 3 items; known answer {I1,I3}:3, {I1,I2}:2 at min_sup 2."""
    return parse_matrix(DEMO_MATRIX)

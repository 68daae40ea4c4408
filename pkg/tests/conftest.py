import pytest

from helpers import UNKNOT_ROWS
from trilink import seifert


@pytest.fixture
def unknot() -> seifert.SeifertMatrix:
    """The genus-3 surface of the unknot whose b-curves span a metabolizer."""
    return seifert.validate(UNKNOT_ROWS, "interleaved")

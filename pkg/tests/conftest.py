import pytest

from fa import EMP, make_dfa, make_ndfa

TWO_BRANCH_RULES = [
    ("S", "a", "A"),
    ("S", "a", "B"),
    ("A", "b", "C"),
    ("B", "b", "D"),
    ("B", "b", "F"),
    ("C", "a", "E"),
    ("D", EMP, "S"),
    ("E", EMP, "S"),
    ("F", "b", "G"),
    ("G", "a", "B"),
]


@pytest.fixture
def two_branch():
    """NDFA whose two a-branches loop back to the start on empty moves."""
    return make_ndfa(list("SABCDEFG"), ["a", "b"], "S", ["S"], TWO_BRANCH_RULES)


@pytest.fixture
def abstar():
    """DFA for an a followed by any number of bs; completion adds its dead state."""
    return make_dfa(["S", "F"], ["a", "b"], "S", ["F"], [("S", "a", "F"), ("F", "b", "F")])

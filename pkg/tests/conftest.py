import pytest

from germdyn.bitseq import parse_bitseq
from germdyn.curvefamily import CoeffTable

# 20 distinct sequences whose pairwise first disagreements cover indices
# 0 through 5 (the zeros sequence against each "0^m 1 0..." does it).
POOL_SPECS = [
    "0",
    "1",
    "01",
    "001",
    "0001",
    "00001",
    "000001",
    ":1...",
    ":(01)",
    ":(10)",
    ":(0011)",
    ":(110)",
    "0:(110)",
    "0110:(10)",
    "1010:(01)",
    "00:(100)",
    "11:(01)",
    "010101",
    "101010",
    "0011:1...",
]


@pytest.fixture(scope="session")
def pool():
    seqs = [parse_bitseq(spec) for spec in POOL_SPECS]
    keys = {s.canonical_key() for s in seqs}
    assert len(keys) == len(seqs), "pool sequences must be pairwise distinct"
    return seqs


@pytest.fixture(scope="session")
def table():
    """One shared coefficient table so rows are computed once per session."""
    return CoeffTable()

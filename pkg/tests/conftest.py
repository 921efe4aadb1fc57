"""Shared fixture tables.

The expected values asserted across the suite were computed with the
standalone brute-force oracles in the test modules themselves (raw loops
over tables, no library calls) and then frozen as literals.
"""

import pytest

from finsemi import from_table

# indices 0..3 are a, a^2, a^3, a^4; kernel {a^3, a^4}
MONOGENIC_3_2 = [[1, 2, 3, 2], [2, 3, 2, 3], [3, 2, 3, 2], [2, 3, 2, 3]]

# 0:(1,1) 1:(1,2) 2:(2,1) 3:(2,2) 4:zero
BRANDT_B2 = [[0, 1, 4, 4, 4], [4, 4, 0, 1, 4], [2, 3, 4, 4, 4],
             [4, 4, 2, 3, 4], [4, 4, 4, 4, 4]]

# all maps on {0,1}, lex order: 0=const0, 1=id, 2=swap, 3=const1
T2 = [[0, 0, 3, 3], [0, 1, 2, 3], [0, 2, 1, 3], [0, 3, 0, 3]]

Z2 = [[0, 1], [1, 0]]
N2 = [[0, 0], [0, 0]]
CHAIN2 = [[0, 0], [0, 1]]


@pytest.fixture
def z2():
    return from_table(2, Z2, labels=["e", "g"])


@pytest.fixture
def n2():
    return from_table(2, N2, labels=["0", "a"])


@pytest.fixture
def m32():
    return from_table(4, MONOGENIC_3_2)


@pytest.fixture
def b2():
    return from_table(5, BRANDT_B2)


@pytest.fixture
def t2():
    return from_table(4, T2)

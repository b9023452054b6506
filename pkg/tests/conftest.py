import pytest
from hypothesis import strategies as st

from constacyclic.code import build_code
from constacyclic.field import GaloisField, build_root_system
from constacyclic.ring import ArrayMN

# x^4 + x + 2 and x^4 + 2x^3 + 2, both primitive over GF(3)
POLY_A = (2, 1, 0, 0, 1)
POLY_B = (2, 0, 0, 2, 1)

CODE_TEXT = """\
# 4x5 (2,2)-constacyclic code over GF(3), roots in GF(81)
p 3
t 4
primpoly 2 1 0 0 1
M 4
N 5
lambda1 2
lambda2 2
ecz 0 0
ecz 0 1
"""


F81 = GaloisField(3, 4, POLY_A)
F81B = GaloisField(3, 4, POLY_B)


@pytest.fixture(scope="session")
def f81():
    return F81


@pytest.fixture(scope="session")
def f81b():
    return F81B


@pytest.fixture(scope="session")
def roots(f81):
    return build_root_system(f81, 4, 5, 2, 2)


@pytest.fixture(scope="session")
def roots_b(f81b):
    return build_root_system(f81b, 4, 5, 2, 2)


@pytest.fixture(scope="session")
def code(roots):
    return build_code(roots, [(0, 0), (0, 1)])


@pytest.fixture(scope="session")
def code_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("spec") / "code.txt"
    path.write_text(CODE_TEXT)
    return path


def base_arrays(field, m=4, n=5):
    """Hypothesis strategy for m x n arrays over GF(p)."""
    cell = st.integers(0, field.p - 1)
    return st.lists(st.lists(cell, min_size=n, max_size=n), min_size=m, max_size=m).map(
        lambda rows: ArrayMN(field, rows)
    )


def ext_arrays(field, m=4, n=5):
    cell = st.integers(0, field.order - 1)
    return st.lists(st.lists(cell, min_size=n, max_size=n), min_size=m, max_size=m).map(
        lambda rows: ArrayMN(field, rows)
    )

import itertools

import pytest
from hypothesis import strategies as st

from motivic_stability.exact import GF, ZZ, FgAbelianGroup, Poly


def polys(domain, max_deg=5, bound=20):
    if domain.p is None:
        coeff = st.integers(-bound, bound)
    else:
        coeff = st.integers(0, domain.p - 1)
    return st.lists(coeff, max_size=max_deg + 1).map(lambda cs: Poly(tuple(cs), domain))


domains = st.sampled_from([ZZ, GF(2), GF(3), GF(5), GF(7)])


def groups(max_rank=2, max_factor=12):
    return st.builds(
        FgAbelianGroup,
        st.integers(0, max_rank),
        st.lists(st.integers(2, max_factor), max_size=2).map(tuple),
    )


def all_monic(p, d):
    dom = GF(p)
    return [Poly.monic(low, dom) for low in itertools.product(range(p), repeat=d)]


def all_polys(p, max_deg):
    """Every polynomial over F_p of degree <= max_deg, zero included."""
    dom = GF(p)
    return [Poly(cs, dom) for cs in itertools.product(range(p), repeat=max_deg + 1)]


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda l: int(l.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)


@pytest.fixture
def cache_file(tmp_path):
    return tmp_path / "counts.jsonl"

from math import comb

import pytest

from hilbertforge.monomial import MonomialIdeal, minimalize, monomials_of_degree, membership


def ideal(*gens):
    return minimalize(gens)


# (x, y), (x^2, xy, y^3), (xy, yz, zx), (x^2, y^2), (x^3, xy, y^4)
CORPUS = {
    "maximal": MonomialIdeal.maximal(2),
    "x2_xy_y3": ideal((2, 0), (1, 1), (0, 3)),
    "triangle": ideal((1, 1, 0), (0, 1, 1), (1, 0, 1)),
    "x2_y2": ideal((2, 0), (0, 2)),
    "mixed": ideal((3, 0), (1, 1), (0, 4)),
}


@pytest.fixture(params=sorted(CORPUS))
def corpus_ideal(request):
    return CORPUS[request.param]


def brute_quotient_count(I, t):
    """dim_K (S/I)_t by listing monomials; independent of the library counter."""
    return sum(1 for m in monomials_of_degree(I.ambient_n, t) if not membership(m, I))


def brute_ring_count(n, t):
    return comb(t + n - 1, n - 1)


def pytest_configure(config):
    config._acceptance_lines = []


@pytest.fixture
def report(request):
    """Record one PASS/FAIL line; shown live and again in the terminal summary."""

    def record(label, failures):
        line = f"{label}: {'PASS' if not failures else 'FAIL'}"
        if failures:
            line += f" ({len(failures)} failures, first: {failures[0]})"
        request.config._acceptance_lines.append(line)
        print(line)
        assert not failures, line

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = getattr(config, "_acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)

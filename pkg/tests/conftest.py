from __future__ import annotations

import os
import sys
from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from recurkit.scalars import ExactScalar

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", max_examples=400, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def rationals(bound: int = 20):
    return st.builds(Fraction, st.integers(-bound, bound), st.integers(1, bound))


def scalars(bound: int = 20, real: bool = False):
    if real:
        return st.builds(ExactScalar, rationals(bound))
    return st.builds(ExactScalar, rationals(bound), rationals(bound))


def nonzero_scalars(bound: int = 20, real: bool = False):
    return scalars(bound, real).filter(lambda s: not s.is_zero())


@st.composite
def node_systems(draw, max_d: int = 7, bound: int = 20, max_t: int = 3):
    """Distinct nodes with multiplicities, total ``d <= max_d``."""
    budget = draw(st.integers(1, max_d))
    nodes, seen = [], set()
    while budget > 0:
        g = draw(scalars(bound))
        if g in seen:
            continue
        t = draw(st.integers(1, min(max_t, budget)))
        seen.add(g)
        nodes.append((g, t))
        budget -= t
    return tuple(nodes)


@st.composite
def root_lists(draw, max_d: int = 5, bound: int = 6, max_t: int = 3):
    """Distinct nonzero roots with multiplicities (small, to keep terms cheap)."""
    nodes = draw(node_systems(max_d=max_d, bound=bound, max_t=max_t))
    if any(g.is_zero() for g, _ in nodes):
        nodes = tuple((g, t) for g, t in nodes if not g.is_zero()) or ((ExactScalar(1), 1),)
    return nodes


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)

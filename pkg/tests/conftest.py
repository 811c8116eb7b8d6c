"""Shared fixtures and independent reference implementations.

The brute-force helpers here recompute correlations from first principles
(plain Python complex arithmetic, no numpy vectorization) so library bugs
cannot hide in shared code paths.
"""

import cmath
import itertools

import pytest

from zccs import GBF, CodeSet, Lemma1Params, PhaseSequence, Term, z


def brute_accs(u_vals, v_vals, tau):
    """Aperiodic cross-correlation sum from the definition.

    Takes plain value lists (complex or int), returns a complex number.
    Positive tau slides u forward; outside (-L, L) the sum is empty.
    """
    length = len(u_vals)
    total = 0j
    for t in range(length):
        if 0 <= t + tau < length:
            total += u_vals[t + tau] * complex(v_vals[t]).conjugate()
    return total


def brute_set_accs(code_u, code_v, tau):
    return sum(brute_accs(u.values().tolist(), v.values().tolist(), tau)
               for u, v in zip(code_u, code_v))


def brute_values(q, phases):
    return [cmath.exp(2j * cmath.pi * p / q) for p in phases]


def quadratic_gbf(nvars, edges, q=2, weight=1):
    """Quadratic form from an edge list; every edge gets the same weight."""
    return GBF(nvars, q, tuple(Term(weight, (z(i), z(j))) for i, j in edges))


def all_graphs(nvars):
    """Every simple graph on nvars labeled vertices, as edge tuples."""
    pairs = list(itertools.combinations(range(nvars), 2))
    for mask in range(1 << len(pairs)):
        yield tuple(p for idx, p in enumerate(pairs) if mask >> idx & 1)


def mutate_one_phase(code_set, ci, ri, pos, delta=1):
    """Copy of code_set with one phase bumped by delta mod q; no provenance."""
    q = code_set.q
    codes = [list(code) for code in code_set.codes]
    phases = list(codes[ci][ri].phases)
    phases[pos] = (phases[pos] + delta) % q
    codes[ci][ri] = PhaseSequence(q, tuple(phases))
    return CodeSet(
        q,
        code_set.set_size,
        code_set.code_size,
        code_set.length,
        code_set.zcz,
        tuple(tuple(c) for c in codes),
    )


EXAMPLE_EDGES = ((0, 1), (1, 2), (2, 3), (0, 3), (0, 2))


@pytest.fixture(scope="session")
def example_base():
    """The reference construction used throughout: m1=8, five-edge graph on
    four vertices, two deletions leaving the path 2-3."""
    return Lemma1Params(
        m1=8,
        quadratic=quadratic_gbf(4, EXAMPLE_EDGES),
        d_vec=(1, 1, 1, 1),
        d=0,
        deleted=(0, 1),
        beta1=2,
    )

"""Clique systems and the conjecture checkers."""

import itertools

import pytest

from conftest import complete as k_n, cycle, edgeless, path
from giwb.bounds import HOLDS, NOT_APPLICABLE
from giwb.conjectures import (CliqueSystem, check_conjecture1_bound,
                              check_conjecture1_full, check_conjecture3,
                              check_omega_v_substitution, clique_system_search)
from giwb.graphs import bits, from_edges, mask_of
from giwb.invariants import maximum_stable_sets


def clique_systems_oracle(g, stable, order):
    """All valid systems by raw enumeration: one clique per stable vertex,
    pairwise disjoint, each meeting the stable set in that vertex only."""
    members = bits(stable)
    all_cliques = [m for m in range(1 << g.n)
                   if m.bit_count() == order
                   and all(g.has_edge(u, v)
                           for u, v in itertools.combinations(bits(m), 2))]
    per_vertex = [[m for m in all_cliques
                   if m >> v & 1 and (m & stable) == 1 << v]
                  for v in members]
    systems = []
    for combo in itertools.product(*per_vertex):
        used = 0
        for part in combo:
            if part & used:
                break
            used |= part
        else:
            systems.append(combo)
    return systems


class TestCliqueSystem:
    def test_search_on_c4(self):
        g = cycle(4)
        system = clique_system_search(g, 0b0101, 2)
        assert system is not None
        assert system.validate(g, 0b0101, 2)

    def test_search_agrees_with_oracle_on_small_graphs(self):
        for g in [cycle(4), cycle(5), cycle(7), k_n(4), path(5),
                  from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5),
                                 (5, 0), (0, 3)])]:
            for stable in maximum_stable_sets(g):
                for order in (1, 2, 3):
                    found = clique_system_search(g, stable, order)
                    oracle = clique_systems_oracle(g, stable, order)
                    assert (found is not None) == bool(oracle), (g, stable, order)
                    if found is not None:
                        assert found.parts in [tuple(sorted(s))
                                               for s in oracle] or \
                            found.validate(g, stable, order)

    def test_no_system_when_cliques_too_large(self):
        g = cycle(5)
        stable = maximum_stable_sets(g)[0]
        assert clique_system_search(g, stable, 3) is None

    def test_rejects_non_maximum_stable_set(self):
        with pytest.raises(ValueError, match="not a maximum stable set"):
            clique_system_search(cycle(5), 0b00001, 2)
        with pytest.raises(ValueError, match="order"):
            clique_system_search(cycle(5), 0b00101, 0)

    def test_validate_rejects_bad_systems(self):
        g = cycle(4)
        stable = 0b0101
        assert not CliqueSystem((0b0011, 0b0011)).validate(g, stable, 2)  # overlap
        assert not CliqueSystem((0b0101,)).validate(g, stable, 2)  # non-edge
        assert not CliqueSystem((0b0011, 0b1000)).validate(g, stable, 2)  # size

    def test_deterministic_witness(self):
        g = cycle(4)
        first = clique_system_search(g, 0b0101, 2)
        second = clique_system_search(g, 0b0101, 2)
        assert first == second


class TestConjecture1:
    def test_bound_on_odd_cycle(self):
        v = check_conjecture1_bound(cycle(5))
        assert v.status == HOLDS and (v.lhs, v.rhs) == (4, 5)
        assert v.witness == {"omega_e": 2, "sigma_v": 2}

    def test_bound_filters(self):
        assert check_conjecture1_bound(path(3)).status == NOT_APPLICABLE
        assert check_conjecture1_bound(edgeless(3)).status == NOT_APPLICABLE

    def test_full_check_on_cycles(self):
        for n in (4, 5, 7):
            v = check_conjecture1_full(cycle(n))
            assert v.status == HOLDS, n

    def test_full_equality_on_even_cycle(self):
        v = check_conjecture1_full(cycle(4))
        assert v.status == HOLDS and v.equality

    def test_full_not_applicable_mirrors_bound(self):
        assert check_conjecture1_full(path(3)).status == NOT_APPLICABLE


class TestConjecture3:
    def test_holds_on_odd_cycle(self):
        v = check_conjecture3(cycle(5))
        assert v.status == HOLDS and (v.lhs, v.rhs) == (4, 5)

    def test_hypothesis_filters(self):
        # K_4: sigma_e undefined (complete graph); edgeless: omega_e undefined.
        assert check_conjecture3(k_n(4)).status == NOT_APPLICABLE
        assert check_conjecture3(edgeless(3)).status == NOT_APPLICABLE

    def test_dominated_graphs_fall_outside_the_intended_domain(self):
        # P_3 and K_{1,3} satisfy the raw equalities alpha = sigma_e and
        # omega = omega_e only because the sigma chain breaks at their
        # dominating vertex; the checker keeps them not-applicable.
        from conftest import path
        star3 = from_edges(4, [(0, 1), (0, 2), (0, 3)])
        assert check_conjecture3(path(3)).status == NOT_APPLICABLE
        assert check_conjecture3(star3).status == NOT_APPLICABLE


class TestOmegaVSubstitution:
    def test_descriptive_verdict_on_odd_cycle(self):
        v = check_omega_v_substitution(cycle(5))
        assert v.status == HOLDS
        assert v.witness == {"omega_v": 2, "sigma_v": 2}

    def test_filters(self):
        assert check_omega_v_substitution(path(3)).status == NOT_APPLICABLE

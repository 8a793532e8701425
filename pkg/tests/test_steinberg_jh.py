from __future__ import annotations

import itertools

import pytest

from steinmult import (
    DomainError,
    JHFactor,
    jh_factors,
    jh_multiplicity,
    jh_multiplicity_oracle,
    parabolic_label,
)


def test_rank_one_identity_table(a1):
    table = jh_factors(a1, a1.identity)
    s1 = a1.simple_reflection(1)
    assert table.count == 2
    assert table.entries == (
        (JHFactor(a1.identity, frozenset({1}), frozenset()), 1),
        (JHFactor(s1, frozenset(), frozenset()), 1),
    )


def test_rank_one_twisted_table(a1):
    s1 = a1.simple_reflection(1)
    table = jh_factors(a1, s1)
    assert table.entries == ((JHFactor(s1, frozenset(), frozenset()), 1),)


def test_smooth_subset_precondition(a3):
    s1 = a3.simple_reflection(1)
    # The left-ascent set of s1 is {2, 3}; requesting {1} must fail.
    with pytest.raises(DomainError, match="left-ascent"):
        jh_multiplicity(a3, a3.identity, s1, {1})
    with pytest.raises(DomainError, match="left-ascent"):
        jh_multiplicity_oracle(a3, a3.identity, s1, {1})


def test_leading_factor_is_always_present(a3):
    # The pair (w, empty subset) occurs with multiplicity one in the module
    # twisted by w: the only summand with empty quotient support is r = w.
    for w in a3.enumerate_group():
        assert jh_multiplicity(a3, w, w, frozenset()) == 1


def test_multiplicity_golden_values(a3):
    big = a3.parse_word("s1*s2*s3*s2*s1")
    assert jh_multiplicity(a3, a3.identity, big, frozenset()) == 2
    assert jh_multiplicity(a3, a3.identity, a3.identity, frozenset()) == 1
    w = a3.parse_word("s1*s3")
    v = a3.parse_word("s2*s1*s3*s2")
    assert jh_multiplicity(a3, w, v, frozenset({1, 3})) == 1
    w0 = a3.longest_element()
    assert jh_multiplicity(a3, w0, a3.identity, frozenset()) == 0


def test_factor_table_invariants(a3):
    for word in ("e", "s1", "s2*s3"):
        w = a3.parse_word(word)
        table = jh_factors(a3, w)
        seen = set()
        for factor, mult in table.entries:
            assert factor.levi == a3.upper_set(factor.v)
            assert factor.smooth <= factor.levi
            assert mult >= 1
            key = (factor.v, factor.smooth)
            assert key not in seen
            seen.add(key)
        assert table.count == len(table.entries)
        assert table.source is w


def test_factor_table_matches_pointwise_multiplicities(a3):
    w = a3.parse_word("s2*s1")
    table = jh_factors(a3, w).multiplicity_map()
    for v in a3.enumerate_group():
        ascents = sorted(a3.upper_set(v))
        for size in range(len(ascents) + 1):
            for combo in itertools.combinations(ascents, size):
                subset = frozenset(combo)
                expected = table.get((v, subset), 0)
                assert jh_multiplicity(a3, w, v, subset) == expected


def test_oracle_agreement_sample(a3):
    for word in ("e", "s2"):
        w = a3.parse_word(word)
        for v in a3.enumerate_group():
            if v.length > 3:
                continue
            ascents = sorted(a3.upper_set(v))
            for size in range(len(ascents) + 1):
                for combo in itertools.combinations(ascents, size):
                    subset = frozenset(combo)
                    assert jh_multiplicity(a3, w, v, subset) == (
                        jh_multiplicity_oracle(a3, w, v, subset)
                    ), (word, a3.format_word(v), combo)


def test_json_rows(a3):
    rows = jh_factors(a3, a3.identity).to_json()
    assert {"v": "s1*s2*s3*s2*s1", "I": ["s2"], "J": [], "mult": 2} in rows
    assert rows[0] == {"v": "e", "I": ["s1", "s2", "s3"], "J": [], "mult": 1}


def test_text_rows(a3):
    text = jh_factors(a3, a3.identity).to_text()
    lines = text.splitlines()
    assert "[1, {s1, s2, s3}, {}, 1]" in lines
    assert "[s1*s2*s3*s2*s1, {s2}, {}, 2]" in lines


def test_parabolic_label():
    assert parabolic_label(frozenset(), 3) == "B"
    assert parabolic_label(frozenset({1, 2, 3}), 3) == "G"
    assert parabolic_label(frozenset({3, 1}), 3) == "P_{1,3}"


def test_factor_labels(a3):
    full = frozenset({1, 2, 3})
    e = a3.identity
    assert JHFactor(e, full, frozenset()).label() == "v^G_B(λ)"
    assert JHFactor(e, full, full).label() == "L(λ)"
    assert JHFactor(e, full, frozenset({1})).label() == "v^G_{P_1}(λ)"
    v = a3.parse_word("s2*s3")
    assert (
        JHFactor(v, frozenset({1, 3}), frozenset({3})).label()
        == "F_{P_{1,3}}(L(s2*s3·λ), v^{P_{1,3}}_{P_3})"
    )
    u = a3.parse_word("s1*s2*s3")
    assert (
        JHFactor(u, frozenset({2, 3}), frozenset({2, 3})).label()
        == "F_{P_{2,3}}(L(s1*s2*s3·λ), 1)"
    )
    assert (
        JHFactor(u, frozenset({2, 3}), frozenset()).label()
        == "F_{P_{2,3}}(L(s1*s2*s3·λ), v^{P_{2,3}}_B)"
    )

"""Frozen golden data for the three worked GL(4) coweights.

The tuples are GL(4) cocharacters (entries summing to zero, strictly
decreasing); everything else is the published combinatorics attached to
them: base index sets, chain-complex level sizes, the distinct
distribution-type vectors, and the homology composition-factor lists.
"""

from __future__ import annotations

GL4_A = (3, 2, 1, -6)
GL4_B = (2, 1, 0, -3)
GL4_C = (5, 1, -2, -4)

OMEGA_WORDS = {
    GL4_A: {"e", "s1", "s2", "s1*s2", "s2*s1", "s1*s2*s1"},
    GL4_B: {"e", "s1", "s2", "s2*s1"},
    GL4_C: {"e", "s1", "s2", "s3", "s1*s3", "s2*s3"},
}

LEVEL_SIZES = {GL4_A: (1, 2, 2, 1), GL4_B: (1, 2, 1), GL4_C: (1, 3, 2)}

# Distinct distribution-type vectors, grouped by level.
TYPES_A = [
    ((2,), (2, 1), (1, 1), (1,)),
    ((2,), (1, 2), (1, 1), (1,)),
    ((1,), (1, 1), (1, 1), (1,)),
    ((1,), (1, 1), (1, 0), (0,)),
    ((1,), (1, 1), (0, 1), (0,)),
    ((1,), (1, 0), (0, 0), (0,)),
    ((1,), (0, 1), (0, 0), (0,)),
    ((1,), (0, 0), (0, 0), (0,)),
]
TYPES_B = [
    ((2,), (2, 1), (1,)),
    ((2,), (1, 2), (1,)),
    ((1,), (1, 1), (1,)),
    ((1,), (1, 1), (0,)),
    ((1,), (1, 0), (0,)),
    ((1,), (0, 1), (0,)),
    ((1,), (0, 0), (0,)),
]
TYPES_C = [
    ((2,), (2, 1, 2), (2, 1)),
    ((2,), (1, 2, 1), (1, 1)),
    ((1,), (1, 1, 1), (1, 1)),
    ((1,), (1, 1, 1), (1, 0)),
    ((1,), (1, 0, 1), (1, 0)),
    ((1,), (0, 1, 1), (0, 1)),
    ((1,), (1, 1, 0), (0, 0)),
    ((1,), (0, 1, 1), (0, 0)),
    ((1,), (1, 0, 0), (0, 0)),
    ((1,), (0, 1, 0), (0, 0)),
    ((1,), (0, 0, 1), (0, 0)),
    ((1,), (0, 0, 0), (0, 0)),
]
TYPES = {GL4_A: TYPES_A, GL4_B: TYPES_B, GL4_C: TYPES_C}

# Homology factor lists: degree -> {(v word, levi indices, smooth indices)}.
H3_SHARED = {
    ("e", (1, 2, 3), ()),
    ("s3", (1, 2), ()),
    ("s2*s3", (1, 3), (3,)),
    ("s1*s2*s3", (2, 3), (2, 3)),
}
H2_B = {
    ("s1*s2", (2, 3), ()),
    ("s1*s2*s3", (2, 3), ()),
    ("s3*s1*s2", (2,), ()),
    ("s1*s2*s3*s2", (2,), ()),
    ("s2*s3*s1*s2", (1, 3), (1, 3)),
    ("s2*s3*s1*s2", (1, 3), (3,)),
    ("s1*s2*s3*s1*s2", (3,), (3,)),
}
H2_C = {
    ("s1*s2", (2, 3), ()),
    ("s2*s1", (1, 3), ()),
    ("s3*s2", (1, 2), ()),
    ("s1*s2*s1", (3,), ()),
    ("s3*s2*s1", (1, 2), ()),
    ("s3*s2*s1", (1, 2), (2,)),
    ("s3*s1*s2", (2,), ()),
    ("s2*s3*s1*s2", (1, 3), (1, 3)),
    ("s2*s3*s1*s2", (1, 3), (1,)),
    ("s3*s1*s2*s1", (2,), (2,)),
    ("s3*s1*s2*s1", (2,), ()),
    ("s2*s3*s1*s2*s1", (1,), (1,)),
}
HOMOLOGY = {
    GL4_A: {3: H3_SHARED},
    GL4_B: {3: H3_SHARED, 2: H2_B},
    GL4_C: {3: {("e", (1, 2, 3), ())}, 2: H2_C},
}

# Expected `jh_factors` row counts for the ten tabulated twists.
TABLE_COUNTS = {
    "e": 48,
    "s1": 35,
    "s2": 33,
    "s1*s2": 19,
    "s2*s1": 17,
    "s1*s2*s1": 12,
    "s3": 35,
    "s1*s3": 27,
    "s2*s3": 17,
    "s3*s2": 19,
}

"""Reference classification of compactifications in fundamental and adjoint
representations of the simple groups, used by the `table` command.

Each row records the expected Levi type at the apex, the normality and
smoothness verdicts, the non-normality witness where one exists (as a
content/label profile together with the multiple that does occur), and the
expected slice-weight profiles where the full list is known.  Profiles are in
the canonical form produced by render.slice_profiles: (central content in
units of the basic central character, per-component Dynkin labels up to
diagram flips, isomorphic factors pooled).
"""


def _labels(*parts):
    groups = {}
    for series_rank, lab in parts:
        groups.setdefault(series_rank, []).append(tuple(lab))
    return tuple((k, tuple(sorted(v))) for k, v in sorted(groups.items()))


def prof(content, *parts):
    return (content, _labels(*parts))


A1 = ("A", 1)
A2 = ("A", 2)
A3 = ("A", 3)
B2 = ("B", 2)
B3 = ("B", 3)
C3 = ("C", 3)
D5 = ("D", 5)


def row(group, weight, scope, levi, normality, smoothness,
        witness=None, l_weights=None, exhaustive=True):
    return {
        "group": group,
        "weight": weight,
        "scope": scope,
        "levi": levi,                 # (sorted component multiset, center rank)
        "normality": normality,
        "smoothness": smoothness,
        "witness": witness,           # {"profile": ..., "k": int} when NotNormal
        "l_weights": l_weights,       # list of profiles, with the flag below
        "l_weights_exhaustive": exhaustive,
    }


CS = "classical-small"
EX = "exceptional-fg"
E6S = "stretch-e6"

ROWS = [
    # --- type A: wedge powers are normal; only the end ones (and tiny adjoints) smooth
    row("A1", "w1", CS, ((), 1), "Normal", "Smooth"),
    row("A1", "hr", CS, ((), 1), "Normal", "Smooth"),
    row("A2", "w1", CS, ((A1,), 1), "Normal", "Smooth"),
    row("A2", "w2", CS, ((A1,), 1), "Normal", "Smooth"),
    row("A2", "hr", CS, ((), 2), "Normal", "Smooth"),
    row("A3", "w1", CS, ((A2,), 1), "Normal", "Smooth"),
    row("A3", "w2", CS, ((A1, A1), 1), "Normal", "NotSmooth"),
    row("A3", "w3", CS, ((A2,), 1), "Normal", "Smooth"),
    row("A3", "hr", CS, ((A1,), 2), "Normal", "NotSmooth"),
    # --- type B: non-spin fundamentals miss the first wedge character
    row("B2", "w1", CS, ((A1,), 1), "NotNormal", "NotSmooth",
        witness={"profile": prof(1, (A1, (0,))), "k": 2},
        l_weights=[prof(1, (A1, (2,))), prof(2, (A1, (0,)))]),
    row("B2", "w2", CS, ((A1,), 1), "Normal", "Smooth"),
    row("B3", "w1", CS, ((B2,), 1), "NotNormal", "NotSmooth",
        witness={"profile": prof(1, (B2, (0, 0))), "k": 2}),
    row("B3", "w2", CS, ((A1, A1), 1), "NotNormal", "NotSmooth",
        witness={"profile": prof(1, (A1, (0,)), (A1, (1,))), "k": 2}),
    row("B3", "w3", CS, ((A2,), 1), "Normal", "Smooth",
        l_weights=[prof(1, (A2, (0, 1))), prof(2, (A2, (0, 1))), prof(3, (A2, (0, 0)))]),
    # --- type C: last fundamental misses the second doubled wedge
    row("C2", "w1", CS, ((A1,), 1), "Normal", "Smooth"),
    row("C2", "w2", CS, ((A1,), 1), "NotNormal", "NotSmooth",
        witness={"profile": prof(1, (A1, (0,))), "k": 2}),
    row("C2", "hr", CS, ((A1,), 1), "Normal", "Smooth"),
    row("C3", "w1", CS, ((B2,), 1), "Normal", "NotSmooth",
        l_weights=[prof(1, (B2, (0, 1))), prof(2, (B2, (0, 0)))]),
    row("C3", "w2", CS, ((A1, A1), 1), "Normal", "NotSmooth",
        l_weights=[prof(1, (A1, (1,)), (A1, (1,))),
                   prof(2, (A1, (0,)), (A1, (0,))),
                   prof(2, (A1, (0,)), (A1, (2,))),
                   prof(3, (A1, (1,)), (A1, (1,))),
                   prof(4, (A1, (0,)), (A1, (0,)))]),
    row("C3", "w3", CS, ((A2,), 1), "NotNormal", "NotSmooth",
        witness={"profile": prof(1, (A2, (0, 1))), "k": 2},
        l_weights=[prof(1, (A2, (0, 2))), prof(2, (A2, (0, 2))), prof(3, (A2, (0, 0)))]),
    row("C3", "hr", CS, ((B2,), 1), "Normal", "NotSmooth"),
    # --- D4
    row("D4", "w1", CS, ((A3,), 1), "Normal", "NotSmooth"),
    row("D4", "w2", CS, ((A1, A1, A1), 1), "Normal", "NotSmooth"),
    row("D4", "w3", CS, ((A3,), 1), "Normal", "NotSmooth",
        l_weights=[prof(1, (A3, (0, 1, 0))), prof(2, (A3, (0, 0, 0)))]),
    row("D4", "w4", CS, ((A3,), 1), "Normal", "NotSmooth",
        l_weights=[prof(1, (A3, (0, 1, 0))), prof(2, (A3, (0, 0, 0)))]),
    # --- G2
    row("G2", "w1", EX, ((A1,), 1), "Normal", "Smooth",
        l_weights=[prof(1, (A1, (1,))), prof(2, (A1, (0,))),
                   prof(3, (A1, (1,))), prof(4, (A1, (0,)))]),
    row("G2", "w2", EX, ((A1,), 1), "NotNormal", "NotSmooth",
        witness={"profile": prof(1, (A1, (1,))), "k": 2},
        l_weights=[prof(1, (A1, (3,))), prof(2, (A1, (0,))), prof(2, (A1, (2,))),
                   prof(3, (A1, (3,))), prof(4, (A1, (0,)))]),
    # --- F4
    row("F4", "w1", EX, ((B3,), 1), "Normal", "NotSmooth",
        l_weights=[prof(1, (B3, (0, 0, 1))), prof(2, (B3, (0, 0, 0))),
                   prof(2, (B3, (1, 0, 0))), prof(3, (B3, (0, 0, 1))),
                   prof(4, (B3, (0, 0, 0)))]),
    row("F4", "w2", EX, ((A1, A2), 1), "Normal", "NotSmooth",
        l_weights=[prof(1, (A1, (1,)), (A2, (0, 1)))], exhaustive=False),
    row("F4", "w3", EX, ((A1, A2), 1), "NotNormal", "NotSmooth",
        witness={"profile": prof(1, (A1, (1,)), (A2, (0, 1))), "k": 2},
        l_weights=[prof(1, (A1, (1,)), (A2, (0, 2)))], exhaustive=False),
    row("F4", "w4", EX, ((C3,), 1), "NotNormal", "NotSmooth",
        witness={"profile": prof(1, (C3, (1, 0, 0))), "k": 2},
        l_weights=[prof(1, (C3, (0, 0, 1))), prof(2, (C3, (0, 0, 0))),
                   prof(2, (C3, (2, 0, 0))), prof(3, (C3, (0, 0, 1))),
                   prof(4, (C3, (0, 0, 0)))]),
    # --- E6 (stretch)
    row("E6", "w1", E6S, ((D5,), 1), "Normal", "NotSmooth",
        l_weights=[prof(1, (D5, (0, 0, 0, 0, 1))), prof(2, (D5, (1, 0, 0, 0, 0)))]),
]

SCOPES = {
    "classical-small": [r for r in ROWS if r["scope"] == CS],
    "exceptional-fg": [r for r in ROWS if r["scope"] == EX],
    "stretch-e6": [r for r in ROWS if r["scope"] == E6S],
}

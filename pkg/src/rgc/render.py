"""Canonical profiles and human-readable rendering of Levi data and weights.

A slice weight is summarized by its central content (an integer multiple of
the basic central character) together with its Dynkin labels on each simple
component of the Levi.  Profiles are canonicalized under the diagram
symmetries that the classical epsilon/pi notation cannot see: component flips
for A chains, the fork swap for D, and permutations of isomorphic factors.
"""

from fractions import Fraction
from math import gcd

from .linalg import vdot, vec


class ProfileError(ValueError):
    pass


def levi_signature(levi):
    return (tuple(sorted((s, l) for s, l, _ in levi.components)), levi.center_rank)


def _canonical_labels(series, labels):
    labels = tuple(labels)
    cands = [labels]
    if series == "A":
        cands.append(labels[::-1])
    if series == "D":
        swapped = labels[:-2] + (labels[-1], labels[-2])
        cands.append(swapped)
    return min(cands)


def component_labels(rs, levi, w):
    """Per-component canonical Dynkin label tuples of a weight, aligned with
    the components sorted by (series, rank); isomorphic factors are pooled."""
    per = []
    for series, l, chain in levi.components:
        labs = tuple(vdot(vec(w), rs.simple_coroots[i]) for i in chain)
        if any(x.denominator != 1 for x in map(Fraction, labs)):
            raise ProfileError("non-integral Levi labels")
        per.append((series, l, _canonical_labels(series, tuple(int(x) for x in labs))))
    # group isomorphic factors and sort labels within each group
    groups = {}
    for series, l, labs in per:
        groups.setdefault((series, l), []).append(labs)
    out = []
    for key in sorted(groups):
        out.append((key, tuple(sorted(groups[key]))))
    return tuple(out)


def central_content_functional(model, lam0, levi):
    """The rational functional measuring content along the 1-dim center.

    For a one-dimensional center the apex weight itself spans it; content is
    measured by the inner product with the apex, which is nonpositive on the
    vertex cone.
    """
    if levi.center_rank != 1:
        raise ProfileError("content profiles need a one-dimensional center")
    return vec(lam0)


def slice_profiles(model, lam0):
    """Canonical profiles of the nonzero slice weights at a dominant vertex.

    Returns (profiles, unit) where profiles is a sorted tuple of
    (content:int, labels) and unit is the rational content of one unit.
    """
    lam0 = vec(lam0)
    sl = model.local_slice(lam0)
    levi = sl.levi
    z = central_content_functional(model, lam0, levi)
    raw = []
    for w, _m in sl.slice_weights:
        raw.append((vdot(z, vec(w)), w))
    contents = [c for c, _ in raw if c != 0]
    unit = _content_unit(contents)
    profiles = []
    for c, w in raw:
        cc = c / unit if unit else Fraction(0)
        assert Fraction(cc).denominator == 1 and cc >= 0
        profiles.append((int(cc), component_labels(model.rs, levi, w)))
    return tuple(sorted(profiles)), unit


def weight_profile(model, lam0, w, unit):
    lam0 = vec(lam0)
    levi = model.local_slice(lam0).levi
    z = central_content_functional(model, lam0, levi)
    c = vdot(z, vec(w)) / unit if unit else Fraction(0)
    assert Fraction(c).denominator == 1
    return (int(c), component_labels(model.rs, levi, w))


def _content_unit(contents):
    """Negative generator of the group generated by the contents (the vertex
    cone points away from the apex, so slice contents are nonpositive)."""
    if not contents:
        return None
    denom = 1
    for c in contents:
        denom = denom * Fraction(c).denominator // gcd(denom, Fraction(c).denominator)
    ints = [int(Fraction(c) * denom) for c in contents]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    return Fraction(-g, denom)


# ---------------------------------------------------------------------------
# human-readable rendering
# ---------------------------------------------------------------------------

_SERIES_NAMES = {"A": "SL{n}", "B": "Spin{m}", "C": "Sp{m}", "D": "Spin{m}",
                 "E": "E{l}", "F": "F4", "G": "G2"}


def levi_name(levi):
    """Readable name of the Levi: component series plus central torus rank."""
    parts = []
    for series, l, _chain in sorted(levi.components, key=lambda c: c[2]):
        if series == "A":
            parts.append(f"SL{l + 1}")
        elif series == "B":
            parts.append(f"Spin{2 * l + 1}")
        elif series == "C":
            parts.append(f"Sp{2 * l}")
        elif series == "D":
            parts.append(f"Spin{2 * l}")
        else:
            parts.append(f"{series}{l}")
    if levi.center_rank:
        parts.append("T%d" % levi.center_rank)
    name = " x ".join(parts) if parts else "T0"
    if len(levi.components) == 1 and levi.components[0][0] == "A" and levi.center_rank == 1:
        name += f"  (GL{levi.components[0][1] + 1} up to isogeny)"
    return name


def format_weight(w):
    """Exact coordinate rendering of an ambient weight."""
    out = []
    for x in w:
        f = Fraction(x)
        out.append(str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}")
    return "(" + ", ".join(out) + ")"


def format_profile(profile):
    c, groups = profile
    bits = []
    if c:
        bits.append("eps'" if c == 1 else f"{c}*eps'")
    for (series, l), labs in groups:
        for lab in labs:
            if any(lab):
                bits.append(f"{series}{l}{list(lab)}")
    return " + ".join(bits) if bits else "0"

"""Analysis reports: assembly, JSON (schema rgc/1) and DOT serialization,
and the classification-table comparison harness."""

import os
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import classification, criteria, render
from .lie import build_root_system, parse_lie_type, parse_weights
from .model import CompactificationInput, build_model
from .linalg import vec

SCHEMA = "rgc/1"


def analyze(type_str, weights_str, cap=criteria.DEFAULT_CAP, check_fan=True,
            use_branching_generators=False):
    """Full analysis of the compactification for a type and weight list."""
    rs = build_root_system(parse_lie_type(type_str))
    weights = parse_weights(rs, weights_str)
    inp = CompactificationInput(rs.lie_type, weights)
    model = build_model(inp)
    report = {
        "schema": SCHEMA,
        "input": {
            "type": str(rs.lie_type),
            "weights": [tuple(w) for w in weights],
            "weights_str": weights_str,
            "character_lattice_rank": inp.char.rank,
            "character_lattice_basis": [tuple(b) for b in inp.char.basis()],
            "faithful_projective": inp.char.faithful,
            "full_weight_lattice": inp.char.is_full_weight_lattice,
        },
    }
    # closed orbits with slices
    closed = []
    for lam in model.dominant_vertices():
        sl = model.local_slice(lam)
        closed.append({
            "vertex": tuple(lam),
            "levi": {
                "components": [[s, l] for s, l in sorted((s, l) for s, l, _ in sl.levi.components)],
                "center_rank": sl.levi.center_rank,
                "name": render.levi_name(sl.levi),
            },
            "slice_weights": [[tuple(w), m] for w, m in sl.slice_weights],
            "slice_generators": [tuple(g) for g in sl.lgens],
            "vertex_cone_generators": [
                tuple(model.frame.vec_from_frame(g)) for g in sl.cone.generators],
        })
    report["closed_orbits"] = closed
    # orbit poset
    descs, edges = model.orbit_poset()
    orbits = []
    for i, d in enumerate(descs):
        f = d.face
        orbits.append({
            "index": i,
            "dim": d.dimension,
            "face_dim": f.dim,
            "label_roots": None if f.label_roots is None else list(f.label_roots),
            "colors": list(f.colors()),
            "n_face_points": len(f.points),
        })
    report["orbit_poset"] = {"orbits": orbits, "edges": sorted(edges)}
    # colored fan
    if check_fan:
        fan = model.colored_fan()
        report["colored_fan"] = {
            "covers_antidominant": True,
            "maximal_cones": [
                {"vertex": tuple(mc["vertex"]),
                 "generators": [tuple(g) for g in mc["cone"].generators],
                 "colors": list(mc["colors"])}
                for mc in fan.maximal_cones],
        }
    # criteria per closed orbit
    crit = []
    overall_normal, overall_smooth = "Normal", "Smooth"
    for lam in model.dominant_vertices():
        nr = criteria.normality_at(model, lam, cap=cap,
                                   use_branching_generators=use_branching_generators)
        sr = criteria.smoothness_at(model, lam)
        shortcut = criteria.known_normal_shortcuts(model, lam)
        tn = criteria.torus_closure_normal(model, lam)
        crit.append({
            "vertex": tuple(lam),
            "normality": _criterion_json(nr),
            "smoothness": _criterion_json(sr),
            "torus_closure_normal": tn,
            "shortcut": None if shortcut is None else
                {"case": shortcut[0], "weight": tuple(shortcut[1])},
        })
        if nr.verdict == "NotNormal":
            overall_normal = "NotNormal"
        elif nr.verdict == "Unknown" and overall_normal == "Normal":
            overall_normal = "Unknown"
        if sr.verdict == "NotSmooth":
            overall_smooth = "NotSmooth"
        elif sr.verdict == "Unknown" and overall_smooth == "Smooth":
            overall_smooth = "Unknown"
    report["criteria"] = crit
    report["overall"] = {"normal": overall_normal, "smooth": overall_smooth}
    report["_model"] = model  # stripped before serialization
    return report


def _criterion_json(r):
    out = {"verdict": r.verdict, "caps": dict(r.caps)}
    if r.provenance:
        out["provenance"] = r.provenance
    w = {}
    for k, v in r.witness.items():
        if k in ("missing", "multiple", "generator"):
            w[k] = tuple(v)
        elif k in ("all_missing", "unresolved"):
            w[k] = [tuple(x) for x in v]
        else:
            w[k] = v
    if w:
        out["witness"] = w
    return out


# ---------------------------------------------------------------------------
# JSON encoding: exact rationals as [numerator, denominator] decimal strings
# ---------------------------------------------------------------------------

def to_jsonable(obj):
    if isinstance(obj, Fraction):
        return [str(obj.numerator), str(obj.denominator)]
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, str):
        return obj
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items() if not str(k).startswith("_")}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x) for x in obj]
    raise TypeError(f"cannot serialize {type(obj)}")


def from_jsonable(obj):
    if isinstance(obj, list):
        if (len(obj) == 2 and all(isinstance(x, str) for x in obj)
                and all(_intlike(x) for x in obj)):
            return Fraction(int(obj[0]), int(obj[1]))
        return [from_jsonable(x) for x in obj]
    if isinstance(obj, dict):
        return {k: from_jsonable(v) for k, v in obj.items()}
    return obj


def _intlike(s):
    t = s[1:] if s[:1] == "-" else s
    return t.isdigit()


def report_to_json(report):
    import json
    return json.dumps(to_jsonable(report), indent=2, sort_keys=True)


def report_from_json(text):
    import json
    return from_jsonable(json.loads(text))


def normalize_report(report):
    """The report with exact values in decoded-JSON normal form (lists, no model)."""
    return from_jsonable(to_jsonable(report))


def cone_to_jsonable(cone):
    """Schema for rational cones: generator and facet covector lists."""
    return {
        "schema": SCHEMA,
        "generators": to_jsonable([[Fraction(x) for x in g] for g in cone.generators]),
        "facets": to_jsonable([[Fraction(x) for x in f] for f in cone.facet_normals]),
        "lineality": to_jsonable([[Fraction(x) for x in l] for l in cone.lineality]),
        "span_equations": to_jsonable([[Fraction(x) for x in e] for e in cone.span_eqs]),
    }


def polytope_to_jsonable(poly):
    return {
        "schema": SCHEMA,
        "vertices": to_jsonable([[Fraction(x) for x in v] for v in poly.vertices]),
        "facets": to_jsonable([[[Fraction(x) for x in n], Fraction(b)]
                               for n, b in poly.facets()]),
    }


# ---------------------------------------------------------------------------
# DOT output for the orbit poset
# ---------------------------------------------------------------------------

def orbit_poset_dot(report):
    lines = ["digraph orbits {", "  rankdir=BT;"]
    for o in report["orbit_poset"]["orbits"]:
        lab = f"dim {o['dim']}"
        if o["label_roots"] is not None:
            roots = ",".join(f"a{i + 1}" for i in o["label_roots"])
            lab += f"\\n[{roots}]" if roots else "\\n[]"
        if o["colors"]:
            lab += "\\ncolors " + ",".join(f"a{i + 1}" for i in o["colors"])
        lines.append(f'  n{o["index"]} [label="{lab}"];')
    for a, b in report["orbit_poset"]["edges"]:
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cone_dump(report):
    out = []
    for co in report["closed_orbits"]:
        out.append(f"vertex {render.format_weight(co['vertex'])}  levi {co['levi']['name']}")
        out.append("  vertex cone generators:")
        for g in co["vertex_cone_generators"]:
            out.append("    " + render.format_weight(g))
        out.append("  slice generators:")
        for g in co["slice_generators"]:
            out.append("    " + render.format_weight(g))
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# classification table comparison
# ---------------------------------------------------------------------------

def check_row(row, cap=criteria.DEFAULT_CAP):
    """Run one classification row and compare; returns (ok, mismatches, report)."""
    rs = build_root_system(parse_lie_type(row["group"]))
    weights = parse_weights(rs, row["weight"])
    inp = CompactificationInput(rs.lie_type, weights)
    model = build_model(inp)
    lam0 = weights[0]
    sl = model.local_slice(lam0)
    mism = []
    sig = render.levi_signature(sl.levi)
    if sig != tuple(row["levi"]):
        mism.append(f"levi {sig} != expected {row['levi']}")
    nr = criteria.normality_at(model, lam0, cap=cap)
    sr = criteria.smoothness_at(model, lam0)
    if nr.verdict != row["normality"]:
        mism.append(f"normality {nr.verdict} != expected {row['normality']}")
    if sr.verdict != row["smoothness"]:
        mism.append(f"smoothness {sr.verdict} != expected {row['smoothness']}")
    unit = None
    if row["l_weights"] is not None or row["witness"] is not None:
        profs, unit = render.slice_profiles(model, lam0)
        profs_set = set(profs)
    if row["witness"] is not None and nr.verdict == "NotNormal":
        wp = render.weight_profile(model, lam0, nr.witness["missing"], unit)
        if wp != row["witness"]["profile"]:
            mism.append(f"witness profile {wp} != expected {row['witness']['profile']}")
        if nr.witness["k"] != row["witness"]["k"]:
            mism.append(f"witness multiple {nr.witness['k']} != expected {row['witness']['k']}")
        if not nr.witness.get("missing_certified"):
            mism.append("witness absence is cap-bounded, not certified")
    if row["l_weights"] is not None:
        expected = set(map(_freeze, row["l_weights"]))
        got = set(map(_freeze, profs_set))
        if row["l_weights_exhaustive"]:
            if expected != got:
                mism.append(f"slice profiles {sorted(got)} != expected {sorted(expected)}")
        else:
            if not expected <= got:
                mism.append("expected slice profiles missing: "
                            f"{sorted(expected - got)}")
    if nr.verdict == "Unknown":
        mism.append("normality Unknown at the golden cap")
    return (not mism), mism, {"normality": nr, "smoothness": sr}


def _freeze(profile):
    c, groups = profile
    return (c, tuple((tuple(k), tuple(map(tuple, v))) for k, v in groups))


def run_scope(scope, cap=criteria.DEFAULT_CAP, allow_heavy=False):
    if scope not in classification.SCOPES:
        raise ValueError(f"unknown scope {scope!r}; choose from {sorted(classification.SCOPES)}")
    rows = classification.SCOPES[scope]
    if scope == "stretch-e6" and not allow_heavy:
        raise ValueError("stretch-e6 requires --allow-heavy")
    threads = max(1, int(os.environ.get("RGC_THREADS", "1")))
    results = [None] * len(rows)

    def work(i):
        row = rows[i]
        try:
            ok, mism, rep = check_row(row, cap=cap)
        except Exception as e:  # surfaced per row, keeps the table running
            ok, mism, rep = False, [f"error: {e}"], None
        return i, ok, mism, rep

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            for i, ok, mism, rep in ex.map(work, range(len(rows))):
                results[i] = (rows[i], ok, mism, rep)
    else:
        for i in range(len(rows)):
            _i, ok, mism, rep = work(i)
            results[i] = (rows[i], ok, mism, rep)
    return results

"""Command-line interface.

Exit codes: 0 all verdicts determined (and matching, for `table`);
1 table mismatch; 2 an Unknown verdict was encountered; 3 input error.
"""

import sys

import click

from . import classification, criteria, render, report as report_mod, reps
from .geometry import CapabilityError
from .lie import LieError, build_root_system, levi_datum, parse_lie_type, parse_weight


@click.group()
def main():
    """Orbit structure, colored fans, normality and smoothness of reductive
    group compactifications in projectivized operator spaces."""


def _fail_input(msg):
    click.echo(f"input error: {msg}", err=True)
    sys.exit(3)


@main.command()
@click.argument("lie_type")
@click.argument("weights")
@click.option("--json", "json_path", type=click.Path(), help="write the JSON report here")
@click.option("--dot", "dot_path", type=click.Path(), help="write the orbit poset in DOT form here")
@click.option("--cones", "cones_path", type=click.Path(), help="write a plain-text cone dump here")
@click.option("--cap", default=criteria.DEFAULT_CAP, show_default=True,
              help="tensor search degree cap")
@click.option("--branching-generators", is_flag=True,
              help="use the full branching list instead of the shifted-root generators")
def analyze(lie_type, weights, json_path, dot_path, cones_path, cap, branching_generators):
    """Analyze the compactification for LIE_TYPE acting with highest WEIGHTS.

    Example: analyze B3 w3      or:  analyze C2 "3*w1,2*w2"
    """
    try:
        rep = report_mod.analyze(lie_type, weights, cap=cap,
                                 use_branching_generators=branching_generators)
    except (LieError, ValueError) as e:
        _fail_input(e)
    except CapabilityError as e:
        click.echo(f"capability error: {e}", err=True)
        sys.exit(3)
    _print_report(rep)
    if json_path:
        with open(json_path, "w") as f:
            f.write(report_mod.report_to_json(rep))
    if dot_path:
        with open(dot_path, "w") as f:
            f.write(report_mod.orbit_poset_dot(rep))
    if cones_path:
        with open(cones_path, "w") as f:
            f.write(report_mod.cone_dump(rep))
    if "Unknown" in (rep["overall"]["normal"], rep["overall"]["smooth"]):
        sys.exit(2)


def _print_report(rep):
    inp = rep["input"]
    click.echo(f"group {inp['type']}  weights {inp['weights_str']}")
    click.echo(f"character lattice rank {inp['character_lattice_rank']}"
               + ("" if inp["faithful_projective"] else "  [projective action NOT faithful]")
               + ("" if inp["full_weight_lattice"] else
                  "  [proper sublattice of the simply connected weight lattice]"))
    click.echo(f"closed orbits: {len(rep['closed_orbits'])}")
    for co in rep["closed_orbits"]:
        click.echo(f"  vertex {render.format_weight(co['vertex'])}  L = {co['levi']['name']}")
        nz = [w for w, m in co["slice_weights"] if any(x != 0 for x in w)]
        click.echo(f"    nonzero slice weights ({len(nz)}):")
        for w in nz[:12]:
            click.echo(f"      {render.format_weight(w)}")
        if len(nz) > 12:
            click.echo(f"      ... and {len(nz) - 12} more")
    po = rep["orbit_poset"]
    click.echo(f"orbits: {len(po['orbits'])}")
    for o in po["orbits"]:
        lab = "" if o["label_roots"] is None else \
            " roots {" + ",".join(f"a{i+1}" for i in o["label_roots"]) + "}"
        cols = " colors {" + ",".join(f"a{i+1}" for i in o["colors"]) + "}" if o["colors"] else ""
        click.echo(f"  orbit {o['index']}: dim {o['dim']}{lab}{cols}")
    click.echo("adherence edges: " + ", ".join(f"{a}<{b}" for a, b in po["edges"]))
    if "colored_fan" in rep:
        click.echo(f"colored fan: {len(rep['colored_fan']['maximal_cones'])} maximal cones; "
                   "covers the antidominant cone")
    for c in rep["criteria"]:
        n = c["normality"]
        s = c["smoothness"]
        line = f"  at {render.format_weight(c['vertex'])}: normality {n['verdict']}"
        if n["verdict"] == "NotNormal":
            w = n["witness"]
            line += (f"  [missing {render.format_weight(w['missing'])}, "
                     f"{w['k']}x multiple present]")
        line += f"; smoothness {s['verdict']}"
        if s["verdict"] == "NotSmooth":
            line += f" [condition {s['witness']['condition']}]"
        line += f"; torus closure normal: {c['torus_closure_normal']}"
        if c["shortcut"]:
            line += f"; shortcut: {c['shortcut']['case']}"
        click.echo(line)
    click.echo(f"overall: X normal: {rep['overall']['normal']}, "
               f"smooth: {rep['overall']['smooth']}")


@main.command()
@click.argument("scope")
@click.option("--cap", default=criteria.DEFAULT_CAP, show_default=True)
@click.option("--allow-heavy", is_flag=True, help="enable the expensive stretch scopes")
def table(scope, cap, allow_heavy):
    """Reproduce the reference classification for a scope and compare."""
    try:
        results = report_mod.run_scope(scope, cap=cap, allow_heavy=allow_heavy)
    except ValueError as e:
        _fail_input(e)
    bad = 0
    unknown = 0
    for row, ok, mism, rep in results:
        status = "ok" if ok else "MISMATCH"
        click.echo(f"{row['group']:>3} {row['weight']:<4} "
                   f"expected {row['normality']}/{row['smoothness']:<10} {status}")
        for msg in mism:
            click.echo(f"      {msg}")
            if "Unknown" in msg:
                unknown += 1
        if not ok:
            bad += 1
    click.echo(f"{len(results) - bad}/{len(results)} rows match")
    if bad:
        sys.exit(2 if unknown and bad == unknown else 1)


@main.command()
@click.argument("lie_type")
@click.argument("lam")
@click.argument("mu")
def tensor(lie_type, lam, mu):
    """Decompose the tensor product of two irreducibles."""
    try:
        rs = build_root_system(parse_lie_type(lie_type))
        a = parse_weight(rs, lam)
        b = parse_weight(rs, mu)
        res = reps.tensor_decompose(rs, a, b)
    except (LieError, ValueError) as e:
        _fail_input(e)
    for w in sorted(res):
        click.echo(f"{render.format_weight(w)}  x{res[w]}")
    dims = sum(reps.weyl_dim(rs, w) * m for w, m in res.items())
    click.echo(f"total dim {dims} = {reps.weyl_dim(rs, a)} * {reps.weyl_dim(rs, b)}")


@main.command()
@click.argument("lie_type")
@click.argument("lam")
@click.argument("lam0")
def branch(lie_type, lam, lam0):
    """Restrict an irreducible to the Levi centralizing a dominant weight."""
    try:
        rs = build_root_system(parse_lie_type(lie_type))
        a = parse_weight(rs, lam)
        anchor = parse_weight(rs, lam0)
        levi = levi_datum(rs, anchor)
        res = reps.branch_to_levi(rs, a, levi.simple_root_indices)
    except (LieError, ValueError) as e:
        _fail_input(e)
    click.echo(f"L = {render.levi_name(levi)}")
    for w, m in res:
        click.echo(f"{render.format_weight(w)}  x{m}")


if __name__ == "__main__":
    main()

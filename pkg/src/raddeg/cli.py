"""Command line front end over workspace files.

Commands:

  radical-table WS            graded hom dimensions and irr valuations
  ar-quiver WS [--dot]        the AR quiver, as text or Graphviz DOT
  degree WS --morphism NAME --side left|right
  verify (WS | --all-fixtures) --theorem TOKEN
  compose-path WS --path f1,f2,...

Reports go to standard output and, with --out FILE, to that file with the
same bytes.  Exit codes: 0 when every verdict is verified or
hypothesis-not-met, 2 when any verifier reports a VIOLATION, 1 for usage,
parse, and lookup errors.  Output depends only on the input files, so
repeated runs are byte-identical.

Verifier report lines carry five fields in fixed order:

  theorem=...; fixture=...; clause=...; status=...; data=...

with one line per hypothesis (clause prefixed "hypothesis:"), one per
conclusion, and a final verdict line per report.  Clause status is pass,
fail, or skip; skip marks statements the machine cannot decide (for a
hypothesis) or that do not apply (for a conclusion).

The DOT template is fixed: one node per catalogue member, in catalogue
order, labeled `NAME\\n(dim-vector)` where the dim-vector lists vertex
dimensions for a quiver algebra and the total dimension otherwise; one
solid arrow per nonzero irr space labeled `(a,b)` with its valuation; one
dashed, constraint=false edge from each non-projective member to its
translate.
"""

import argparse
import math
import sys
from importlib.resources import as_file, files

from .errors import RaddegError
from .workspace import parse_workspace
from .radical import build_radical_table
from .catalogue import completeness_check
from .ar import almost_split_sequence, ar_quiver
from .modules import (decompose, is_injective, is_projective,
                      quotient_module, socle)
from .degrees import (
    degree_kernel_equivalence_check,
    degree_shift_check,
    finite_type_report,
    irreducible_sweep,
    kernel_comparison_check,
    kernel_iso_check,
    left_degree,
    mono_epi_degree_check,
    path_composition_report,
    right_degree,
    theorem_b_report,
)

THEOREMS = ("B", "C", "degree-kernel", "mono-epi", "shift", "kernel-iso",
            "finite-type", "kernel-comparison")

# composable chains of irr basis morphisms checked by `verify --theorem C`;
# the acceptance sweep pushes length further, the CLI default keeps each
# fixture run interactive
MAX_PATH_LEN = 3


def _fmt(value):
    return "infinite" if value is math.inf else str(value)


def _status(passed):
    if passed is True:
        return "pass"
    if passed is False:
        return "fail"
    return "skip"


def _report_lines(report):
    head = f"theorem={report.theorem}; fixture={report.fixture}"
    out = []
    for h in report.hypotheses:
        out.append(f"{head}; clause=hypothesis: {h.name}; "
                   f"status={_status(h.passed)}; data={h.data}")
    for c in report.conclusions:
        out.append(f"{head}; clause={c.name}; status={_status(c.passed)}; "
                   f"data={c.data}")
    out.append(f"{head}; clause=verdict; status={report.verdict}; data=")
    return out


def _require_catalogue(ws):
    if ws.catalogue is None:
        raise RaddegError(
            f"workspace {ws.name!r} has no catalogue; this command needs a "
            "[catalogue] section")
    return ws.catalogue


def _table_of(ws):
    cat = _require_catalogue(ws)
    report = completeness_check(cat)
    if not report["complete"]:
        kinds = ", ".join(sorted({e["kind"] for e in report["missing"]}))
        print(f"warning: the catalogue of {ws.name!r} fails the completeness "
              f"check ({len(report['missing'])} missing module(s): {kinds}); "
              "radical powers, degrees, and verdicts below are unreliable",
              file=sys.stderr)
    return build_radical_table(cat)


# ---------------------------------------------------------------------------
# commands


def _cmd_radical_table(ws):
    table = _table_of(ws)
    c = table.catalogue
    n = len(c)
    out = [f"fixture = {ws.name}",
           f"members = {' '.join(c.labels)}",
           f"nilpotency = {table.N}"]
    for m in range(table.N):
        out.append(f"rad^{m} dims:")
        for i in range(n):
            out.append("[" + " ".join(str(table.span(m, i, j).dim)
                                      for j in range(n)) + "]")
    out.append(f"rad^{table.N} = 0")
    out.append("irr spaces:")
    for i in range(n):
        for j in range(n):
            sp = table.irr_space(i, j)
            if sp.dim:
                out.append(f"irr {c.labels[i]} -> {c.labels[j]}: "
                           f"dim {sp.dim}, valuation ({sp.a},{sp.b})")
    return "\n".join(out) + "\n", 0


def _dim_vector(ws, m):
    if ws.presentation is None:
        return (m.dim,)
    A = ws.algebra
    dims = []
    for v in ws.presentation.vertices:
        dims.append(m.action[A.label_index(f"e_{v}")].rank())
    return tuple(dims)


def _render_dot(ws, quiver):
    c = ws.catalogue
    lines = ["digraph ar_quiver {", "  rankdir=LR;", "  node [shape=box];"]
    for lab, m in zip(c.labels, c.members):
        vec = ",".join(str(d) for d in _dim_vector(ws, m))
        lines.append(f'  "{lab}" [label="{lab}\\n({vec})"];')
    for src, tgt, (a, b) in quiver.arrows:
        lines.append(f'  "{src}" -> "{tgt}" [label="({a},{b})"];')
    for lab in c.labels:
        if lab in quiver.translation:
            lines.append(f'  "{lab}" -> "{quiver.translation[lab]}" '
                         "[style=dashed, constraint=false];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _cmd_ar_quiver(ws, dot):
    table = _table_of(ws)
    quiver = ar_quiver(table.catalogue, table)
    if dot:
        return _render_dot(ws, quiver), 0
    c = ws.catalogue
    out = [f"fixture = {ws.name}", f"members = {' '.join(quiver.labels)}"]
    for lab, m in zip(c.labels, c.members):
        vec = ",".join(str(d) for d in _dim_vector(ws, m))
        out.append(f"node {lab}: dim vector ({vec})")
    for src, tgt, (a, b) in quiver.arrows:
        out.append(f"arrow {src} -> {tgt}: valuation ({a},{b})")
    for lab in c.labels:
        if lab in quiver.translation:
            out.append(f"translate of {lab} = {quiver.translation[lab]}")
    return "\n".join(out) + "\n", 0


def _cmd_degree(ws, name, side):
    if name not in ws.morphisms:
        known = ", ".join(ws.morphisms) or "none"
        raise RaddegError(f"unknown morphism {name!r} (workspace declares: "
                          f"{known})")
    table = _table_of(ws)
    rep = (left_degree if side == "left" else right_degree)(
        table, ws.morphisms[name])
    c = table.catalogue
    out = [f"fixture = {ws.name}",
           f"morphism = {name}",
           f"map = {rep.description}",
           f"side = {rep.side}",
           f"depth = {_fmt(rep.depth)}",
           f"degree = {_fmt(rep.value)}",
           f"nilpotency bound = {rep.bound}"]
    if rep.witness is None:
        out.append("witness = none (no graded class dies below the bound)")
    else:
        w = rep.witness
        out += [f"witness member = {c.labels[w.member]}",
                f"witness depth = {_fmt(w.g_depth)}",
                f"witness composite depth = {_fmt(w.composite_depth)}"]
    return "\n".join(out) + "\n", 0


def _paths(table, max_len):
    """Composable chains of irr basis morphisms, lengths 2..max_len."""
    c = table.catalogue
    arrows = []
    for i in range(len(c)):
        for j in range(len(c)):
            for k, b in enumerate(table.irr_space(i, j).basis):
                arrows.append((i, j, f"{c.labels[i]}[{k}]>{c.labels[j]}", b))
    found = []

    def extend(tail_j, steps, names):
        if len(steps) >= 2:
            found.append((",".join(names), list(steps)))
        if len(steps) == max_len:
            return
        for i, j, name, b in arrows:
            if i == tail_j:
                extend(j, steps + [b], names + [name])

    for i, j, name, b in arrows:
        extend(j, [b], [name])
    return found


def _verify_reports(ws, theorem):
    table = _table_of(ws)
    c = table.catalogue
    name = ws.name
    reports = []
    if theorem in ("B", "degree-kernel", "mono-epi"):
        check = {"B": theorem_b_report,
                 "degree-kernel": degree_kernel_equivalence_check,
                 "mono-epi": mono_epi_degree_check}[theorem]
        for desc, f in irreducible_sweep(table):
            reports.append(check(table, f, fixture=f"{name}: {desc}"))
    elif theorem == "C":
        for desc, path in _paths(table, MAX_PATH_LEN):
            reports.append(path_composition_report(
                table, path, fixture=f"{name}: {desc}"))
    elif theorem == "shift":
        for lab, m in zip(c.labels, c.members):
            if not is_projective(m):
                reports.append(degree_shift_check(
                    table, m, fixture=f"{name}: {lab}"))
    elif theorem == "kernel-iso":
        for i in range(len(c)):
            for j in range(len(c)):
                basis = table.irr_space(i, j).basis
                for k in range(len(basis)):
                    for l in range(k, len(basis)):
                        reports.append(kernel_iso_check(
                            table, basis[k], basis[l],
                            fixture=f"{name}: irr {c.labels[i]} -> "
                                    f"{c.labels[j]} [{k},{l}]"))
    elif theorem == "finite-type":
        reports.append(finite_type_report(table, fixture=name))
    else:
        for lab, m in zip(c.labels, c.members):
            if not is_projective(m):
                seq = almost_split_sequence(m, c)
                if len(decompose(seq.middle)) == 2:
                    reports.append(kernel_comparison_check(
                        table, seq.inject,
                        fixture=f"{name}: almost split injection from "
                                f"translate of {lab}"))
            if is_injective(m):
                s, sincl = socle(m)
                if s.dim < m.dim:
                    q, qmap = quotient_module(m, sincl.matrix.rows)
                    if q.dim and len(decompose(q)) == 2:
                        reports.append(kernel_comparison_check(
                            table, qmap,
                            fixture=f"{name}: socle quotient of {lab}"))
    return reports


def _cmd_verify(workspaces, theorem):
    out = []
    totals = {"verified": 0, "hypothesis-not-met": 0, "VIOLATION": 0}
    for ws in workspaces:
        reports = _verify_reports(ws, theorem)
        counts = {"verified": 0, "hypothesis-not-met": 0, "VIOLATION": 0}
        for rep in reports:
            out.extend(_report_lines(rep))
            counts[rep.verdict] += 1
            totals[rep.verdict] += 1
        out.append(f"summary: theorem={theorem}; fixture={ws.name}; "
                   f"reports={len(reports)}; verified={counts['verified']}; "
                   f"hypothesis-not-met={counts['hypothesis-not-met']}; "
                   f"violations={counts['VIOLATION']}")
    if len(workspaces) > 1:
        total = sum(totals.values())
        out.append(f"total: theorem={theorem}; reports={total}; "
                   f"verified={totals['verified']}; "
                   f"hypothesis-not-met={totals['hypothesis-not-met']}; "
                   f"violations={totals['VIOLATION']}")
    code = 2 if totals["VIOLATION"] else 0
    return "\n".join(out) + "\n", code


def _cmd_compose_path(ws, path_arg):
    names = [s.strip() for s in path_arg.split(",") if s.strip()]
    if not names:
        raise RaddegError("--path needs a comma separated list of morphism "
                          "names")
    missing = [n for n in names if n not in ws.morphisms]
    if missing:
        known = ", ".join(ws.morphisms) or "none"
        raise RaddegError(f"unknown morphism(s) {', '.join(missing)} "
                          f"(workspace declares: {known})")
    table = _table_of(ws)
    rep = path_composition_report(table, [ws.morphisms[n] for n in names],
                                  fixture=f"{ws.name}: {','.join(names)}")
    code = 2 if rep.verdict == "VIOLATION" else 0
    return "\n".join(_report_lines(rep)) + "\n", code


def fixture_paths():
    """Shipped fixture files, in name order."""
    base = files("raddeg").joinpath("fixtures")
    return sorted((e for e in base.iterdir() if e.name.endswith(".rdg")),
                  key=lambda e: e.name)


def _fixture_workspaces():
    out = []
    for entry in fixture_paths():
        with as_file(entry) as p:
            out.append(parse_workspace(p))
    return out


# ---------------------------------------------------------------------------
# argument handling


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage, which the exit-code
    # contract reserves for violations
    def error(self, message):
        raise _UsageError(message)


def build_parser():
    p = _Parser(prog="raddeg",
                description="radical filtrations, AR quivers, and degrees "
                            "of irreducible morphisms over workspace files")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help_text, workspace="required"):
        q = sub.add_parser(name, help=help_text)
        if workspace == "required":
            q.add_argument("workspace", help="workspace file")
        elif workspace == "optional":
            q.add_argument("workspace", nargs="?", help="workspace file")
        q.add_argument("--out", help="also write the output to this file")
        return q

    add("radical-table", "print rad^n dimensions and irr valuations")

    q = add("ar-quiver", "print the AR quiver")
    q.add_argument("--dot", action="store_true", help="emit Graphviz DOT")

    q = add("degree", "degree of a named morphism")
    q.add_argument("--morphism", required=True, help="morphism name")
    q.add_argument("--side", required=True, choices=("left", "right"))

    q = add("verify", "check a theorem over a workspace or every shipped "
                      "fixture", workspace="optional")
    q.add_argument("--theorem", required=True, choices=THEOREMS)
    q.add_argument("--all-fixtures", action="store_true",
                   help="run over the shipped fixture files")

    q = add("compose-path", "factorization report for a composable chain "
                            "of named morphisms")
    q.add_argument("--path", required=True,
                   help="comma separated morphism names, travel order")
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 1
    try:
        if args.command == "verify":
            if args.all_fixtures == (args.workspace is not None):
                raise _UsageError(
                    "give a workspace file or --all-fixtures, not both")
            workspaces = (_fixture_workspaces() if args.all_fixtures
                          else [parse_workspace(args.workspace)])
            text, code = _cmd_verify(workspaces, args.theorem)
        else:
            ws = parse_workspace(args.workspace)
            if args.command == "radical-table":
                text, code = _cmd_radical_table(ws)
            elif args.command == "ar-quiver":
                text, code = _cmd_ar_quiver(ws, args.dot)
            elif args.command == "degree":
                text, code = _cmd_degree(ws, args.morphism, args.side)
            else:
                text, code = _cmd_compose_path(ws, args.path)
    except _UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 1
    except (RaddegError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    sys.stdout.write(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

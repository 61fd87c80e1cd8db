"""Line-oriented workspace files: field, algebra, modules, morphisms.

A workspace is a sequence of sections.  A section opens with a bracketed
header, `[kind]` or `[kind NAME]`, and holds `key = value` lines.  Blank
lines and lines starting with `#` are ignored.  A key with an empty value
introduces a matrix: each following line `[a b c ...]` is one row.  Field
elements are written the way the field formats them: plain integers over
GF(p), comma separated coefficient lists over GF(p^k) (low degree first),
and `num/den` over the rationals.

Section kinds, in the order a file normally lists them:

  [field]         name = GF(2) | GF(p^k) | QQ; optional modulus = c0,..,ck
                  for a non-default irreducible polynomial.
  [algebra]       type = quiver: a vertices line, one arrow line per arrow
                  (`arrow = a : u -> v`), optional relation lines and an
                  optional nilpotency bound; or type = structure-constants:
                  unit vector, optional labels, and one `mult <label> =`
                  table per basis element whose row j spans b_i * b_j.
  [module NAME]   either `dim = n` plus one `action <label> =` matrix per
                  algebra basis element, or, over a quiver algebra, the
                  shorthand `vertex <v> = d` plus `map <arrow> =` blocks
                  (unlisted vertices have dimension zero, unlisted arrows
                  act by zero).
  [morphism NAME] source, target, matrix; the matrix is source dim by
                  target dim and acts on row vectors from the right.
  [catalogue]     members = space separated module names, or
                  path = another workspace file whose catalogue is reused.

Relation syntax: terms joined by `+`, each term a path (arrow names in
travel order, space separated) optionally prefixed `coeff *`.  Paths read
first-arrow-first, matching composition order everywhere else in the
library.

Parsing validates everything it builds; emit then parse reproduces the
same objects, and emission is deterministic, so emitted files are stable
under round trips.
"""

import os

from .errors import FieldError, NotAdmissible, WorkspaceError
from .fields import GF, default_modulus, parse_field
from .linalg import Matrix
from .algebra import QuiverPresentation, from_path_algebra, from_structure_constants
from .modules import Module, Morphism
from .catalogue import Catalogue, validate_catalogue

_KINDS = ("field", "algebra", "module", "morphism", "catalogue")


class Workspace:
    """Parsed contents of one workspace file."""

    __slots__ = ("field", "algebra", "presentation", "modules", "morphisms",
                 "catalogue", "name")

    def __init__(self, field, algebra, presentation=None, modules=None,
                 morphisms=None, catalogue=None, name=None):
        self.field = field
        self.algebra = algebra
        self.presentation = presentation
        self.modules = dict(modules) if modules else {}
        self.morphisms = dict(morphisms) if morphisms else {}
        self.catalogue = catalogue
        self.name = name

    def __repr__(self):
        parts = [f"{len(self.modules)} modules",
                 f"{len(self.morphisms)} morphisms"]
        if self.catalogue is not None:
            parts.append(f"catalogue of {len(self.catalogue)}")
        return f"Workspace({self.name or '?'}: {', '.join(parts)})"


class _Entry:
    __slots__ = ("key", "value", "line", "rows")

    def __init__(self, key, value, line):
        self.key = key
        self.value = value
        self.line = line
        # rows is a list of (line, text) while the entry collects a matrix,
        # None for a plain scalar value
        self.rows = [] if value == "" else None


class _Section:
    __slots__ = ("kind", "name", "line", "entries")

    def __init__(self, kind, name, line):
        self.kind = kind
        self.name = name
        self.line = line
        self.entries = []


def _scan(text):
    sections = []
    current = None
    entry = None
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise WorkspaceError("unterminated bracket", line=ln)
            inner = line[1:-1].strip()
            head = inner.split(None, 1)
            if head and head[0] in _KINDS:
                name = head[1].strip() if len(head) > 1 else None
                current = _Section(head[0], name, ln)
                sections.append(current)
                entry = None
                continue
            # not a section header, so it must be a matrix row
            if entry is None or entry.rows is None:
                raise WorkspaceError(
                    "matrix row outside a matrix value (a header would start "
                    f"with one of {', '.join(_KINDS)})", line=ln)
            entry.rows.append((ln, inner))
            continue
        if current is None:
            raise WorkspaceError("content before the first section header",
                                 line=ln)
        if "=" not in line:
            raise WorkspaceError("expected 'key = value' or a section header",
                                 line=ln)
        key, _, value = line.partition("=")
        entry = _Entry(key.strip(), value.strip(), ln)
        if not entry.key:
            raise WorkspaceError("empty key", line=ln)
        current.entries.append(entry)
    return sections


def _parse_row(field, text, line, width=None):
    try:
        row = tuple(field.parse(tok) for tok in text.split())
    except FieldError as e:
        raise WorkspaceError(str(e), line=line)
    if width is not None and len(row) != width:
        raise WorkspaceError(f"expected {width} entries, got {len(row)}",
                             line=line)
    return row


def _matrix(field, entry, nrows, ncols):
    if entry.rows is None:
        raise WorkspaceError(
            f"{entry.key!r} takes a matrix: leave the value empty and list "
            "one bracketed row per following line", line=entry.line)
    if len(entry.rows) != nrows:
        raise WorkspaceError(
            f"{entry.key!r} needs {nrows} rows, got {len(entry.rows)}",
            line=entry.line)
    rows = [_parse_row(field, text, ln, ncols) for ln, text in entry.rows]
    return Matrix(field, rows, ncols=ncols)


def _vector(field, entry, width=None):
    v = entry.value
    if not (v.startswith("[") and v.endswith("]")):
        raise WorkspaceError(f"{entry.key!r} takes a bracketed vector",
                             line=entry.line)
    return _parse_row(field, v[1:-1], entry.line, width)


def _scalar(entry):
    if entry.rows is not None:
        raise WorkspaceError(f"{entry.key!r} takes a plain value, not a matrix",
                             line=entry.line)
    return entry.value


def _int(entry, minimum=None):
    try:
        n = int(_scalar(entry))
    except ValueError:
        raise WorkspaceError(f"{entry.key!r} must be an integer",
                             line=entry.line)
    if minimum is not None and n < minimum:
        raise WorkspaceError(f"{entry.key!r} must be at least {minimum}",
                             line=entry.line)
    return n


def _unique(section, key):
    hits = [e for e in section.entries if e.key == key]
    if len(hits) > 1:
        raise WorkspaceError(f"duplicate key {key!r}", line=hits[1].line)
    return hits[0] if hits else None


def _check_keys(section, allowed):
    """allowed maps a first key word to True (whole key) or 'prefix'."""
    for e in section.entries:
        first = e.key.split()[0]
        rule = allowed.get(first)
        if rule is None or (rule is True and e.key != first):
            raise WorkspaceError(
                f"unknown key {e.key!r} in [{section.kind}]", line=e.line)


def _check_name(section):
    if not section.name:
        raise WorkspaceError(f"[{section.kind}] section needs a name",
                             line=section.line)
    if any(c in section.name for c in ",*") or any(
            c.isspace() for c in section.name):
        raise WorkspaceError(
            f"{section.kind} name {section.name!r} may not contain "
            "whitespace, ',' or '*'", line=section.line)


# ---------------------------------------------------------------------------
# section builders


def _build_field(section):
    _check_keys(section, {"name": True, "modulus": True})
    name = _unique(section, "name")
    if name is None:
        raise WorkspaceError("[field] needs a name key", line=section.line)
    try:
        F = parse_field(_scalar(name))
    except FieldError as e:
        raise WorkspaceError(str(e), line=name.line)
    modulus = _unique(section, "modulus")
    if modulus is not None:
        if F.char == 0 or F.degree == 1:
            raise WorkspaceError("modulus only applies to extension fields",
                                 line=modulus.line)
        try:
            coeffs = tuple(int(t) for t in _scalar(modulus).split(","))
            F = GF(F.char, F.degree, modulus=coeffs)
        except (ValueError, FieldError) as e:
            raise WorkspaceError(f"bad modulus: {e}", line=modulus.line)
    return F


def _parse_relation(field, entry, arrow_map):
    """One relation line -> tuple of (coefficient, path) terms.

    Checks the admissibility conditions that can be pinned to this line:
    every term is a composable path of length >= 2 and all terms are
    parallel.  Matching checks in the algebra constructor then never fire
    for workspace input, which keeps the error location on the relation.
    """
    terms = []
    for part in _scalar(entry).split("+"):
        part = part.strip()
        if not part:
            raise WorkspaceError("empty relation term", line=entry.line)
        if "*" in part:
            coeff_txt, _, path_txt = part.partition("*")
            try:
                coeff = field.parse(coeff_txt.strip())
            except FieldError as e:
                raise WorkspaceError(str(e), line=entry.line)
        else:
            coeff, path_txt = field.one, part
        path = tuple(path_txt.split())
        if not path:
            raise WorkspaceError("relation term has no arrows", line=entry.line)
        for a in path:
            if a not in arrow_map:
                raise WorkspaceError(f"unknown arrow {a!r} in relation",
                                     line=entry.line)
        if len(path) < 2:
            raise NotAdmissible(
                f"line {entry.line}: relation term shorter than two arrows")
        for a, b in zip(path, path[1:]):
            if arrow_map[a][1] != arrow_map[b][0]:
                raise NotAdmissible(
                    f"line {entry.line}: relation term is not a composable path")
        ends = (arrow_map[path[0]][0], arrow_map[path[-1]][1])
        if terms and ends != terms[-1][2]:
            raise NotAdmissible(
                f"line {entry.line}: relation terms are not parallel")
        terms.append((coeff, path, ends))
    return tuple((c, p) for c, p, _ in terms)


def _build_quiver(field, section):
    _check_keys(section, {"type": True, "vertices": True, "arrow": True,
                          "relation": True, "nilpotency": True})
    vent = _unique(section, "vertices")
    if vent is None:
        raise WorkspaceError("quiver algebra needs a vertices key",
                             line=section.line)
    vertices = _scalar(vent).split()
    if len(set(vertices)) != len(vertices):
        raise WorkspaceError("duplicate vertex names", line=vent.line)
    for v in vertices:
        if "*" in v:
            raise WorkspaceError(f"vertex name {v!r} may not contain '*'",
                                 line=vent.line)
    arrows = []
    arrow_map = {}
    for e in section.entries:
        if e.key != "arrow":
            continue
        head, sep, rest = _scalar(e).partition(":")
        name = head.strip()
        src, sep2, tgt = rest.partition("->")
        src, tgt = src.strip(), tgt.strip()
        if not sep or not sep2 or not name or not src or not tgt:
            raise WorkspaceError("arrow syntax is 'name : source -> target'",
                                 line=e.line)
        if "*" in name:
            raise WorkspaceError(f"arrow name {name!r} may not contain '*'",
                                 line=e.line)
        if name in arrow_map:
            raise WorkspaceError(f"duplicate arrow name {name!r}", line=e.line)
        if src not in vertices or tgt not in vertices:
            raise WorkspaceError(f"arrow {name!r} has an undeclared endpoint",
                                 line=e.line)
        arrows.append((name, src, tgt))
        arrow_map[name] = (src, tgt)
    relations = [_parse_relation(field, e, arrow_map)
                 for e in section.entries if e.key == "relation"]
    nent = _unique(section, "nilpotency")
    nilpotency = None
    if nent is not None:
        nilpotency = _int(nent)
        if nilpotency < 2:
            raise NotAdmissible(
                f"line {nent.line}: nilpotency bound must be at least 2")
    pres = QuiverPresentation(field, vertices, arrows, relations, nilpotency)
    try:
        algebra = from_path_algebra(pres)
    except NotAdmissible as e:
        raise NotAdmissible(f"line {section.line}: {e}")
    return pres, algebra


def _build_structure_constants(field, section):
    _check_keys(section, {"type": True, "labels": True, "unit": True,
                          "mult": "prefix"})
    uent = _unique(section, "unit")
    if uent is None:
        raise WorkspaceError("structure-constants algebra needs a unit vector",
                             line=section.line)
    unit = _vector(field, uent)
    n = len(unit)
    if n == 0:
        raise WorkspaceError("unit vector is empty", line=uent.line)
    lent = _unique(section, "labels")
    if lent is not None:
        labels = tuple(_scalar(lent).split())
        if len(labels) != n:
            raise WorkspaceError(f"expected {n} labels, got {len(labels)}",
                                 line=lent.line)
    else:
        labels = tuple(f"b{i}" for i in range(n))
    tables = [None] * n
    for e in section.entries:
        parts = e.key.split()
        if parts[0] != "mult":
            continue
        if len(parts) != 2:
            raise WorkspaceError("mult key syntax is 'mult <basis element>'",
                                 line=e.line)
        tok = parts[1]
        if tok in labels:
            i = labels.index(tok)
        else:
            try:
                i = int(tok)
            except ValueError:
                raise WorkspaceError(f"unknown basis element {tok!r}",
                                     line=e.line)
            if not 0 <= i < n:
                raise WorkspaceError(f"basis index {i} out of range 0..{n - 1}",
                                     line=e.line)
        if tables[i] is not None:
            raise WorkspaceError(f"duplicate mult table for {tok!r}",
                                 line=e.line)
        tables[i] = _matrix(field, e, n, n)
    missing = [labels[i] for i in range(n) if tables[i] is None]
    if missing:
        raise WorkspaceError(
            f"missing mult table(s) for {', '.join(missing)}",
            line=section.line)
    mult = [[tuple(tables[i].rows[j]) for j in range(n)] for i in range(n)]
    return None, from_structure_constants(field, mult, unit, labels=labels)


def _build_algebra(field, section):
    tent = _unique(section, "type")
    if tent is None:
        raise WorkspaceError("[algebra] needs a type key", line=section.line)
    kind = _scalar(tent)
    if kind == "quiver":
        return _build_quiver(field, section)
    if kind == "structure-constants":
        return _build_structure_constants(field, section)
    raise WorkspaceError(
        f"unknown algebra type {kind!r} (quiver or structure-constants)",
        line=tent.line)


def _arrow_block_matrix(field, n, offsets, dims, arrow, block):
    rows = [[field.zero] * n for _ in range(n)]
    _name, src, tgt = arrow
    r0, c0 = offsets[src], offsets[tgt]
    for i in range(dims[src]):
        for j in range(dims[tgt]):
            rows[r0 + i][c0 + j] = block.rows[i][j]
    return Matrix(field, rows, ncols=n)


def _build_module_shorthand(algebra, pres, section):
    field = algebra.field
    dims = {v: 0 for v in pres.vertices}
    seen = set()
    maps = {}
    for e in section.entries:
        parts = e.key.split()
        if parts[0] == "vertex":
            if len(parts) != 2 or parts[1] not in dims:
                raise WorkspaceError(f"unknown vertex in key {e.key!r}",
                                     line=e.line)
            if parts[1] in seen:
                raise WorkspaceError(f"duplicate vertex {parts[1]!r}",
                                     line=e.line)
            seen.add(parts[1])
            dims[parts[1]] = _int(e, minimum=0)
        elif parts[0] == "map":
            if len(parts) != 2:
                raise WorkspaceError("map key syntax is 'map <arrow>'",
                                     line=e.line)
            if parts[1] in maps:
                raise WorkspaceError(f"duplicate map for arrow {parts[1]!r}",
                                     line=e.line)
            maps[parts[1]] = e
    offsets = {}
    n = 0
    for v in pres.vertices:
        offsets[v] = n
        n += dims[v]
    arrow_of = {a[0]: a for a in pres.arrows}
    full = {}
    for name, e in maps.items():
        if name not in arrow_of:
            raise WorkspaceError(f"unknown arrow {name!r}", line=e.line)
        _n, src, tgt = arrow_of[name]
        block = _matrix(field, e, dims[src], dims[tgt])
        full[name] = _arrow_block_matrix(field, n, offsets, dims,
                                         arrow_of[name], block)
    zero = Matrix.zero(field, n, n)
    for name in arrow_of:
        full.setdefault(name, zero)

    action = []
    for label in algebra.labels:
        if label.startswith("e_"):
            v = label[2:]
            rows = [[field.zero] * n for _ in range(n)]
            for i in range(offsets[v], offsets[v] + dims[v]):
                rows[i][i] = field.one
            action.append(Matrix(field, rows, ncols=n))
        else:
            mat = Matrix.identity(field, n)
            for name in label.split("*"):
                mat = mat * full[name]
            action.append(mat)
    return Module(algebra, action, name=section.name)


def _build_module_generic(algebra, section):
    field = algebra.field
    dent = _unique(section, "dim")
    if dent is None:
        raise WorkspaceError("module needs a dim key (or the quiver "
                             "vertex/map shorthand)", line=section.line)
    n = _int(dent, minimum=0)
    entries = {}
    for e in section.entries:
        parts = e.key.split(None, 1)
        if parts[0] != "action":
            continue
        if len(parts) != 2:
            raise WorkspaceError("action key syntax is 'action <basis label>'",
                                 line=e.line)
        label = parts[1]
        if label not in algebra.labels:
            raise WorkspaceError(f"unknown basis element {label!r}",
                                 line=e.line)
        if label in entries:
            raise WorkspaceError(f"duplicate action for {label!r}",
                                 line=e.line)
        entries[label] = e
    missing = [lab for lab in algebra.labels if lab not in entries]
    if missing:
        raise WorkspaceError(
            f"missing action matrices for {', '.join(missing)}",
            line=section.line)
    action = [_matrix(field, entries[lab], n, n) for lab in algebra.labels]
    return Module(algebra, action, name=section.name)


def _build_module(algebra, pres, section):
    _check_name(section)
    kinds = {e.key.split()[0] for e in section.entries}
    shorthand = kinds & {"vertex", "map"}
    generic = kinds & {"dim", "action"}
    if shorthand and generic:
        raise WorkspaceError(
            f"module {section.name!r} mixes the dim/action and vertex/map "
            "encodings", line=section.line)
    unknown = kinds - {"vertex", "map", "dim", "action"}
    if unknown:
        bad = next(e for e in section.entries
                   if e.key.split()[0] in unknown)
        raise WorkspaceError(f"unknown key {bad.key!r} in [module]",
                             line=bad.line)
    if shorthand:
        if pres is None:
            raise WorkspaceError(
                "vertex/map shorthand needs a quiver presentation algebra",
                line=section.line)
        return _build_module_shorthand(algebra, pres, section)
    return _build_module_generic(algebra, section)


def _lookup_module(modules, entry):
    name = _scalar(entry)
    if name not in modules:
        raise WorkspaceError(f"unknown module {name!r}", line=entry.line)
    return modules[name]


def _build_morphism(modules, section):
    _check_name(section)
    _check_keys(section, {"source": True, "target": True, "matrix": True})
    sent = _unique(section, "source")
    tent = _unique(section, "target")
    ment = _unique(section, "matrix")
    for key, ent in (("source", sent), ("target", tent), ("matrix", ment)):
        if ent is None:
            raise WorkspaceError(f"morphism {section.name!r} needs a {key} key",
                                 line=section.line)
    src = _lookup_module(modules, sent)
    tgt = _lookup_module(modules, tent)
    mat = _matrix(src.algebra.field, ment, src.dim, tgt.dim)
    return Morphism(src, tgt, mat)


def _same_algebra(a, b):
    return (a.field == b.field and a.labels == b.labels
            and a.unit == b.unit and a.mult == b.mult)


def _build_catalogue(algebra, modules, section, base_dir):
    _check_keys(section, {"members": True, "path": True})
    ment = _unique(section, "members")
    pent = _unique(section, "path")
    if (ment is None) == (pent is None):
        raise WorkspaceError("[catalogue] takes exactly one of members/path",
                             line=section.line)
    if pent is not None:
        ref_path = os.path.join(base_dir, _scalar(pent))
        if not os.path.exists(ref_path):
            raise WorkspaceError(f"referenced workspace {ref_path!r} not found",
                                 line=pent.line)
        ref = parse_workspace(ref_path)
        if ref.catalogue is None:
            raise WorkspaceError(
                f"referenced workspace {ref_path!r} has no catalogue",
                line=pent.line)
        if not _same_algebra(ref.algebra, algebra):
            raise WorkspaceError(
                "referenced catalogue lives over a different algebra",
                line=pent.line)
        # rehang the members on this file's algebra object so identity
        # checks across the two sources agree
        members = [Module(algebra, m.action, name=lab, validate=False)
                   for m, lab in zip(ref.catalogue.members, ref.catalogue.labels)]
        return Catalogue(algebra, members, ref.catalogue.labels)
    names = _scalar(ment).split()
    if not names:
        raise WorkspaceError("empty members list", line=ment.line)
    if len(set(names)) != len(names):
        raise WorkspaceError("duplicate catalogue member", line=ment.line)
    members = []
    for name in names:
        if name not in modules:
            raise WorkspaceError(f"unknown module {name!r}", line=ment.line)
        members.append(modules[name])
    cat = Catalogue(algebra, members, names)
    report = validate_catalogue(cat)
    if not report["ok"]:
        bad = []
        if report["decomposable"]:
            bad.append("decomposable: " + ", ".join(report["decomposable"]))
        if report["isomorphic_pairs"]:
            bad.append("isomorphic: " + ", ".join(
                f"{a}~{b}" for a, b in report["isomorphic_pairs"]))
        raise WorkspaceError("catalogue laws fail (" + "; ".join(bad) + ")",
                             line=section.line)
    return cat


# ---------------------------------------------------------------------------
# entry points


def parse_workspace_text(text, name=None, base_dir="."):
    field = None
    presentation = None
    algebra = None
    modules = {}
    morphisms = {}
    catalogue = None
    for section in _scan(text):
        if section.kind == "field":
            if field is not None:
                raise WorkspaceError("duplicate [field] section",
                                     line=section.line)
            field = _build_field(section)
        elif section.kind == "algebra":
            if field is None:
                raise WorkspaceError("[algebra] before [field]",
                                     line=section.line)
            if algebra is not None:
                raise WorkspaceError("duplicate [algebra] section",
                                     line=section.line)
            presentation, algebra = _build_algebra(field, section)
        else:
            if algebra is None:
                raise WorkspaceError(
                    f"[{section.kind}] before the [algebra] section",
                    line=section.line)
            if section.kind == "module":
                if section.name in modules:
                    raise WorkspaceError(
                        f"duplicate module name {section.name!r}",
                        line=section.line)
                modules[section.name] = _build_module(algebra, presentation,
                                                      section)
            elif section.kind == "morphism":
                if section.name in morphisms:
                    raise WorkspaceError(
                        f"duplicate morphism name {section.name!r}",
                        line=section.line)
                morphisms[section.name] = _build_morphism(modules, section)
            else:
                if catalogue is not None:
                    raise WorkspaceError("duplicate [catalogue] section",
                                         line=section.line)
                catalogue = _build_catalogue(algebra, modules, section,
                                             base_dir)
    if field is None:
        raise WorkspaceError("missing field block")
    if algebra is None:
        raise WorkspaceError("missing algebra block")
    return Workspace(field, algebra, presentation=presentation,
                     modules=modules, morphisms=morphisms,
                     catalogue=catalogue, name=name)


def parse_workspace(path):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    stem = os.path.splitext(os.path.basename(path))[0]
    return parse_workspace_text(text, name=stem,
                                base_dir=os.path.dirname(path) or ".")


def _field_spec(F):
    if F.char == 0:
        return "QQ"
    if F.degree == 1:
        return f"GF({F.char})"
    return f"GF({F.char}^{F.degree})"


def _emit_matrix(out, field, key, mat):
    out.append(f"{key} =")
    for row in mat.rows:
        out.append("[" + " ".join(field.format(x) for x in row) + "]")


def _emit_relation(field, rel):
    parts = []
    for coeff, path in rel:
        text = " ".join(path)
        if coeff != field.one:
            text = f"{field.format(coeff)} * {text}"
        parts.append(text)
    return " + ".join(parts)


def emit_workspace(ws):
    """Render a workspace back to its file format, deterministically."""
    F = ws.field
    out = ["[field]", f"name = {_field_spec(F)}"]
    if F.char and F.degree > 1 and F.modulus != default_modulus(F.char, F.degree):
        out.append("modulus = " + ",".join(str(c) for c in F.modulus))
    out.append("")
    out.append("[algebra]")
    if ws.presentation is not None:
        pres = ws.presentation
        out.append("type = quiver")
        out.append("vertices = " + " ".join(pres.vertices))
        for name, src, tgt in pres.arrows:
            out.append(f"arrow = {name} : {src} -> {tgt}")
        for rel in pres.relations:
            out.append("relation = " + _emit_relation(F, rel))
        if pres.nilpotency is not None:
            out.append(f"nilpotency = {pres.nilpotency}")
    else:
        A = ws.algebra
        out.append("type = structure-constants")
        out.append("labels = " + " ".join(A.labels))
        out.append("unit = [" + " ".join(F.format(x) for x in A.unit) + "]")
        for i, lab in enumerate(A.labels):
            table = Matrix(F, [list(A.mult[i][j]) for j in range(A.dim)],
                           ncols=A.dim)
            _emit_matrix(out, F, f"mult {lab}", table)

    modules = dict(ws.modules)
    if ws.catalogue is not None:
        for lab, m in zip(ws.catalogue.labels, ws.catalogue.members):
            if any(x is m for x in modules.values()):
                continue
            if lab in modules:
                raise WorkspaceError(
                    f"catalogue member label {lab!r} collides with an "
                    "unrelated module name")
            modules[lab] = m
    names_of = {id(m): name for name, m in modules.items()}

    for name, m in modules.items():
        out.append("")
        out.append(f"[module {name}]")
        out.append(f"dim = {m.dim}")
        for lab, mat in zip(ws.algebra.labels, m.action):
            _emit_matrix(out, F, f"action {lab}", mat)
    for name, f in ws.morphisms.items():
        out.append("")
        out.append(f"[morphism {name}]")
        for key, mod in (("source", f.source), ("target", f.target)):
            ref = names_of.get(id(mod))
            if ref is None:
                raise WorkspaceError(
                    f"morphism {name!r} references a module outside the "
                    "workspace")
            out.append(f"{key} = {ref}")
        _emit_matrix(out, F, "matrix", f.matrix)
    if ws.catalogue is not None:
        out.append("")
        out.append("[catalogue]")
        refs = []
        for lab, m in zip(ws.catalogue.labels, ws.catalogue.members):
            ref = names_of.get(id(m))
            if ref is None:
                raise WorkspaceError(
                    f"catalogue member {lab!r} is not a workspace module")
            refs.append(ref)
        out.append("members = " + " ".join(refs))
    out.append("")
    return "\n".join(out)


def write_workspace(ws, path):
    text = emit_workspace(ws)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    return text

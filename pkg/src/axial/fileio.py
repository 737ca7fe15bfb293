"""Line-oriented text format for algebras given by structure constants.

A file is a sequence of directives; blank lines and `#` comments are skipped.

    field QQ                     rational (default) or QI for Gaussian rationals
    dim 2
    basis e1 e2
    product 1 2: -1 e1, -1 e2   sparse products, 1-based indices i <= j;
                                 omitted products are zero
    element a4: -1 e1, -1 e2    named element as a combination of basis names
    set X12: e1 e2              named element set; entries are basis or
                                 element names
    law FB: 1 -1                fusion-law values; the unit row is filled in
                                 automatically (1*1={1}, 1*v={v} for v not in
                                 {0,1}, 1*0 empty)
    cell FB -1 -1: 1            non-unit law cell contents (may be empty)
    cocycle th 1 2: 1           symmetric cocycle entries, 1-based, i <= j

Scalars use the grammar of render_scalar / parse_scalar ('3', '-1/2', '1+2i').
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import Algebra
from .errors import AxialError
from .extension import Cocycle
from .fusion import FusionLaw
from .scalars import FieldTag, Scalar, parse_scalar, render_scalar


class AlgebraFileError(AxialError):
    pass


@dataclass
class AlgebraFile:
    algebra: Algebra
    elements: dict = field(default_factory=dict)   # name -> coefficient tuple
    sets: dict = field(default_factory=dict)       # name -> tuple of elements
    laws: dict = field(default_factory=dict)       # name -> FusionLaw
    cocycles: dict = field(default_factory=dict)   # name -> Cocycle

    def resolve(self, name):
        """Element by basis label or defined element name."""
        if name in self.elements:
            return self.elements[name]
        labels = self.algebra.labels
        if labels and name in labels:
            return self.algebra.basis_element(labels.index(name))
        raise AlgebraFileError(f"unknown element name {name!r}")


def _split_combo(text):
    return [part.strip() for part in text.split(",") if part.strip()]


def _parse_combo(text, labels, tag, where):
    """'c name, c name, ...' -> dict basis-index -> Scalar."""
    out = {}
    for part in _split_combo(text):
        bits = part.split()
        if len(bits) != 2:
            raise AlgebraFileError(f"{where}: expected 'coeff name', got {part!r}")
        coeff = parse_scalar(bits[0], tag)
        if bits[1] not in labels:
            raise AlgebraFileError(f"{where}: unknown basis name {bits[1]!r}")
        j = labels.index(bits[1])
        out[j] = out.get(j, Scalar.zero(tag)) + coeff
    return {j: c for j, c in out.items() if c}


def parse_algebra_file(text):
    tag = FieldTag.QQ
    dim = None
    labels = None
    products = {}
    raw_elements = []   # (name, combo text, line no)
    raw_sets = []
    raw_laws = []       # (name, values text)
    raw_cells = []      # (law, a, b, contents)
    raw_cocycles = {}   # name -> {(i, j): Scalar}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        where = f"line {lineno}"
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "field":
            if rest == "QQ":
                tag = FieldTag.QQ
            elif rest == "QI":
                tag = FieldTag.QI
            else:
                raise AlgebraFileError(f"{where}: unknown field tag {rest!r}")
        elif head == "dim":
            dim = int(rest)
        elif head == "basis":
            labels = tuple(rest.split())
        elif head == "product":
            if dim is None or labels is None:
                raise AlgebraFileError(f"{where}: product before dim/basis")
            spec, _, combo = rest.partition(":")
            try:
                i, j = (int(t) for t in spec.split())
            except ValueError:
                raise AlgebraFileError(f"{where}: product wants two indices")
            if not (1 <= i <= j <= dim):
                raise AlgebraFileError(f"{where}: product indices out of range")
            entry = _parse_combo(combo, labels, tag, where)
            if entry:
                products[(i - 1, j - 1)] = entry
        elif head == "element":
            name, _, combo = rest.partition(":")
            raw_elements.append((name.strip(), combo, where))
        elif head == "set":
            name, _, members = rest.partition(":")
            raw_sets.append((name.strip(), members.split(), where))
        elif head == "law":
            name, _, values = rest.partition(":")
            raw_laws.append((name.strip(), values.split(), where))
        elif head == "cell":
            spec, _, contents = rest.partition(":")
            bits = spec.split()
            if len(bits) != 3:
                raise AlgebraFileError(f"{where}: cell wants law name and two values")
            raw_cells.append((bits[0], bits[1], bits[2], contents.split(), where))
        elif head == "cocycle":
            spec, _, value = rest.partition(":")
            bits = spec.split()
            if len(bits) != 3:
                raise AlgebraFileError(f"{where}: cocycle wants name and two indices")
            name, i, j = bits[0], int(bits[1]), int(bits[2])
            if dim is None or not (1 <= i <= j <= dim):
                raise AlgebraFileError(f"{where}: cocycle indices out of range")
            raw_cocycles.setdefault(name, {})[(i - 1, j - 1)] = \
                parse_scalar(value.strip(), tag)
        else:
            raise AlgebraFileError(f"{where}: unknown directive {head!r}")

    if dim is None:
        raise AlgebraFileError("missing 'dim' directive")
    if labels is None:
        labels = tuple(f"b{k+1}" for k in range(dim))
    if len(labels) != dim:
        raise AlgebraFileError("basis name count does not match dim")
    algebra = Algebra(dim, products, tag, labels)

    out = AlgebraFile(algebra)
    for name, combo, where in raw_elements:
        entry = _parse_combo(combo, labels, tag, where)
        out.elements[name] = algebra.element(entry)
    for name, members, where in raw_sets:
        out.sets[name] = tuple(out.resolve(m) for m in members)
    one, zero = Scalar.one(tag), Scalar.zero(tag)
    for name, values, where in raw_laws:
        vals = [parse_scalar(v, tag) for v in values]
        table = {(one, one): {one}} if one in vals else {}
        for v in vals:
            if v != one and v != zero:
                table[(one, v)] = {v}
        out.laws[name] = FusionLaw(vals, table, tag)
    for law_name, a, b, contents, where in raw_cells:
        if law_name not in out.laws:
            raise AlgebraFileError(f"{where}: unknown law {law_name!r}")
        law = out.laws[law_name]
        va, vb = parse_scalar(a, tag), parse_scalar(b, tag)
        cell = {parse_scalar(c, tag) for c in contents}
        table = {k: set(v) for k, v in law.table.items()}
        key = (va, vb) if (va, vb) in table or (vb, va) not in table else (vb, va)
        table[key] = cell
        out.laws[law_name] = FusionLaw(law.values, table, tag)
    for name, entries in raw_cocycles.items():
        out.cocycles[name] = Cocycle.from_entries(dim, entries, tag)
    return out


def render_algebra_file(bundle):
    """Canonical text form of an AlgebraFile bundle; parse-render round-trips."""
    alg = bundle.algebra
    lines = [f"field {alg.tag.name}", f"dim {alg.dim}",
             "basis " + " ".join(alg.labels)]

    def combo(entry):
        return ", ".join(f"{render_scalar(c)} {alg.labels[j]}"
                         for j, c in sorted(entry.items()))

    for i in range(alg.dim):
        for j in range(i, alg.dim):
            entry = alg.basis_product(i, j)
            if entry:
                lines.append(f"product {i+1} {j+1}: {combo(entry)}")
    for name, el in bundle.elements.items():
        entry = {j: c for j, c in enumerate(el) if c}
        lines.append(f"element {name}: {combo(entry)}")
    for name, members in bundle.sets.items():
        names = []
        for m in members:
            label = None
            for ename, el in bundle.elements.items():
                if tuple(el) == tuple(m):
                    label = ename
                    break
            if label is None:
                nz = [(j, c) for j, c in enumerate(m) if c]
                if len(nz) == 1 and nz[0][1].is_one():
                    label = alg.labels[nz[0][0]]
            if label is None:
                raise AlgebraFileError(
                    f"set {name!r} member has no name; add an 'element' entry")
            names.append(label)
        lines.append(f"set {name}: " + " ".join(names))
    one, zero = Scalar.one(alg.tag), Scalar.zero(alg.tag)
    from .scalars import sort_key
    for name, law in bundle.laws.items():
        vals = sorted(law.values, key=sort_key)
        lines.append(f"law {name}: " + " ".join(render_scalar(v) for v in vals))
        for (a, b), cell in sorted(law.table.items(),
                                   key=lambda kv: (sort_key(kv[0][0]), sort_key(kv[0][1]))):
            if a == one:
                continue  # unit row is implied
            body = " ".join(render_scalar(v) for v in sorted(cell, key=sort_key))
            lines.append(f"cell {name} {render_scalar(a)} {render_scalar(b)}: {body}")
        # non-unit rows that are empty need no line; absent cells are empty
    del zero
    for name, th in bundle.cocycles.items():
        mat = th.mats[0]
        for i in range(alg.dim):
            for j in range(i, alg.dim):
                v = mat.rows[i][j]
                if v:
                    lines.append(f"cocycle {name} {i+1} {j+1}: {render_scalar(v)}")
    return "\n".join(lines) + "\n"

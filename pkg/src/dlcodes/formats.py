"""Plain-text file formats.

* point file: one point per line, comma-separated element digit strings;
* polynomial file: ``e0,e1,... : coeff`` lines, polynomials separated by a
  blank line;
* generator matrix: header ``p^m n k`` then k rows of n space-separated
  element digit strings; column labels go to a ``<matrix>.labels`` sidecar
  with ``index<TAB>label`` lines.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .bundle_codes import LinearCode
from .errors import ParseError
from .gf import FieldSpec, parse_field
from .projgeom import HomogPoly


def format_points(points, field: FieldSpec) -> str:
    return "".join(",".join(field.encode(int(c)) for c in row) + "\n" for row in points)


def parse_points(text: str, field: FieldSpec) -> np.ndarray:
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            rows.append([field.decode(tok) for tok in line.split(",")])
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from exc
    if rows and len({len(r) for r in rows}) != 1:
        raise ParseError("points of different dimensions")
    return np.array(rows, dtype=field.dtype)


def format_polys(polys) -> str:
    blocks = []
    for f in polys:
        lines = [
            ",".join(str(e) for e in exp) + " : " + f.field.encode(c)
            for exp, c in sorted(f.terms.items(), key=lambda kv: tuple(-e for e in kv[0]))
        ]
        blocks.append("\n".join(lines) if lines else f"# zero degree {f.degree}")
    return "\n\n".join(blocks) + "\n"


def parse_polys(text: str, field: FieldSpec, nvars: int, degree: int) -> list[HomogPoly]:
    out = []
    for block in text.strip().split("\n\n"):
        terms = {}
        for raw in block.splitlines():
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            exp_txt, _, coeff = line.partition(":")
            terms[tuple(int(e) for e in exp_txt.split(","))] = field.decode(coeff)
        out.append(HomogPoly(field, nvars, degree, terms))
    return out


def write_matrix(path, code: LinearCode) -> Path:
    path = Path(path)
    f = code.field
    with path.open("w", encoding="utf-8") as fh:
        fh.write(f"{f.order_token} {code.n} {code.k}\n")
        for row in code.gen:
            fh.write(" ".join(f.encode(int(c)) for c in row) + "\n")
    if code.column_labels:
        labels = labels_path(path)
        labels.write_text("".join(f"{i}\t{lab}\n" for i, lab in enumerate(code.column_labels)), encoding="utf-8")
    return path


def labels_path(path) -> Path:
    path = Path(path)
    return path.with_name(path.name + ".labels")


def read_matrix(path) -> LinearCode:
    path = Path(path)
    lines = path.read_text(encoding="utf-8").splitlines()
    if not lines:
        raise ParseError("empty matrix file", 1)
    head = lines[0].split()
    if len(head) != 3:
        raise ParseError("header must be 'p^m n k'", 1)
    try:
        field = parse_field(head[0])
        n, k = int(head[1]), int(head[2])
    except ValueError as exc:
        raise ParseError(f"bad header: {exc}", 1) from exc
    body = lines[1:]
    while body and not body[-1].strip():
        body.pop()
    if len(body) < k:
        raise ParseError(f"expected {k} rows, file ends after {len(body)}", len(body) + 2)
    if len(body) > k:
        raise ParseError(f"unexpected content after {k} rows", k + 2)
    gen = np.zeros((k, n), dtype=field.dtype)
    for i, line in enumerate(body):
        toks = line.split()
        if len(toks) != n:
            raise ParseError(f"expected {n} entries, found {len(toks)}", i + 2)
        try:
            gen[i] = [field.decode(t) for t in toks]
        except ValueError as exc:
            raise ParseError(str(exc), i + 2) from exc
    labels: tuple[str, ...] = ()
    lp = labels_path(path)
    if lp.exists():
        labels = tuple(l.split("\t", 1)[1] for l in lp.read_text(encoding="utf-8").splitlines() if l)
        if len(labels) != n:
            labels = ()
    return LinearCode(field, gen, labels, {"source": str(path)})

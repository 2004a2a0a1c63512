"""Reading matrix and triple files, writing JSON reports.

Matrix files are plain text: a header line with the size ``N`` (or
``R C`` for rectangular matrices, accepted by the SNF command only),
followed by the rows as whitespace-separated integers.  Lines starting
with ``#`` and blank lines are ignored.

Triple files are JSON documents::

    {"k0": {"rank": 1, "factors": ["2"]}, "unit": ["1", "0"],
     "k1": {"rank": 0, "factors": []}}

``unit`` lists free coordinates first, then one coordinate per factor.
Integers may be given as JSON numbers or decimal strings; reports always
write group orders and coordinates as decimal strings.
"""

from __future__ import annotations

import hashlib
import json
import os
import re
import tempfile
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .cuntz_krieger import (
    CKMatrix,
    CKMatrixError,
    ext_strong1_matrix,
    ext_weak1_matrix,
    k_triple,
    total_ext1_matrix,
    validate,
)
from .groups import FgAbelianGroup, GroupPresentation, PointedGroup
from .kirchberg import KTriple, chi, ext_data, hierarchy_class, reciprocal_dual, w_of
from .linalg import IntMatrix

SCHEMA = 1


class InputError(ValueError):
    pass


def parse_matrix_text(text: str, square: bool = True) -> IntMatrix:
    lines = [
        (no, line.strip())
        for no, line in enumerate(text.splitlines(), 1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise InputError("empty matrix file")
    no, header = lines[0]
    try:
        dims = [int(x) for x in header.split()]
    except ValueError:
        raise InputError(f"line {no}: bad header {header!r}") from None
    if len(dims) == 1:
        m = n = dims[0]
    elif len(dims) == 2 and not square:
        m, n = dims
    else:
        raise InputError(f"line {no}: header must be a single size N")
    if m < 0 or n < 0:
        raise InputError(f"line {no}: negative size")
    body = lines[1:]
    if len(body) != m:
        raise InputError(f"expected {m} rows after the header, found {len(body)}")
    rows = []
    for no, line in body:
        toks = line.split()
        if len(toks) != n:
            raise InputError(f"line {no}: expected {n} entries, got {len(toks)}")
        try:
            rows.append([int(t) for t in toks])
        except ValueError:
            raise InputError(f"line {no}: non-integer entry") from None
    return IntMatrix.from_rows(rows, n)


def format_matrix_text(M: IntMatrix) -> str:
    head = str(M.nrows) if M.nrows == M.ncols else f"{M.nrows} {M.ncols}"
    return "\n".join([head] + [" ".join(map(str, r)) for r in M.rows]) + "\n"


def _int(x, what: str) -> int:
    if isinstance(x, bool):
        raise InputError(f"{what}: expected an integer, got {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, str) and re.fullmatch(r"[+-]?\d+", x.strip()):
        return int(x)
    raise InputError(f"{what}: expected an integer, got {x!r}")


def group_from_json(doc, what: str = "group") -> tuple[int, list[int]]:
    if not isinstance(doc, dict) or "rank" not in doc:
        raise InputError(f"{what}: expected an object with 'rank' and 'factors'")
    rank = _int(doc["rank"], f"{what}.rank")
    factors = [_int(f, f"{what}.factors") for f in doc.get("factors", [])]
    if rank < 0 or any(f < 1 for f in factors):
        raise InputError(f"{what}: rank must be >= 0 and factors >= 1")
    return rank, factors


def group_to_json(G: FgAbelianGroup) -> dict:
    return {"rank": G.free_rank, "factors": [str(d) for d in G.invariant_factors]}


def triple_from_json(doc) -> KTriple:
    if not isinstance(doc, dict):
        raise InputError("triple document must be a JSON object")
    for key in ("k0", "unit", "k1"):
        if key not in doc:
            raise InputError(f"triple document is missing {key!r}")
    r0, f0 = group_from_json(doc["k0"], "k0")
    r1, f1 = group_from_json(doc["k1"], "k1")
    unit = doc["unit"]
    if not isinstance(unit, list):
        raise InputError("unit must be a list of integers")
    unit = [_int(x, "unit") for x in unit]
    if len(unit) != r0 + len(f0):
        raise InputError(f"unit has {len(unit)} coordinates, expected {r0 + len(f0)}")
    # Factors need not form a chain here; canonicalization re-normalizes.
    n = r0 + len(f0)
    rows = [[0] * len(f0) for _ in range(n)]
    for i, d in enumerate(f0):
        rows[r0 + i][i] = d
    k0 = PointedGroup(GroupPresentation(n, IntMatrix.from_rows(rows, len(f0))), unit)
    return KTriple(k0, FgAbelianGroup.from_orders(r1, f1))


def triple_to_json(t: KTriple) -> dict:
    c = t.k0.canonical()
    return {
        "k0": group_to_json(t.k0.group),
        "unit": [str(x) for x in c.element],
        "k1": group_to_json(t.k1),
    }


@dataclass(frozen=True)
class LoadedInput:
    path: str
    kind: str
    sha256: str
    triple: KTriple
    matrix: CKMatrix | None = None


def load_input(path) -> LoadedInput:
    """Load a matrix (any extension but ``.json``) or a triple document."""
    p = Path(path)
    try:
        data = p.read_bytes()
    except OSError as e:
        raise InputError(f"{p}: {e.strerror}") from None
    digest = hashlib.sha256(data).hexdigest()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError:
        raise InputError(f"{p}: not UTF-8 text") from None
    if p.suffix.lower() == ".json":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as e:
            raise InputError(f"{p}: invalid JSON ({e.msg}, line {e.lineno})") from None
        return LoadedInput(p.name, "triple", digest, triple_from_json(doc))
    try:
        A = validate(parse_matrix_text(text))
    except CKMatrixError as e:
        raise InputError(f"{p}: {e}") from None
    except InputError as e:
        raise InputError(f"{p}: {e}") from None
    return LoadedInput(p.name, "matrix", digest, k_triple(A), A)


def invariant_report(inp: LoadedInput) -> dict:
    t = inp.triple
    e = ext_data(t)
    h = hierarchy_class(t)
    report = {
        "schema": SCHEMA,
        "tool": {"name": "kinvariants", "version": __version__},
        "input": {"path": inp.path, "kind": inp.kind, "sha256": inp.sha256},
        "k_triple": triple_to_json(t),
        "chi": chi(t),
        "w": w_of(t),
        "hierarchy": {"l": h.l, "w": h.w, "half": h.half.value},
        "ext": {
            "s1": group_to_json(e.ext_s1),
            "w1": group_to_json(e.ext_w1),
            "s0": group_to_json(e.ext_s0),
            "w0": group_to_json(e.ext_w0),
            "t1": group_to_json(e.ext_t1),
            "t0": group_to_json(e.ext_t0),
        },
        "dual_triple": triple_to_json(KTriple(e.iota, e.ext_s0)),
    }
    if inp.matrix is not None:
        report["matrix_route"] = {
            "w1": group_to_json(ext_weak1_matrix(inp.matrix)),
            "s1": group_to_json(ext_strong1_matrix(inp.matrix)),
            "t1": group_to_json(total_ext1_matrix(inp.matrix)),
        }
    return report


def dual_report(inp: LoadedInput) -> dict:
    d = reciprocal_dual(inp.triple)
    return {
        "schema": SCHEMA,
        "tool": {"name": "kinvariants", "version": __version__},
        "input": {"path": inp.path, "kind": inp.kind, "sha256": inp.sha256},
        "dual_triple": triple_to_json(d),
        "hierarchy": _hier_json(d),
    }


def _hier_json(t: KTriple) -> dict:
    h = hierarchy_class(t)
    return {"l": h.l, "w": h.w, "half": h.half.value}


_TERM = re.compile(r"^(?:Z(?:\^(\d+))?|Z/(\d+)(?:\^(\d+))?|0)$")


def parse_group_spec(spec: str) -> FgAbelianGroup:
    """Parse ``"Z^2 + Z/4 + Z/2^3"`` style text (``Z/2^3`` = three copies)."""
    rank = 0
    orders: list[int] = []
    for term in re.split(r"\s*(?:\+|,|x)\s*", spec.strip()):
        m = _TERM.match(term.replace(" ", ""))
        if not term or not m:
            raise InputError(f"cannot parse group term {term!r}")
        if term == "0":
            continue
        if m.group(2) is None:
            rank += int(m.group(1) or 1)
        else:
            orders += [int(m.group(2))] * int(m.group(3) or 1)
    return FgAbelianGroup.from_orders(rank, orders)


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def write_atomic(path, text: str) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise

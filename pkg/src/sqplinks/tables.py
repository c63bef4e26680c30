"""Regenerate the reference tables and diff them against the transcribed copies."""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import golden
from .braid_core import delta, parse_braid
from .invariants import alexander, conway, f_poly, least_obstructed_n, nabla_pqr
from .lattice import classify_root_lattice, definiteness
from .poly import IntPolynomial
from .seifert import qp_seifert_matrix, symmetrize
from .three_braids import b_pqr

TABLE_NAMES = ("forms", "f", "nabla", "alexander", "thresholds", "baader")
MAX_PQR = 5  # the transcribed b(p, q, r) tables stop at 5
PQR = tuple(itertools.combinations_with_replacement(range(1, MAX_PQR + 1), 3))


@dataclass(frozen=True)
class Row:
    key: str
    computed: str
    expected: str
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.computed == self.expected

    def to_json(self):
        out = {"key": self.key, "computed": self.computed, "expected": self.expected, "ok": self.ok}
        if self.note:
            out["note"] = self.note
        return out


@dataclass(frozen=True)
class TableResult:
    name: str
    rows: tuple[Row, ...] = field(default_factory=tuple)

    @property
    def diffs(self) -> list[Row]:
        return [r for r in self.rows if not r.ok]

    @property
    def ok(self) -> bool:
        return not self.diffs

    def to_json(self):
        return {
            "table": self.name,
            "rows": [r.to_json() for r in self.rows],
            "diff_count": len(self.diffs),
        }

    def format(self) -> str:
        width = max((len(r.key) for r in self.rows), default=0)
        lines = [f"table {self.name}: {len(self.rows)} rows, {len(self.diffs)} diffs"]
        for r in self.rows:
            mark = "ok  " if r.ok else "DIFF"
            line = f"  {mark} {r.key:<{width}}  {r.computed}"
            if not r.ok:
                line += f"   expected {r.expected}"
            if r.note:
                line += f"   [{r.note}]"
            lines.append(line)
        return "\n".join(lines)


def _key(pqr) -> str:
    return "(" + ",".join(map(str, pqr)) + ")"


def _conway_implies(nabla_z: IntPolynomial) -> IntPolynomial:
    """Alexander polynomial determined by a Conway polynomial: Delta(t^2) = nabla(t - 1/t)."""
    # nabla(t - 1/t) * t^deg is a polynomial in t^2
    d = nabla_z.degree
    t = IntPolynomial.monomial
    acc = IntPolynomial([0])
    for k, c in enumerate(nabla_z.coeffs):
        acc = acc + c * (t(2) - 1) ** k * t(d - k)
    halved = IntPolynomial(acc.coeffs[::2]) if all(c == 0 for c in acc.coeffs[1::2]) else None
    if halved is None:
        raise ArithmeticError("Conway polynomial of the wrong parity")
    return halved.normalized()


def forms_table() -> TableResult:
    rows = []
    for label, n, text, expected in golden.FORMS_TABLE:
        f = symmetrize(qp_seifert_matrix(parse_braid(text, n)))
        rows.append(Row(f"B{n} {text}", str(classify_root_lattice(f)), expected))
    return TableResult("forms", tuple(rows))


def f_table() -> TableResult:
    rows = [
        Row(f"f_{n}", f_poly(n).format("z"), IntPolynomial.parse(s, "z").format("z"))
        for n, s in enumerate(golden.F_TABLE)
    ]
    return TableResult("f", tuple(rows))


def _nabla_row(pqr) -> Row:
    expected = golden.nabla(*pqr).format("z")
    closed = nabla_pqr(*pqr).format("z")
    direct = conway(b_pqr(*pqr)).format("z")
    note = "" if closed == direct else f"closed form gives {closed}"
    return Row(_key(pqr), direct if closed == direct else f"{direct} / {closed}", expected, note)


def _alexander_row(pqr) -> Row:
    computed = alexander(b_pqr(*pqr))
    printed = golden.alexander(*pqr)
    note = ""
    if computed != printed:
        implied = _conway_implies(golden.nabla(*pqr))
        if implied == computed:
            note = "printed entry contradicts the printed Conway entry; computed value agrees with it"
        else:
            note = f"printed Conway entry implies {implied.format()}"
    return Row(_key(pqr), computed.format(), printed.format(), note)


def _threshold_row(pqr) -> Row:
    n = least_obstructed_n(alexander(b_pqr(*pqr)), 50)
    expected = golden.threshold(*pqr)
    note = ""
    if n != expected:
        printed_n = least_obstructed_n(golden.alexander(*pqr), 50)
        note = f"the printed polynomial itself gives {_fmt_n(printed_n)}"
    return Row(_key(pqr), _fmt_n(n), _fmt_n(expected), note)


def _fmt_n(n: int | None) -> str:
    return "never (n <= 50)" if n is None else f"n >= {n}"


def _pqr_table(name, row_fn, jobs, max_pqr) -> TableResult:
    if not 1 <= max_pqr <= MAX_PQR:
        raise ValueError(f"max_pqr must lie in 1..{MAX_PQR}")
    keys = [x for x in PQR if x[-1] <= max_pqr]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            rows = list(pool.map(row_fn, keys))
    else:
        rows = [row_fn(x) for x in keys]
    return TableResult(name, tuple(rows))


def nabla_table(jobs: int = 1, max_pqr: int = MAX_PQR) -> TableResult:
    return _pqr_table("nabla", _nabla_row, jobs, max_pqr)


def alexander_table(jobs: int = 1, max_pqr: int = MAX_PQR) -> TableResult:
    return _pqr_table("alexander", _alexander_row, jobs, max_pqr)


def thresholds_table(jobs: int = 1, max_pqr: int = MAX_PQR) -> TableResult:
    return _pqr_table("thresholds", _threshold_row, jobs, max_pqr)


def baader_table() -> TableResult:
    rows = []
    for n in range(2, 7):
        for k in range(2, 7):
            kind = definiteness(symmetrize(qp_seifert_matrix(delta(n, k))))
            computed = "definite" if kind == "negative_definite" else "not definite"
            expected = "definite" if golden.baader_definite(k, n) else "not definite"
            rows.append(Row(f"n={n} k={k}", computed, expected))
    return TableResult("baader", tuple(rows))


def build_table(name: str, jobs: int = 1, max_pqr: int = MAX_PQR) -> TableResult:
    builders = {
        "forms": forms_table,
        "f": f_table,
        "nabla": lambda: nabla_table(jobs, max_pqr),
        "alexander": lambda: alexander_table(jobs, max_pqr),
        "thresholds": lambda: thresholds_table(jobs, max_pqr),
        "baader": baader_table,
    }
    if name not in builders:
        raise KeyError(f"unknown table {name!r}; choose from {', '.join(TABLE_NAMES)}")
    return builders[name]()

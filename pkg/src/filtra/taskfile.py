"""Line-oriented task files: field, variables, named ideals and sequences,
and one task declaration.

Grammar (order-independent among declarations)::

    file      := line*
    line      := fieldDecl | varsDecl | idealDecl | seqDecl | taskDecl | comment
    fieldDecl := "field" ("QQ" | "GF(" prime ")")
    varsDecl  := "vars" ident ("," ident)*
    idealDecl := "ideal" ident "=" poly ("," poly)*
    seqDecl   := "seq" ident "=" poly ("," poly)*
    taskDecl  := "task" taskName args

Tasks::

    task gb <ideal>
    task hilbert adic(<q>) mod <I>
    task superficial adic(<q>) mod <I> seq <S>
    task verify (upper|difference|lower) adic(<q>) mod <I> seq <S>

Comments start with '#'.  Polynomials use the shared syntax
(``x^2*y - 3/2*z^3``); '*' between factors is optional.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import ParseError
from .field import QQ, CoeffField, GF
from .filtration import FiltrationSpec, adic_filtration
from .ideals import IdealHandle, ideal
from .poly import Polynomial, parse_polynomial
from .ring import Ring

TASK_KINDS = ("gb", "hilbert", "superficial", "verify")
VERIFY_KINDS = ("upper", "difference", "lower")


@dataclass
class TaskFile:
    field: CoeffField
    ring: Ring
    ideals: dict[str, IdealHandle] = dc_field(default_factory=dict)
    sequences: dict[str, list[Polynomial]] = dc_field(default_factory=dict)
    task: str = ""
    verify_kind: str | None = None
    q_name: str | None = None
    mod_name: str | None = None
    seq_name: str | None = None
    gb_name: str | None = None
    source: str = ""

    def filtration(self) -> FiltrationSpec:
        if self.q_name is None:
            raise ParseError("task has no filtration declaration")
        base = self.ideals.get(self.mod_name) if self.mod_name else ideal(self.ring, [])
        if self.mod_name and base is None:
            raise ParseError(f"unknown ideal {self.mod_name!r}")
        if base is None:
            base = ideal(self.ring, [])
        q = self.ideals.get(self.q_name)
        if q is None:
            raise ParseError(f"unknown ideal {self.q_name!r}")
        return adic_filtration(base, q)

    def sequence(self) -> list[Polynomial]:
        if self.seq_name is None:
            raise ParseError("task has no sequence declaration")
        seq = self.sequences.get(self.seq_name)
        if seq is None:
            raise ParseError(f"unknown sequence {self.seq_name!r}")
        return seq


def _split_polys(text: str) -> list[str]:
    """Split on commas at paren depth zero."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts if p.strip()]


def parse_task(text: str, default_field: CoeffField | None = None) -> TaskFile:
    """Parse a task file; declarations may come in any order."""
    field: CoeffField | None = None
    var_names: list[str] | None = None
    ideal_decls: list[tuple[int, str, str]] = []
    seq_decls: list[tuple[int, str, str]] = []
    task_line: tuple[int, str] | None = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "field":
            if rest == "QQ":
                field = QQ
            elif rest.startswith("GF(") and rest.endswith(")"):
                try:
                    field = GF(int(rest[3:-1]))
                except ValueError as exc:
                    raise ParseError(f"bad field: {exc}", lineno, 1) from None
            else:
                raise ParseError(f"bad field declaration {rest!r}", lineno, 1)
        elif head == "vars":
            var_names = [v.strip() for v in rest.split(",") if v.strip()]
            if not var_names:
                raise ParseError("empty variable list", lineno, 1)
        elif head == "ideal":
            name, eq, body = rest.partition("=")
            if not eq:
                raise ParseError("ideal declaration needs '='", lineno, 1)
            ideal_decls.append((lineno, name.strip(), body.strip()))
        elif head == "seq":
            name, eq, body = rest.partition("=")
            if not eq:
                raise ParseError("seq declaration needs '='", lineno, 1)
            seq_decls.append((lineno, name.strip(), body.strip()))
        elif head == "task":
            if task_line is not None:
                raise ParseError("multiple task declarations", lineno, 1)
            task_line = (lineno, rest)
        else:
            raise ParseError(f"unknown declaration {head!r}", lineno, 1)

    if field is None:
        field = default_field
    if field is None:
        raise ParseError("missing field declaration")
    if var_names is None:
        raise ParseError("missing vars declaration")
    ring = Ring(field, tuple(var_names))
    tf = TaskFile(field=field, ring=ring, source=text)

    for lineno, name, body in ideal_decls:
        polys = [parse_polynomial(ring, p, base_line=lineno) for p in _split_polys(body)]
        tf.ideals[name] = ideal(ring, polys)
    for lineno, name, body in seq_decls:
        tf.sequences[name] = [parse_polynomial(ring, p, base_line=lineno) for p in _split_polys(body)]

    if task_line is None:
        raise ParseError("missing task declaration")
    lineno, spec = task_line
    words = spec.split()
    if not words or words[0] not in TASK_KINDS:
        raise ParseError(f"unknown task {spec!r}", lineno, 1)
    tf.task = words[0]
    rest = words[1:]
    if tf.task == "verify":
        if not rest or rest[0] not in VERIFY_KINDS:
            raise ParseError(f"verify needs one of {VERIFY_KINDS}", lineno, 1)
        tf.verify_kind = rest[0]
        rest = rest[1:]
    if tf.task == "gb":
        if len(rest) != 1:
            raise ParseError("task gb needs exactly one ideal name", lineno, 1)
        tf.gb_name = rest[0]
        if tf.gb_name not in tf.ideals:
            raise ParseError(f"unknown ideal {tf.gb_name!r}", lineno, 1)
        return tf

    # shared argument shape: adic(q) [mod I] [seq S]
    i = 0
    while i < len(rest):
        w = rest[i]
        if w.startswith("adic(") and w.endswith(")"):
            tf.q_name = w[5:-1].strip()
            if tf.q_name not in tf.ideals:
                raise ParseError(f"unknown ideal {tf.q_name!r}", lineno, 1)
        elif w == "mod":
            i += 1
            if i >= len(rest):
                raise ParseError("mod needs an ideal name", lineno, 1)
            tf.mod_name = rest[i]
            if tf.mod_name not in tf.ideals:
                raise ParseError(f"unknown ideal {tf.mod_name!r}", lineno, 1)
        elif w == "seq":
            i += 1
            if i >= len(rest):
                raise ParseError("seq needs a sequence name", lineno, 1)
            tf.seq_name = rest[i]
            if tf.seq_name not in tf.sequences:
                raise ParseError(f"unknown sequence {tf.seq_name!r}", lineno, 1)
        else:
            raise ParseError(f"unknown task argument {w!r}", lineno, 1)
        i += 1
    if tf.q_name is None:
        raise ParseError("task needs a filtration, e.g. adic(q)", lineno, 1)
    if tf.task in ("superficial",) and tf.seq_name is None:
        raise ParseError("task superficial needs seq <name>", lineno, 1)
    if tf.task == "verify" and tf.seq_name is None:
        raise ParseError("task verify needs seq <name>", lineno, 1)
    return tf


def serialize_task(tf: TaskFile) -> str:
    """Canonical text for a TaskFile (round-trips through parse_task)."""
    lines = [f"field {tf.field}", "vars " + ",".join(tf.ring.names)]
    for name, handle in tf.ideals.items():
        lines.append(f"ideal {name} = " + ", ".join(str(g) for g in handle.gens))
    for name, seq in tf.sequences.items():
        lines.append(f"seq {name} = " + ", ".join(str(p) for p in seq))
    words = ["task", tf.task]
    if tf.verify_kind:
        words.append(tf.verify_kind)
    if tf.gb_name:
        words.append(tf.gb_name)
    if tf.q_name:
        words.append(f"adic({tf.q_name})")
    if tf.mod_name:
        words.extend(["mod", tf.mod_name])
    if tf.seq_name:
        words.extend(["seq", tf.seq_name])
    lines.append(" ".join(words))
    return "\n".join(lines) + "\n"

"""
Circuit text formats

Native format::

    # comment
    W W_i W_o N_g
    IN <wire>            (W_i lines)
    CONST <wire>         (optional, marks the const_one input)
    G <left> <right> <out> <t0t1t2t3>   (N_g lines, topological order)
    OUT <wire>           (W_o lines)

A gate reading one wire on both inputs is stored as the one-variable gate f(u, u)
with its right input tied to another input wire, as CircuitBuilder does.

The adder netlist format (``gates wires`` / ``n1 n2 n3`` / ``2 1 a b out XOR|AND`` /
``1 1 a out INV``) is read by parse_bristol. INV becomes the one-variable XOR-class
gate NOT(left) with its right input tied to a partner input wire.
"""

from pathlib import Path

from vcloud.vcloud_mpc.circuits.atm_locations import DATA_DIR
from vcloud.vcloud_mpc.circuits.circuit import (
    AND,
    NOT_LEFT,
    XOR,
    BooleanCircuit,
    Gate,
    fold_same_wire,
    table_text,
)
from vcloud.vcloud_mpc.utils.errors import CircuitParseError, throw

BUNDLED_ADDER = DATA_DIR / "adder_32bit.circuit"
BUNDLED_ADDER_BRISTOL = DATA_DIR / "adder_32bit.bristol"


def _fail(line_no: int, message: str):
    throw(f"line {line_no}: {message}", CircuitParseError, line_no=line_no)


def _partner(inputs: list[int], wire: int, line_no: int) -> int:
    """Input wire a one-variable gate on ``wire`` is tied to"""
    for candidate in inputs:
        if candidate != wire:
            return candidate
    _fail(line_no, f"one-variable gate on wire {wire} needs a second input wire to tie to")


def _ints(fields: list[str], line_no: int) -> list[int]:
    try:
        values = [int(field) for field in fields]
    except ValueError:
        _fail(line_no, f"expected integers, got {' '.join(fields)!r}")
    if any(v < 0 for v in values):
        _fail(line_no, "wire ids must be non-negative")
    return values


def _content_lines(text: str):
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line_no, line.split()


class _Checker:
    """Wire bookkeeping shared by both readers so errors carry the offending line"""

    def __init__(self, n_wires: int):
        self.n_wires = n_wires
        self.defined = [False] * n_wires

    def define(self, wire: int, line_no: int) -> None:
        if wire >= self.n_wires:
            _fail(line_no, f"wire {wire} out of range (W={self.n_wires})")
        if self.defined[wire]:
            _fail(line_no, f"wire {wire} is driven twice")
        self.defined[wire] = True

    def use(self, wire: int, line_no: int, later: set[int]) -> None:
        if wire >= self.n_wires:
            _fail(line_no, f"undefined wire {wire} (W={self.n_wires})")
        if not self.defined[wire]:
            if wire in later:
                _fail(line_no, f"wire {wire} used before the gate that drives it (non-topological order)")
            _fail(line_no, f"undefined wire {wire}")


def parse_circuit_file(text: str, name: str = "circuit") -> BooleanCircuit:
    lines = list(_content_lines(text))
    if not lines:
        throw("empty circuit file", CircuitParseError, line_no=0)
    header_no, header = lines[0]
    if len(header) != 4:
        _fail(header_no, "header must be 'W W_i W_o N_g'")
    n_wires, n_inputs, n_outputs, n_gates = _ints(header, header_no)
    body = lines[1:]
    later = {int(f[3]) for _, f in body if f[0] == "G" and len(f) == 5 and f[3].isdigit()}
    checker = _Checker(n_wires)
    inputs, outputs, gates = [], [], []
    const_one = None
    for line_no, fields in body:
        kind = fields[0]
        if kind == "IN" and len(fields) == 2:
            if gates or outputs:
                _fail(line_no, "IN lines must precede gates")
            (wire,) = _ints(fields[1:], line_no)
            checker.define(wire, line_no)
            inputs.append(wire)
        elif kind == "CONST" and len(fields) == 2:
            (wire,) = _ints(fields[1:], line_no)
            if wire not in inputs:
                _fail(line_no, f"CONST wire {wire} is not an input")
            const_one = wire
        elif kind == "G" and len(fields) == 5:
            left, right, out = _ints(fields[1:4], line_no)
            table = fields[4]
            if len(table) != 4 or set(table) - {"0", "1"}:
                _fail(line_no, f"bad truth table {table!r}")
            checker.use(left, line_no, later)
            checker.use(right, line_no, later)
            if out in (left, right):
                _fail(line_no, f"gate output {out} is also one of its inputs")
            table = tuple(int(ch) for ch in table)
            if left == right:
                table, right = fold_same_wire(table), _partner(inputs, left, line_no)
            checker.define(out, line_no)
            gates.append(Gate(left, right, out, table))
        elif kind == "OUT" and len(fields) == 2:
            (wire,) = _ints(fields[1:], line_no)
            if wire >= n_wires or not checker.defined[wire]:
                _fail(line_no, f"output references undefined wire {wire}")
            outputs.append(wire)
        else:
            _fail(line_no, f"malformed line {' '.join(fields)!r}")
    last_line = lines[-1][0]
    for label, expected, actual in (
        ("inputs", n_inputs, len(inputs)),
        ("outputs", n_outputs, len(outputs)),
        ("gates", n_gates, len(gates)),
    ):
        if expected != actual:
            _fail(last_line, f"header declares {expected} {label}, found {actual}")
    if n_wires != n_inputs + n_gates:
        _fail(header_no, f"W={n_wires} must equal W_i + N_g = {n_inputs + n_gates}")
    return BooleanCircuit(
        n_wires=n_wires,
        gates=tuple(gates),
        inputs=tuple(inputs),
        outputs=tuple(outputs),
        const_one=const_one,
        name=name,
    )


def serialize_circuit(c: BooleanCircuit) -> str:
    lines = [f"{c.W} {c.W_i} {c.W_o} {c.N_g}"]
    lines.extend(f"IN {w}" for w in c.inputs)
    if c.const_one is not None:
        lines.append(f"CONST {c.const_one}")
    lines.extend(f"G {g.left} {g.right} {g.out} {table_text(g.table)}" for g in c.gates)
    lines.extend(f"OUT {w}" for w in c.outputs)
    return "\n".join(lines) + "\n"


def parse_bristol(text: str, name: str = "circuit") -> BooleanCircuit:
    lines = list(_content_lines(text))
    if len(lines) < 2:
        throw("netlist needs a 'gates wires' line and an 'n1 n2 n3' line", CircuitParseError, line_no=0)
    (first_no, first), (second_no, second) = lines[0], lines[1]
    if len(first) != 2:
        _fail(first_no, "expected 'gates wires'")
    if len(second) != 3:
        _fail(second_no, "expected 'n1 n2 n3'")
    n_gates, n_wires = _ints(first, first_no)
    n1, n2, n3 = _ints(second, second_no)
    inputs = list(range(n1 + n2))
    outputs = list(range(n_wires - n3, n_wires))
    body = lines[2:]
    later = {int(f[-2]) for _, f in body if len(f) >= 2 and f[-2].isdigit()}
    checker = _Checker(n_wires)
    for w in inputs:
        checker.define(w, second_no)
    gates = []
    for line_no, fields in body:
        op = fields[-1]
        if op in ("XOR", "AND") and len(fields) == 6 and fields[:2] == ["2", "1"]:
            left, right, out = _ints(fields[2:5], line_no)
            table = XOR if op == "XOR" else AND
        elif op == "INV" and len(fields) == 5 and fields[:2] == ["1", "1"]:
            left, out = _ints(fields[2:4], line_no)
            right, table = left, NOT_LEFT
        else:
            _fail(line_no, f"unsupported gate line {' '.join(fields)!r}")
        checker.use(left, line_no, later)
        if right == left:
            table, right = fold_same_wire(table), _partner(inputs, left, line_no)
        checker.use(right, line_no, later)
        checker.define(out, line_no)
        gates.append(Gate(left, right, out, table))
    if len(gates) != n_gates:
        _fail(body[-1][0] if body else second_no, f"header declares {n_gates} gates, found {len(gates)}")
    return BooleanCircuit(
        n_wires=n_wires,
        gates=tuple(gates),
        inputs=tuple(inputs),
        outputs=tuple(outputs),
        name=name,
    )


def read_circuit(path: str | Path) -> BooleanCircuit:
    """Native or netlist file, picked by the ``.bristol`` suffix"""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix == ".bristol":
        return parse_bristol(text, name=path.stem)
    return parse_circuit_file(text, name=path.stem)


def load_bundled_adder() -> BooleanCircuit:
    return read_circuit(BUNDLED_ADDER)

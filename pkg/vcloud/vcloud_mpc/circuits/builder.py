"""
Incremental circuit construction over literals (wire, negated)

Negations never cost a gate: a negated literal is folded into the truth table
of the gate that consumes it, and a negated circuit output is folded into the
gate that produces it. Constants are literals of the ``const_one`` input wire.
"""

from contextlib import contextmanager
from typing import NamedTuple

from vcloud.vcloud_mpc.circuits.circuit import (
    AND,
    XOR,
    BooleanCircuit,
    Gate,
    TruthTable,
    Wire,
    check_table,
    fold_same_wire,
    negate_inputs,
)
from vcloud.vcloud_mpc.utils.errors import CircuitError, throw


class Lit(NamedTuple):
    wire: Wire
    neg: int = 0

    def __invert__(self) -> "Lit":
        return Lit(self.wire, self.neg ^ 1)


class CircuitBuilder:
    def __init__(self, name: str = "circuit", *, with_const: bool = False):
        self.name = name
        self._next_wire = 0
        self._inputs: list[Wire] = []
        self._gates: list[list] = []  # [left, right, out, table]
        self._labels: list[str] = []
        self._label = "gates"
        self._const: Wire | None = self._new_wire() if with_const else None

    def _new_wire(self) -> Wire:
        wire = self._next_wire
        self._next_wire += 1
        return wire

    def input(self) -> Lit:
        wire = self._new_wire()
        self._inputs.append(wire)
        return Lit(wire)

    def inputs(self, count: int) -> list[Lit]:
        return [self.input() for _ in range(count)]

    def constant(self, bit: int) -> Lit:
        if self._const is None:
            throw(f"{self.name}: builder was created without a const_one wire", CircuitError)
        return Lit(self._const, bit ^ 1)

    def constants(self, value: int, width: int) -> list[Lit]:
        """LSB-first constant literals"""
        return [self.constant((value >> i) & 1) for i in range(width)]

    @contextmanager
    def block(self, label: str):
        previous, self._label = self._label, label
        try:
            yield
        finally:
            self._label = previous

    def _partner(self, wire: Wire) -> Wire:
        for candidate in (*self._inputs, self._const):
            if candidate is not None and candidate != wire:
                return candidate
        throw(f"{self.name}: no partner wire available for one-variable gate", CircuitError)

    def gate(self, x: Lit, y: Lit, table: TruthTable) -> Lit:
        table = negate_inputs(check_table(table), x.neg, y.neg)
        left, right = x.wire, y.wire
        if left == right:
            # one-variable function g(u) = f(u, u) moved onto a distinct partner wire
            table = fold_same_wire(table)
            right = self._partner(left)
        out = self._new_wire()
        self._gates.append([left, right, out, table])
        self._labels.append(self._label)
        return Lit(out)

    def xor(self, x: Lit, y: Lit) -> Lit:
        return self.gate(x, y, XOR)

    def and_(self, x: Lit, y: Lit) -> Lit:
        return self.gate(x, y, AND)

    def unary(self, x: Lit, g0: int, g1: int) -> Lit:
        """Gate computing g(x) with g(0)=g0, g(1)=g1"""
        return self.gate(x, x, (g0, 0, 0, g1))

    def build(self, outputs: list[Lit]) -> BooleanCircuit:
        producer = {gate[2]: gate for gate in self._gates}
        flipped = {lit.wire for lit in outputs if lit.neg}
        if flipped & {lit.wire for lit in outputs if not lit.neg}:
            throw(f"{self.name}: an output wire is requested in both polarities", CircuitError)
        for wire in sorted(flipped):
            if wire not in producer:
                throw(f"{self.name}: negated output on input wire {wire}", CircuitError)
            self._complement(wire, producer[wire])
        out_wires = [lit.wire for lit in outputs]
        inputs = list(self._inputs)
        if self._const is not None:
            inputs.append(self._const)
        return BooleanCircuit(
            n_wires=self._next_wire,
            gates=tuple(Gate(l, r, o, tuple(t)) for l, r, o, t in self._gates),
            inputs=tuple(inputs),
            outputs=tuple(out_wires),
            const_one=self._const,
            labels=tuple(self._labels),
            name=self.name,
        )

    def _complement(self, wire: Wire, gate: list) -> None:
        gate[3] = tuple(bit ^ 1 for bit in gate[3])
        for consumer in self._gates:
            if consumer[0] == wire or consumer[1] == wire:
                consumer[3] = negate_inputs(consumer[3], int(consumer[0] == wire), int(consumer[1] == wire))

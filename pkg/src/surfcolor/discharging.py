"""Exact charge bookkeeping for four discharging schemes on embedded graphs.

Every vertex and face gets an initial charge that is affine in its degree,
chosen so that the total depends only on the Euler genus ``g``:

======  ===============  ===============  ==========
scheme  vertex           face             total
======  ===============  ===============  ==========
s34     ``d - 6``        ``2d - 6``       ``6g - 12``
s35     ``d - 6``        ``2d - 6``       ``6g - 12``
s41     ``d - 4``        ``d - 4``        ``4g - 8``
s51     ``5d - 14``      ``2d - 14``      ``14g - 28``
======  ===============  ===============  ==========

Rules then move charge between elements.  Vertices are high when their
degree is at least ``K + offset`` (offset 3, 4, 3, 2 respectively); ``K``
is a free parameter.  All arithmetic uses :class:`fractions.Fraction`.
Face rules pay per incidence, so a vertex met twice on a face walk is paid
twice.
"""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Callable, Iterator
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from . import graphs
from .coloring.threshold import Surd
from .embedding import EmbeddedGraph, FaceWalk, euler_genus, trace_faces
from .errors import InvariantError, PreconditionError

Element = tuple[str, int]  # ("v", vertex) or ("f", face index)


class Transfer(NamedTuple):
    source: Element
    target: Element
    amount: Fraction
    rule: str


def _at_least(x: int, bound) -> bool:
    """``x >= bound`` for an int, Fraction, float or :class:`Surd` bound, exactly when possible."""
    if isinstance(bound, Surd):
        rest = x - bound.a
        return rest >= 0 and rest * rest >= bound.b
    return x >= bound


@dataclass
class _Context:
    G: EmbeddedGraph
    faces: list[FaceWalk]
    initial: dict[Element, Fraction]
    high: set[int]

    def deg(self, v: int) -> int:
        return self.G.degree(v)

    def is_low(self, v: int) -> bool:
        return v not in self.high

    def cyclic_neighbors(self, v: int) -> list[int]:
        return [self.G.dart_head(d) for d in self.G.rotation(v)]


Rule = Callable[[_Context], Iterator[tuple[Element, Element, Fraction]]]


@dataclass(frozen=True)
class ChargeScheme:
    name: str
    vertex_weight: tuple[int, int]  # charge a*d + b
    face_weight: tuple[int, int]
    high_offset: int
    min_degree: int
    rules: tuple[tuple[str, Rule], ...]
    total_per_genus: tuple[int, int]  # total = a*g + b

    def vertex_charge(self, d: int) -> Fraction:
        a, b = self.vertex_weight
        return Fraction(a * d + b)

    def face_charge(self, d: int) -> Fraction:
        a, b = self.face_weight
        return Fraction(a * d + b)

    def expected_total(self, g: int) -> Fraction:
        a, b = self.total_per_genus
        return Fraction(a * g + b)


# -- rules ----------------------------------------------------------------------


def _face_to_degree(pred: Callable[[int], bool], min_face: int, amount: Fraction | None) -> Rule:
    """Faces of degree >= ``min_face`` pay vertices with ``pred(deg)``; ``amount=None`` splits the face charge evenly."""

    def rule(ctx: _Context):
        for i, face in enumerate(ctx.faces):
            if face.degree < min_face:
                continue
            hits = [v for v in face.vertices if pred(ctx.deg(v))]
            if not hits:
                continue
            each = ctx.initial[("f", i)] / len(hits) if amount is None else amount
            for v in hits:
                yield ("f", i), ("v", v), each

    return rule


def _high_to(pred: Callable[[_Context, int], bool], amount: Fraction) -> Rule:
    def rule(ctx: _Context):
        for v in sorted(ctx.high):
            for u in sorted(ctx.G.neighbors(v)):
                if pred(ctx, u):
                    yield ("v", v), ("v", u), amount

    return rule


def _high_triples(amount: Fraction) -> Rule:
    """High ``v`` pays ``amount`` to ``u1`` and ``u3`` for each consecutive ``u1, u2, u3`` around ``v`` with ``u2`` high."""

    def rule(ctx: _Context):
        for v in sorted(ctx.high):
            around = ctx.cyclic_neighbors(v)
            n = len(around)
            if n < 3:
                continue
            for i in range(n):
                if around[i] in ctx.high:
                    yield ("v", v), ("v", around[i - 1]), amount
                    yield ("v", v), ("v", around[(i + 1) % n]), amount

    return rule


def _low_to(min_deg: int, target: Callable[[int], bool], amount: Fraction) -> Rule:
    def rule(ctx: _Context):
        for v in sorted(ctx.G.vertices):
            if ctx.is_low(v) and ctx.deg(v) >= min_deg:
                for u in sorted(ctx.G.neighbors(v)):
                    if target(ctx.deg(u)):
                        yield ("v", v), ("v", u), amount

    return rule


def _medium_to_three(amount: Fraction) -> Rule:
    def rule(ctx: _Context):
        for v in sorted(ctx.G.vertices):
            if v not in ctx.high and ctx.deg(v) >= 4:
                for u in sorted(ctx.G.neighbors(v)):
                    if ctx.deg(u) == 3:
                        yield ("v", v), ("v", u), amount

    return rule


F = Fraction

SCHEMES: dict[str, ChargeScheme] = {
    "s34": ChargeScheme(
        "s34",
        (1, -6),
        (2, -6),
        high_offset=3,
        min_degree=3,
        rules=(
            ("R1", _face_to_degree(lambda d: d == 3, 0, None)),
            ("R2", _high_to(lambda ctx, u: ctx.is_low(u), F(13, 14))),
            ("R3", _high_triples(F(13, 28))),
            ("R4", _low_to(5, lambda d: d <= 4, F(3, 14))),
        ),
        total_per_genus=(6, -12),
    ),
    "s35": ChargeScheme(
        "s35",
        (1, -6),
        (2, -6),
        high_offset=4,
        min_degree=4,
        rules=(
            ("R1", _face_to_degree(lambda d: d == 4, 4, F(1, 4))),
            ("R2", _high_to(lambda ctx, u: ctx.is_low(u), F(7, 8))),
            ("R3", _high_triples(F(7, 16))),
            ("R4", _low_to(5, lambda d: d == 4, F(1, 4))),
        ),
        total_per_genus=(6, -12),
    ),
    "s41": ChargeScheme(
        "s41",
        (1, -4),
        (1, -4),
        high_offset=3,
        min_degree=3,
        rules=(
            ("R1", _high_to(lambda ctx, u: True, F(4, 5))),
            ("R2", _medium_to_three(F(1, 5))),
            ("R3", _face_to_degree(lambda d: d == 3, 5, F(1, 5))),
        ),
        total_per_genus=(4, -8),
    ),
    "s51": ChargeScheme(
        "s51",
        (5, -14),
        (2, -14),
        high_offset=2,
        min_degree=2,
        rules=(("R1", _high_to(lambda ctx, u: True, F(4))),),
        total_per_genus=(14, -28),
    ),
}


def get_scheme(name) -> ChargeScheme:
    if isinstance(name, ChargeScheme):
        return name
    key = str(name).lower()
    if key not in SCHEMES:
        raise PreconditionError(f"unknown scheme {name!r}; choose from {', '.join(SCHEMES)}")
    return SCHEMES[key]


# -- ledger ---------------------------------------------------------------------


@dataclass
class ChargeLedger:
    scheme: str
    initial: dict[Element, Fraction]
    transfers: list[Transfer] = field(default_factory=list)

    @property
    def initial_total(self) -> Fraction:
        return sum(self.initial.values(), Fraction(0))

    def final(self) -> dict[Element, Fraction]:
        out = dict(self.initial)
        for t in self.transfers:
            out[t.source] -= t.amount
            out[t.target] += t.amount
        return out

    @property
    def final_total(self) -> Fraction:
        return sum(self.final().values(), Fraction(0))

    def flows(self) -> dict[Element, tuple[Fraction, Fraction]]:
        """``(inflow, outflow)`` per element."""
        inflow: dict[Element, Fraction] = defaultdict(Fraction)
        outflow: dict[Element, Fraction] = defaultdict(Fraction)
        for t in self.transfers:
            outflow[t.source] += t.amount
            inflow[t.target] += t.amount
        return {z: (inflow[z], outflow[z]) for z in self.initial}

    def check(self) -> None:
        final = self.final()
        for z, (inn, out) in self.flows().items():
            if final[z] != self.initial[z] + inn - out:
                raise InvariantError(f"charge at {z} does not balance")
        if self.final_total != self.initial_total:
            raise InvariantError(f"total charge moved from {self.initial_total} to {self.final_total}")


def _require_embedding(G) -> EmbeddedGraph:
    if not isinstance(G, EmbeddedGraph):
        raise PreconditionError("discharging needs an embedded graph (faces and rotations)")
    return G


def initial_charges(G: EmbeddedGraph, scheme) -> ChargeLedger:
    G = _require_embedding(G)
    sc = get_scheme(scheme)
    initial: dict[Element, Fraction] = {("v", v): sc.vertex_charge(G.degree(v)) for v in G.vertices}
    for i, face in enumerate(trace_faces(G)):
        initial[("f", i)] = sc.face_charge(face.degree)
    return ChargeLedger(sc.name, initial)


def high_vertices(G: EmbeddedGraph, scheme, K) -> set[int]:
    sc = get_scheme(scheme)
    return {v for v in G.vertices if _at_least(G.degree(v) - sc.high_offset, K)}


def apply_rules(G: EmbeddedGraph, scheme, K, rules=None) -> ChargeLedger:
    """Initial charges plus every rule application, in rule order then element order.

    ``rules`` restricts to a subset of rule ids (``[]`` runs none).
    """
    G = _require_embedding(G)
    sc = get_scheme(scheme)
    ledger = initial_charges(G, sc)
    ctx = _Context(G, trace_faces(G), ledger.initial, high_vertices(G, sc, K))
    for rule_id, rule in sc.rules:
        if rules is not None and rule_id not in rules:
            continue
        for source, target, amount in rule(ctx):
            ledger.transfers.append(Transfer(source, target, Fraction(amount), rule_id))
    ledger.check()
    return ledger


@dataclass
class AuditReport:
    scheme: str
    K: object
    genus: int | None
    expected_total: Fraction | None
    ledger: ChargeLedger
    high: set[int]
    flags: list[str]

    @property
    def negative(self) -> list[tuple[Element, Fraction]]:
        return sorted((z, c) for z, c in self.ledger.final().items() if c < 0)

    def lines(self) -> list[str]:
        led = self.ledger
        out = [f"scheme {self.scheme}", f"K {self.K}", f"high {len(self.high)}"]
        if self.genus is not None:
            out.append(f"eg {self.genus}")
            out.append(f"expected_total {self.expected_total}")
        out.append(f"initial_total {led.initial_total}")
        out.append(f"final_total {led.final_total}")
        final = led.final()
        for z in sorted(led.initial):
            out.append(f"charge {z[0]}{z[1]} {led.initial[z]} {final[z]}")
        for t in led.transfers:
            out.append(f"transfer {t.rule} {t.source[0]}{t.source[1]} {t.target[0]}{t.target[1]} {t.amount}")
        out.extend(f"flag {f}" for f in self.flags)
        return out


def audit(G: EmbeddedGraph, scheme, K) -> AuditReport:
    """Run a scheme and describe anything unusual about the input or the outcome."""
    G = _require_embedding(G)
    sc = get_scheme(scheme)
    ledger = apply_rules(G, sc, K)
    flags = []
    genus = expected = None
    if G.is_connected:
        genus = euler_genus(G)
        expected = sc.expected_total(genus)
        if ledger.initial_total != expected:
            raise InvariantError(f"initial total {ledger.initial_total} differs from {expected}")
    else:
        flags.append("graph is disconnected; no genus identity for the total")
    low_deg = sorted(v for v in G.vertices if G.degree(v) < sc.min_degree)
    if low_deg:
        flags.append(f"{len(low_deg)} vertices of degree below {sc.min_degree} (e.g. {low_deg[0]})")
    adj = G.adj
    if sc.name == "s41" and graphs.girth(adj) <= 3:
        flags.append("graph has triangles (scheme assumes triangle-free)")
    if sc.name == "s51" and graphs.girth(adj) < 7:
        flags.append(f"girth {graphs.girth(adj)} below 7 (scheme assumes girth >= 7)")
    repeated = [i for i, f in enumerate(trace_faces(G)) if len(set(f.vertices)) < len(f.vertices)]
    if repeated:
        flags.append(f"{len(repeated)} faces meet some vertex more than once; face rules pay per incidence")
    negative = [z for z, c in ledger.final().items() if c < 0]
    if negative:
        flags.append(f"{len(negative)} elements end with negative charge")
    return AuditReport(sc.name, K, genus, expected, ledger, high_vertices(G, sc, K), flags)

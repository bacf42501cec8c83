"""Clock-accurate LFSR simulation and LFSR polynomial division.

A register built from g(x) of degree d has d flip-flops, regs[i] being the
stage called X^i in the usual division tables.  Internal (divider) feedback
taps sit at {i < d : g_i = 1}; stepping computes

    f = regs[d-1]
    regs'[0] = input xor f          (g_0 = 1)
    regs'[i] = regs[i-1] xor g_i*f

Feeding the dividend MSB-first from the all-zero state leaves p mod g in
the register, one trace row per input bit; the f stream is the quotient,
MSB-first, exposed on each row.

External (Fibonacci) feedback XORs the tapped stages regs[i-1] for each
i >= 1 with g_i = 1 (the degree-d term always contributes regs[d-1]),
shifts every bit up one stage, and loads feedback xor input at stage 0.
With a primitive g and any nonzero seed the autonomous register walks all
2^d - 1 nonzero states.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadConnectionPolynomial, Gf2mError, WidthMismatch
from .polynomial import Gf2Poly, poly_divmod

__all__ = ["LfsrConfig", "TraceRow", "from_polynomial", "step", "step_external",
           "divide", "state_sequence", "period"]


@dataclass(frozen=True)
class LfsrConfig:
    g: Gf2Poly
    feedback: str  # "internal" | "external"

    @property
    def degree(self) -> int:
        return self.g.bits.bit_length() - 1

    @property
    def taps(self) -> tuple[int, ...]:
        """Stages i < degree with g_i = 1."""
        return tuple(i for i in range(self.degree) if (self.g.bits >> i) & 1)


@dataclass(frozen=True)
class TraceRow:
    clock: int
    input_bit: int
    regs_after: tuple[int, ...]
    feedback: int  # the f (quotient) bit consumed this clock


def from_polynomial(g: Gf2Poly, feedback: str = "internal") -> LfsrConfig:
    d = g.bits.bit_length() - 1
    if d < 1 or not g.bits & 1:
        raise BadConnectionPolynomial(
            "connection polynomial needs degree >= 1 and constant term 1")
    if feedback not in ("internal", "external"):
        raise BadConnectionPolynomial(f"unknown feedback kind {feedback!r}")
    return LfsrConfig(g, feedback)


def _check_state(config: LfsrConfig, state: tuple[int, ...]) -> None:
    if len(state) != config.degree:
        raise WidthMismatch(
            f"state has {len(state)} bits, register has {config.degree}")


def step(config: LfsrConfig, state: tuple[int, ...],
         input_bit: int) -> tuple[int, ...]:
    """One internal-feedback (divider) clock."""
    _check_state(config, state)
    d = config.degree
    g = config.g.bits
    f = state[d - 1]
    nxt = [input_bit & 1 ^ f]
    for i in range(1, d):
        nxt.append(state[i - 1] ^ (f if (g >> i) & 1 else 0))
    return tuple(nxt)


def step_external(config: LfsrConfig, state: tuple[int, ...],
                  input_bit: int = 0) -> tuple[int, ...]:
    """One external-feedback (Fibonacci) clock."""
    _check_state(config, state)
    d = config.degree
    g = config.g.bits
    feedback = state[d - 1]  # the degree-d term always taps the last stage
    for i in range(1, d):
        if (g >> i) & 1:
            feedback ^= state[i - 1]
    return ((feedback ^ (input_bit & 1)),) + state[:-1]


def divide(p: Gf2Poly, g: Gf2Poly) -> tuple[Gf2Poly, tuple[TraceRow, ...]]:
    """Remainder of p / g by clocking the divider register.

    The deg(p)+1 coefficients of p enter MSB-first from the all-zero state;
    the zero polynomial contributes a single 0 bit.  After the last clock
    the register holds p mod g, which must match the arithmetic remainder.
    """
    config = from_polynomial(g, "internal")
    d = config.degree
    state = (0,) * d
    stream = ([(p.bits >> i) & 1 for i in range(p.bits.bit_length() - 1, -1, -1)]
              if p.bits else [0])
    rows = []
    for clock, bit in enumerate(stream, start=1):
        f = state[d - 1]
        state = step(config, state, bit)
        rows.append(TraceRow(clock, bit, state, f))
    remainder = Gf2Poly(sum(b << i for i, b in enumerate(state)))
    return remainder, tuple(rows)


def state_sequence(config: LfsrConfig, seed: tuple[int, ...],
                   clocks: int) -> list[tuple[int, ...]]:
    """States after each of `clocks` autonomous steps (zero input)."""
    stepper = step if config.feedback == "internal" else step_external
    out = []
    state = seed
    for _ in range(clocks):
        state = stepper(config, state, 0)
        out.append(state)
    return out


def period(config: LfsrConfig, seed: tuple[int, ...]) -> int:
    """Clocks until the autonomous register first revisits the seed."""
    _check_state(config, seed)
    if not any(seed):
        raise Gf2mError("period of the all-zero state is degenerate")
    stepper = step if config.feedback == "internal" else step_external
    state = stepper(config, seed, 0)
    n = 1
    limit = 1 << config.degree
    while state != seed:
        state = stepper(config, state, 0)
        n += 1
        if n > limit:
            raise AssertionError("state space exhausted without revisiting seed")
    return n

"""Exact discharging for edge-density bounds on subcubic graphs.

Every vertex starts with charge equal to its degree, charge moves by
three local rules, and because each rule only redistributes, the total
stays 2|E|.  If every final charge reaches 2 + alpha, then
2|E| >= (2 + alpha)|V|.  All arithmetic is over exact rationals
(fractions.Fraction); nothing here ever rounds.

The rules, with H the subgraph induced by 3-vertices having a
2-neighbor (see audit.decompose_h):

  R1  every 2-vertex takes alpha/2 from each of its neighbors;
  R2  every rich vertex (3-vertex with no 2-neighbor) gives t*beta to
      each neighbor lying in an H-component of order t;
  R3  the vertices of each H-component average their charge.

The parameters are solved so that 2-vertices, H-vertices, and the
worst rich vertex (type sum S) all land exactly on the 2 + alpha
target; see solve_parameters.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .audit import audit_basic, classify_rich, decompose_h
from .graphs import ValidationError

__all__ = [
    "Charge",
    "DischargeTrace",
    "audit_bound",
    "run_discharge",
    "solve_parameters",
]

# Charges are plain exact rationals.
Charge = Fraction


@dataclass(frozen=True)
class DischargeTrace:
    """Complete per-vertex account of one discharging run.

    ``transfers`` maps each rule name ("R1", "R2", "R3") to the tuple
    of per-vertex charge deltas it caused; each tuple sums to zero, so
    the total charge is conserved at exactly 2|E|.
    """

    alpha: Fraction
    beta: Fraction
    initial: tuple
    transfers: dict
    final: tuple

    @property
    def target(self):
        return 2 + self.alpha

    @property
    def below_target(self):
        """Vertices whose final charge misses the target."""
        return tuple(v for v, c in enumerate(self.final) if c < self.target)

    @property
    def total(self):
        return sum(self.final, Fraction(0))

    def holds(self):
        """True when every vertex reached the target charge."""
        return not self.below_target


def run_discharge(g, h, alpha, beta):
    """Replay the three discharging rules and account for every vertex.

    ``h`` must be the current H-decomposition of ``g`` (recomputed and
    compared; a stale one raises ValidationError), and ``g`` must pass
    the basic structure audit.  Graphs whose H contains cycles or long
    paths are still processed; vertices that end below target simply
    show up in the trace rather than raising.
    """
    alpha = Fraction(alpha)
    beta = Fraction(beta)
    violations = audit_basic(g)
    if violations:
        raise ValidationError(
            "discharging needs a clean basic audit; found %d violation(s), "
            "first: %s" % (len(violations), violations[0]))
    if h != decompose_h(g):
        raise ValidationError("H-decomposition is stale for this graph")

    n = g.vertex_count
    degree = g.degrees()
    zero = Fraction(0)
    initial = tuple(Fraction(degree[v]) for v in range(n))

    r1 = [zero] * n
    for v in range(n):
        if degree[v] != 2:
            continue
        for u in g.neighbors(v):
            r1[v] += alpha / 2
            r1[u] -= alpha / 2

    r2 = [zero] * n
    for rich in classify_rich(g, h):
        v = rich.vertex
        for u in g.neighbors(v):
            t = h.order_of(u)
            if t:
                r2[v] -= t * beta
                r2[u] += t * beta

    after = [initial[v] + r1[v] + r2[v] for v in range(n)]
    r3 = [zero] * n
    for comp in h.components:
        average = sum(after[v] for v in comp) / len(comp)
        for v in comp:
            r3[v] = average - after[v]

    final = tuple(after[v] + r3[v] for v in range(n))
    assert sum(final, zero) == 2 * g.edge_count, "charge was not conserved"
    return DischargeTrace(
        alpha=alpha,
        beta=beta,
        initial=initial,
        transfers={"R1": tuple(r1), "R2": tuple(r2), "R3": tuple(r3)},
        final=final,
    )


def audit_bound(g, bound):
    """Exact check that 2|E| >= bound * |V|."""
    return 2 * g.edge_count >= Fraction(bound) * g.vertex_count


def solve_parameters(type_sum):
    """The unique (alpha, beta) balancing all three vertex classes.

    Equalizes the final charges 2 + alpha (2-vertices), 3 - alpha/2 +
    2*beta (worst H-vertex) and 3 - S*beta (rich vertex whose component
    orders sum to S = ``type_sum``), giving

        alpha = (2S + 4) / (3S + 4),    beta = 1 / (3S + 4).

    Any non-negative integer S is accepted.
    """
    if isinstance(type_sum, bool) or not isinstance(type_sum, int):
        raise ValidationError("type sum must be an integer")
    if type_sum < 0:
        raise ValidationError("type sum must be non-negative")
    return (Fraction(2 * type_sum + 4, 3 * type_sum + 4),
            Fraction(1, 3 * type_sum + 4))

"""Hausdorff and box-counting dimension of the recognized point set.

Both dimensions reduce to entropies of cycle languages: the Hausdorff
dimension maximizes over accept states on cycles, the box-counting
dimension over all states on cycles, each normalized by log k.  The closed
case collapses to a single prefix-language entropy, and strongly connected
automata admit an independent cross-check as the unit-spectral-radius root
of the transfer matrix.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .core import (
    DEFAULT_ENUMERATION_CAP,
    Automaton,
    DigitVector,
    Word,
    classify_properties,
    cycle_automaton,
    prefix_determinization,
    require_trim,
    scc_decompose,
    states_on_cycles,
    trim,
)
from .errors import (
    ArityError,
    NotClosedError,
    NotStronglyConnectedError,
    NotTrimError,
)
from .spectral import DEFAULT_SPECTRAL_TOL, entropy, spectral_radius, transfer_matrix

#: Guard band for dimension comparisons, an order of magnitude above the
#: spectral tolerance the underlying quantities are computed to.
REPORT_TOL = 1e-9


@dataclass(frozen=True)
class DimensionReport:
    """Dimensions plus the per-state cycle entropies they maximize over.

    ``per_state`` maps each state lying on a cycle to the entropy of its
    cycle language (natural log).  Witnesses are the first states, in
    declaration order, attaining each maximum.
    """

    arity: int
    hausdorff: float
    box: float
    per_state: dict[str, float]
    hausdorff_witness: str
    box_witness: str
    gap: bool

    def __post_init__(self) -> None:
        if self.hausdorff > self.box + REPORT_TOL:
            raise ValueError("hausdorff dimension cannot exceed box dimension")
        if not (-REPORT_TOL <= self.hausdorff and self.box <= self.arity + REPORT_TOL):
            raise ValueError("dimensions must lie in [0, arity]")


@dataclass(frozen=True)
class DensityReport:
    """Topological classification of a unary recognized set."""

    nowhere_dense: bool
    somewhere_dense: bool
    dense_codense_on_interval: tuple[Fraction, Fraction] | None
    witness_state: str | None = None
    witness_prefix: Word | None = None


def cycle_entropies(a: Automaton, cap: int = DEFAULT_ENUMERATION_CAP) -> dict[str, float]:
    """Entropy of the cycle language of every state that lies on a cycle."""
    require_trim(a)
    return {
        q: entropy(cycle_automaton(a, q), cap=cap) for q in states_on_cycles(a)
    }


def _argmax(entropies: dict[str, float], candidates) -> tuple[str, float]:
    best_state, best = None, -math.inf
    for q in candidates:
        value = entropies[q]
        if value > best:
            best_state, best = q, value
    assert best_state is not None
    return best_state, best


def hausdorff_dimension(a: Automaton, cap: int = DEFAULT_ENUMERATION_CAP) -> float:
    """(1/log k) * max cycle-language entropy over accept states on cycles.

    Accept states on no cycle have cycle language {eps} and are skipped;
    trimness guarantees at least one accept state lies on a cycle.
    """
    entropies = cycle_entropies(a, cap=cap)
    accept_cycles = [q for q in a.states if q in a.accept and q in entropies]
    _, best = _argmax(entropies, accept_cycles)
    return best / math.log(a.base)


def box_dimension(a: Automaton, cap: int = DEFAULT_ENUMERATION_CAP) -> float:
    """(1/log k) * max cycle-language entropy over all states on cycles.

    Equals the Hausdorff dimension of the closure of the recognized set.
    """
    entropies = cycle_entropies(a, cap=cap)
    _, best = _argmax(entropies, [q for q in a.states if q in entropies])
    return best / math.log(a.base)


def closed_dimension(a: Automaton, cap: int = DEFAULT_ENUMERATION_CAP) -> float:
    """Dimension of a closed automaton's set: entropy of the accepted
    language over log k.  Hausdorff and box dimensions coincide with it."""
    if not classify_properties(a).closed:
        raise NotClosedError("operation requires a closed automaton")
    return entropy(a, cap=cap) / math.log(a.base)


def dimension_report(a: Automaton, cap: int = DEFAULT_ENUMERATION_CAP) -> DimensionReport:
    """Full dimension analysis in one pass over the cycle entropies."""
    entropies = cycle_entropies(a, cap=cap)
    on_cycle = [q for q in a.states if q in entropies]
    accept_cycles = [q for q in on_cycle if q in a.accept]
    h_witness, h_best = _argmax(entropies, accept_cycles)
    b_witness, b_best = _argmax(entropies, on_cycle)
    log_k = math.log(a.base)
    hausdorff = h_best / log_k
    box = b_best / log_k
    return DimensionReport(
        arity=a.arity,
        hausdorff=hausdorff,
        box=box,
        per_state=entropies,
        hausdorff_witness=h_witness,
        box_witness=b_witness,
        gap=box - hausdorff > REPORT_TOL,
    )


def dimension_gap(
    a: Automaton, cap: int = DEFAULT_ENUMERATION_CAP
) -> tuple[bool, str | None]:
    """Whether box dimension strictly exceeds Hausdorff dimension, with a
    witness: a non-accept state whose cycle entropy beats every accept
    state's."""
    report = dimension_report(a, cap=cap)
    if not report.gap:
        return (False, None)
    witness = report.box_witness
    assert witness not in a.accept
    return (True, witness)


def mw_alpha(a: Automaton, tol: float = DEFAULT_SPECTRAL_TOL) -> float:
    """Critical exponent of a strongly connected automaton: the root
    alpha in [0, d] of sprad(transfer(alpha)) = 1, found by bisection.

    The transfer-matrix entries are string-faithful only when runs and
    words are in bijection, so nondeterministic inputs are determinized on
    their prefix language first.  The map alpha -> sprad is continuous and
    strictly decreasing whenever a cycle exists; monotonicity is verified
    at the bracket endpoints before bisecting.  Returns 0 when even the
    exponent-0 radius is below 1.
    """
    scc = scc_decompose(a)
    if len(scc) != 1 or scc.trivial[0]:
        raise NotStronglyConnectedError(
            "critical exponent requires a single non-trivial strongly"
            " connected component covering all states"
        )
    flags = classify_properties(a)
    if flags.deterministic:
        b = a
    else:
        b = prefix_determinization(a.replace(accept=a.states))

    def radius(alpha: float) -> float:
        return spectral_radius(transfer_matrix(b, alpha), tol=tol)

    lo, hi = 0.0, float(a.arity)
    f_lo, f_hi = radius(lo), radius(hi)
    if f_lo <= 1.0:
        # strictly decreasing map: a radius already at or below 1 at
        # exponent 0 pins the root there
        return 0.0
    if f_lo < f_hi:
        raise NotStronglyConnectedError(
            "transfer radius failed to decrease across the bracket"
        )
    if f_hi >= 1.0:
        return hi
    iterations = 0
    while hi - lo > tol and iterations < 200:
        mid = (lo + hi) / 2
        if radius(mid) >= 1.0:
            lo = mid
        else:
            hi = mid
        iterations += 1
    return (lo + hi) / 2


# ---------------------------------------------------------------------------
# density classification (unary sets)
# ---------------------------------------------------------------------------


def _shortest_word_to(a: Automaton, target: str) -> Word:
    """Shortest word labeling a run from a start state to ``target``."""
    if target in a.start:
        return ()
    parent: dict[str, tuple[str, DigitVector]] = {}
    seen = set(a.start)
    frontier = deque(sorted(a.start))
    while frontier and target not in parent:
        q = frontier.popleft()
        for sym, dst in a.out_edges[q]:
            if dst not in seen:
                seen.add(dst)
                parent[dst] = (q, sym)
                frontier.append(dst)
    if target not in parent:
        raise NotTrimError(f"state {target!r} is unreachable")
    word: list[DigitVector] = []
    node = target
    while node in parent:
        node, sym = parent[node]
        word.append(sym)
    word.reverse()
    return tuple(word)


def _run_word(a: Automaton, word: Word) -> frozenset[str]:
    current = frozenset(a.start)
    for sym in word:
        current = a.step_set(current, sym)
    return current


def _cycle_prefixes_complete(a: Automaton, q: str, cap: int) -> bool:
    """Does every finite digit string extend to a word of q's cycle
    language?  Decided exactly on the determinized prefix automaton of the
    cycle automaton: complete iff no reachable subset state is missing an
    outgoing digit."""
    det = prefix_determinization(cycle_automaton(a, q), cap=cap)
    full = a.base**a.arity
    out_degree = {state: 0 for state in det.states}
    for src, _, _ in det.transitions:
        out_degree[src] += 1
    return all(deg == full for deg in out_degree.values())


def density_classifier(
    a: Automaton, cap: int = DEFAULT_ENUMERATION_CAP
) -> DensityReport:
    """Classify a unary recognized set as nowhere dense or somewhere dense,
    certifying dense-and-codense-on-an-interval where possible.

    The set is dense in some interval iff some state q on a cycle has a
    complete cycle-prefix set; the access word u to q then pins the
    interval [nu(u0...), nu(u(k-1)...)].  Codensity on that interval is
    certified by a dimension defect: if the sub-automaton rerooted below u
    has Hausdorff dimension < 1 its points are Lebesgue-null there, so the
    complement is dense.  (A dense part of full dimension is reported as
    not codense; the full dichotomy needs machinery beyond this tool.)
    """
    if a.arity != 1:
        raise ArityError("density classification is defined for arity 1")
    require_trim(a)
    witnesses = [
        q for q in states_on_cycles(a) if _cycle_prefixes_complete(a, q, cap)
    ]
    if not witnesses:
        return DensityReport(
            nowhere_dense=True,
            somewhere_dense=False,
            dense_codense_on_interval=None,
        )
    for q in witnesses:
        u = _shortest_word_to(a, q)
        rerooted = trim(a.replace(start=_run_word(a, u)))
        local_dim = hausdorff_dimension(rerooted, cap=cap)
        if local_dim < 1.0 - REPORT_TOL:
            left = Fraction(0)
            for i, sym in enumerate(u):
                left += Fraction(sym[0], a.base ** (i + 1))
            right = left + Fraction(1, a.base ** len(u))
            return DensityReport(
                nowhere_dense=False,
                somewhere_dense=True,
                dense_codense_on_interval=(left, right),
                witness_state=q,
                witness_prefix=u,
            )
    return DensityReport(
        nowhere_dense=False,
        somewhere_dense=True,
        dense_codense_on_interval=None,
        witness_state=witnesses[0],
        witness_prefix=_shortest_word_to(a, witnesses[0]),
    )

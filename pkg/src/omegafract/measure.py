"""Hausdorff measure in the critical dimension.

The accepted language of an unambiguous automaton partitions by key state:
the state at which the unique accepting run permanently enters a strongly
connected component.  Each part contributes the measure of that component's
set, scaled by a geometric series over the key prefixes leading to it; the
measure of a closed strongly connected component itself comes from the
Perron eigenvector of its transfer matrix at the critical exponent.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .core import (
    DEFAULT_ENUMERATION_CAP,
    Automaton,
    Transition,
    _backward_reachable,
    _forward_reachable,
    check_unambiguous,
    classify_properties,
    prefix_determinization,
    require_trim,
    scc_decompose,
)
from .dimension import REPORT_TOL, cycle_entropies, hausdorff_dimension
from .errors import (
    AmbiguousError,
    NonCriticalExponentWarning,
    NotStronglyConnectedError,
    UnreachableStateError,
)
from .spectral import counting_matrix, spectral_radius, transfer_matrix

_EIGENVECTOR_TOL = 1e-13
_MAX_EIGENVECTOR_ITERATIONS = 500_000


@dataclass(frozen=True)
class ComponentMeasure:
    """One key state's contribution to the total measure."""

    scc_measure: float
    prefix_series: float
    component_measure: float
    scc_dimension: float


@dataclass(frozen=True)
class MeasureReport:
    """Measure of the recognized set at its critical dimension ``alpha``.

    ``total`` is the sum of the per-key-state component measures, with
    infinity absorbing.  Values may be 0, positive finite, or ``math.inf``.
    """

    alpha: float
    per_key_state: dict[str, ComponentMeasure]
    total: float


def _perron_vector(matrix: np.ndarray) -> np.ndarray:
    """Positive eigenvector of an irreducible nonnegative matrix, normalized
    to maximum entry 1.  Power iteration on the shifted matrix converges
    regardless of periodicity."""
    n = matrix.shape[0]
    if n == 1:
        return np.ones(1)
    shifted = matrix + np.eye(n)
    x = np.ones(n)
    for _ in range(_MAX_EIGENVECTOR_ITERATIONS):
        y = shifted @ x
        y = y / y.max()
        if np.max(np.abs(y - x)) <= _EIGENVECTOR_TOL:
            return y
        x = y
    return y


def scc_measure(a: Automaton, alpha: float) -> float:
    """Measure at exponent ``alpha`` of the closed set recognized by a
    strongly connected automaton, read off the Perron eigenvector of its
    transfer matrix.

    The eigenvector equation expresses each state's measure as the
    k^(-alpha)-weighted sum of its successors' measures, so it is valid
    when runs and words coincide; nondeterministic inputs are determinized
    on their prefix language first (the closure of a closed set is itself).
    When that determinization splits into several components, the measure
    is re-assembled from the split automaton's own key-state decomposition.
    Returns the measure of the start state's set, in [0, 1] for strongly
    connected deterministic input, when the radius is 1 to within 1e-9.
    Away from that critical value the measure degenerates: 0 below,
    infinity above, each reported with a
    :class:`NonCriticalExponentWarning`.
    """
    scc = scc_decompose(a)
    if len(scc) != 1 or scc.trivial[0]:
        raise NotStronglyConnectedError(
            "component measure requires a single non-trivial strongly"
            " connected component covering all states"
        )
    if classify_properties(a).deterministic:
        b = a
    else:
        b = prefix_determinization(a.replace(accept=a.states))
    matrix = transfer_matrix(b, alpha)
    radius = spectral_radius(matrix)
    if abs(radius - 1.0) > REPORT_TOL:
        warnings.warn(
            f"transfer radius {radius:.12g} differs from 1: exponent"
            f" {alpha:.12g} is not this component's critical dimension",
            NonCriticalExponentWarning,
            stacklevel=2,
        )
        return 0.0 if radius < 1.0 else math.inf
    det_scc = scc_decompose(b)
    if len(det_scc) != 1:
        return _closed_decomposition_total(b, alpha)
    vector = _perron_vector(matrix.to_numpy())
    (start,) = b.start
    return float(vector[b.state_index[start]])


# ---------------------------------------------------------------------------
# key prefixes
# ---------------------------------------------------------------------------

_KEY = "<key>"


def _transient_automaton(a: Automaton, q: str) -> Automaton | None:
    """Finite automaton accepting exactly the key prefixes of ``q``: words
    labeling a run from a start state to the first arrival in ``q``, never
    touching q's strongly connected component on the way.

    The component is deleted and replaced by a fresh final copy of ``q``
    entered exactly at first arrival.  Returns None when no key prefix
    exists (``q`` is then never a key state).
    """
    scc = scc_decompose(a)
    component = set(scc.components[scc.component_of[q]])
    key = _KEY
    while key in a.state_index:
        key += "'"
    outside = [s for s in a.states if s not in component]
    transitions: list[Transition] = []
    for src, sym, dst in a.transitions:
        if src in component:
            continue
        if dst == q:
            transitions.append((src, sym, key))
        elif dst not in component:
            transitions.append((src, sym, dst))
    start = (a.start - component) | ({key} if q in a.start else set())
    if not start:
        return None
    t = Automaton(
        base=a.base,
        arity=a.arity,
        states=tuple(outside) + (key,),
        transitions=tuple(transitions),
        start=frozenset(start),
        accept=frozenset({key}),
    )
    # finite-trim: keep states reachable from a start and co-reachable to
    # the key copy (zero length allowed).
    useful = _forward_reachable(t, t.start) & _backward_reachable(t, {key})
    if key not in useful or not (t.start & useful):
        return None
    return t.restrict(useful)


def _key_prefix_series(t: Automaton, base: int, alpha: float) -> float:
    """Sum of k^(-alpha * |u|) over the words ``u`` the transient automaton
    accepts.  Counts are exact big integers (one accepting run per word, by
    unambiguity of the source automaton)."""
    matrix = counting_matrix(t)
    index = t.state_index
    n = matrix.n
    rows = matrix.entries
    has_cycle = any(not triv for triv in scc_decompose(t).trivial)
    x = float(base) ** (-alpha)
    if has_cycle:
        radius = spectral_radius(matrix)
        if radius >= float(base) ** alpha - 1e-12:
            return math.inf
        array = matrix.to_numpy()
        target = np.zeros(n)
        for acc in t.accept:
            target[index[acc]] = 1.0
        solution = np.linalg.solve(np.eye(n) - x * array, target)
        return float(sum(solution[index[s]] for s in t.start))
    # Cycle-free transient part: the series is a finite sum; accumulate it
    # with exact integer counts and iterated float powers of k^(-alpha).
    vec = [1 if s in t.start else 0 for s in t.states]
    accept_idx = [index[s] for s in t.accept]
    total = float(sum(vec[i] for i in accept_idx))
    term = 1.0
    for _ in range(n):
        vec = [sum(vec[i] * rows[i][j] for i in range(n)) for j in range(n)]
        term *= x
        total += sum(vec[i] for i in accept_idx) * term
    return total


def _component_sub_automaton(a: Automaton, components, cid: int, q: str) -> Automaton:
    """Closure of the component sub-automaton rooted at ``q``."""
    component = set(components[cid])
    return Automaton(
        base=a.base,
        arity=a.arity,
        states=components[cid],
        transitions=tuple(
            tr for tr in a.transitions if tr[0] in component and tr[2] in component
        ),
        start=frozenset({q}),
        accept=frozenset(component),
    )


def _closed_decomposition_total(b: Automaton, alpha: float) -> float:
    """Measure at ``alpha`` of the set recognized by a deterministic closed
    automaton that is not strongly connected: key-state decomposition with
    eigenvector leaves.  Every non-trivial component of a closed automaton
    is accepting, so all of them can key accepting runs."""
    scc = scc_decompose(b)
    total = 0.0
    for q in b.states:
        cid = scc.component_of[q]
        if scc.trivial[cid]:
            continue
        t = _transient_automaton(b, q)
        if t is None:
            continue
        series = _key_prefix_series(t, b.base, alpha)
        sub = _component_sub_automaton(b, scc.components, cid, q)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", NonCriticalExponentWarning)
            m = scc_measure(sub, alpha)
        if m == 0.0:
            continue
        total += math.inf if math.isinf(series) or math.isinf(m) else series * m
    return total


def key_prefix_series(a: Automaton, q: str, alpha: float) -> float:
    """Weighted count of q's key prefixes: sum of k^(-alpha*|u|) over all
    words u running from a start state to the first arrival in q's
    component at q.

    Requires a trim unambiguous automaton and a state whose component
    contains an accept state.  Returns ``math.inf`` when infinitely many
    key prefixes exist and their counting matrix grows at rate >= k^alpha.
    """
    require_trim(a)
    if q not in a.state_index:
        raise UnreachableStateError(f"unknown state {q!r}")
    if not check_unambiguous(a):
        raise AmbiguousError("key-prefix decomposition requires an unambiguous automaton")
    scc = scc_decompose(a)
    cid = scc.component_of[q]
    if not scc.contains_accept[cid] or scc.trivial[cid]:
        raise UnreachableStateError(
            f"state {q!r} cannot key an accepting run: its component has no"
            " accepting cycle"
        )
    t = _transient_automaton(a, q)
    if t is None:
        raise UnreachableStateError(f"no accepting run enters its component at {q!r}")
    return _key_prefix_series(t, a.base, alpha)


# ---------------------------------------------------------------------------
# full pipeline
# ---------------------------------------------------------------------------


def hausdorff_measure(
    a: Automaton, cap: int = DEFAULT_ENUMERATION_CAP
) -> MeasureReport:
    """Measure of the recognized set at its own Hausdorff dimension.

    For every state q whose component contains an accept state and is
    actually entered there by some accepting run, the contribution is
    (key-prefix series at alpha) x (component measure at alpha), where the
    component measure is taken on the closure of the component
    sub-automaton.  A zero-measure component contributes 0 even when its
    prefix series diverges; a positive-measure component with divergent
    series contributes infinity.
    """
    require_trim(a)
    if not check_unambiguous(a):
        raise AmbiguousError("measure decomposition requires an unambiguous automaton")
    alpha = hausdorff_dimension(a, cap=cap)
    entropies = cycle_entropies(a, cap=cap)
    scc = scc_decompose(a)
    log_k = math.log(a.base)
    per_key_state: dict[str, ComponentMeasure] = {}
    total = 0.0
    for q in a.states:
        cid = scc.component_of[q]
        if not scc.contains_accept[cid] or scc.trivial[cid]:
            continue
        t = _transient_automaton(a, q)
        if t is None:
            continue
        series = _key_prefix_series(t, a.base, alpha)
        sub = _component_sub_automaton(a, scc.components, cid, q)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", NonCriticalExponentWarning)
            m = scc_measure(sub, alpha)
        if m == 0.0:
            contribution = 0.0
        elif math.isinf(series) or math.isinf(m):
            contribution = math.inf
        else:
            contribution = series * m
        per_key_state[q] = ComponentMeasure(
            scc_measure=m,
            prefix_series=series,
            component_measure=contribution,
            scc_dimension=entropies[q] / log_k,
        )
        total += contribution  # inf absorbs
    dims = [cm.scc_dimension for cm in per_key_state.values()]
    if not dims or abs(max(dims) - alpha) > REPORT_TOL:
        raise RuntimeError(
            "internal inconsistency: key-state component dimensions do not"
            " attain the Hausdorff dimension"
        )
    return MeasureReport(alpha=alpha, per_key_state=per_key_state, total=total)

"""Automaton data model, JSON parsing/serialization and structural operations.

The single :class:`Automaton` representation carries both semantics: read as
a finite automaton it accepts finite digit strings, read as a Buchi
automaton it accepts infinite digit strings whose runs visit an accept
state infinitely often.  Symbols are :class:`DigitVector` values, i.e.
d-tuples of base-k digits, so the recognized infinite words are base-k
expansions of points of the unit box [0,1]^d.

All types are immutable after construction; every operation is a pure
function of its inputs.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    AcyclicStateError,
    CapExceededError,
    EmptyLanguageError,
    FormatError,
    NondeterministicError,
    NotTrimError,
    ValidationError,
)

#: Default limit on the number of strings any enumeration may touch.
DEFAULT_ENUMERATION_CAP = 2**22


@dataclass(frozen=True, order=True)
class DigitVector:
    """One alphabet symbol: a d-tuple of digits, each in [0, k).

    Range checks against a concrete base/arity happen where an automaton
    context is available (parsing and :class:`Automaton` validation).
    """

    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        digits = tuple(int(d) for d in self.digits)
        object.__setattr__(self, "digits", digits)
        if len(digits) < 1:
            raise ValidationError("symbol must have at least one digit")
        if any(d < 0 for d in digits):
            raise ValidationError(f"negative digit in symbol {digits}")

    def __len__(self) -> int:
        return len(self.digits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.digits)

    def __getitem__(self, i: int) -> int:
        return self.digits[i]

    def __str__(self) -> str:
        return ",".join(str(d) for d in self.digits)


#: A finite word: tuple of symbols.
Word = tuple[DigitVector, ...]

#: One transition: (source state, symbol, target state).
Transition = tuple[str, DigitVector, str]


def _coerce_symbol(sym: DigitVector | Sequence[int]) -> DigitVector:
    return sym if isinstance(sym, DigitVector) else DigitVector(tuple(sym))


@dataclass(frozen=True)
class Automaton:
    """Finite/Buchi automaton over the alphabet of base-``base`` digit
    vectors of arity ``arity``.

    ``states`` is an ordered set: declaration order fixes every matrix
    indexing downstream.  Transitions are stored canonically sorted by
    (from, symbol, to); duplicates are rejected rather than merged.
    """

    base: int
    arity: int
    states: tuple[str, ...]
    transitions: tuple[Transition, ...]
    start: frozenset[str]
    accept: frozenset[str]

    def __post_init__(self) -> None:
        if self.base < 2:
            raise ValidationError(f"base must be >= 2, got {self.base}")
        if self.arity < 1:
            raise ValidationError(f"arity must be >= 1, got {self.arity}")
        states = tuple(str(s) for s in self.states)
        if len(set(states)) != len(states):
            raise ValidationError("duplicate state identifiers")
        if not states:
            raise ValidationError("automaton needs at least one state")
        declared = set(states)
        cooked: list[Transition] = []
        for src, sym, dst in self.transitions:
            sym = _coerce_symbol(sym)
            if len(sym) != self.arity:
                raise ValidationError(
                    f"symbol {sym} has arity {len(sym)}, expected {self.arity}"
                )
            if any(d >= self.base for d in sym):
                raise ValidationError(
                    f"digit out of range in symbol {sym} for base {self.base}"
                )
            if src not in declared:
                raise ValidationError(f"transition from unknown state {src!r}")
            if dst not in declared:
                raise ValidationError(f"transition to unknown state {dst!r}")
            cooked.append((src, sym, dst))
        if len(set(cooked)) != len(cooked):
            raise ValidationError("duplicate transition triple")
        cooked.sort(key=lambda t: (t[0], t[1].digits, t[2]))
        start = frozenset(str(s) for s in self.start)
        accept = frozenset(str(s) for s in self.accept)
        if not start:
            raise ValidationError("start set must be nonempty")
        if not start <= declared:
            raise ValidationError(f"start states {sorted(start - declared)} undeclared")
        if not accept <= declared:
            raise ValidationError(
                f"accept states {sorted(accept - declared)} undeclared"
            )
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "transitions", tuple(cooked))
        object.__setattr__(self, "start", start)
        object.__setattr__(self, "accept", accept)

    # -- derived structure (cached; the dataclass is frozen, caches are safe) --

    @cached_property
    def state_index(self) -> dict[str, int]:
        return {q: i for i, q in enumerate(self.states)}

    @cached_property
    def _delta(self) -> dict[tuple[str, DigitVector], tuple[str, ...]]:
        table: dict[tuple[str, DigitVector], list[str]] = {}
        for src, sym, dst in self.transitions:
            table.setdefault((src, sym), []).append(dst)
        return {key: tuple(v) for key, v in table.items()}

    @cached_property
    def out_edges(self) -> dict[str, tuple[tuple[DigitVector, str], ...]]:
        table: dict[str, list[tuple[DigitVector, str]]] = {q: [] for q in self.states}
        for src, sym, dst in self.transitions:
            table[src].append((sym, dst))
        return {q: tuple(v) for q, v in table.items()}

    @cached_property
    def symbols_used(self) -> tuple[DigitVector, ...]:
        return tuple(sorted({sym for _, sym, _ in self.transitions}))

    def delta(self, state: str, symbol: DigitVector | Sequence[int]) -> tuple[str, ...]:
        """Successor states of ``state`` on ``symbol`` (possibly empty)."""
        return self._delta.get((state, _coerce_symbol(symbol)), ())

    def step_set(self, states: Iterable[str], symbol: DigitVector) -> frozenset[str]:
        """Image of a state set under one symbol."""
        out: set[str] = set()
        for q in states:
            out.update(self._delta.get((q, symbol), ()))
        return frozenset(out)

    def successors(self, state: str) -> frozenset[str]:
        return frozenset(dst for _, dst in self.out_edges[state])

    def transition_counts(self) -> dict[tuple[str, str], int]:
        """Number of distinct symbols labeling each ordered state pair."""
        counts: dict[tuple[str, str], int] = {}
        for src, _, dst in self.transitions:
            counts[(src, dst)] = counts.get((src, dst), 0) + 1
        return counts

    def replace(
        self,
        *,
        states: Sequence[str] | None = None,
        transitions: Iterable[Transition] | None = None,
        start: Iterable[str] | None = None,
        accept: Iterable[str] | None = None,
    ) -> "Automaton":
        return Automaton(
            base=self.base,
            arity=self.arity,
            states=tuple(states) if states is not None else self.states,
            transitions=tuple(transitions)
            if transitions is not None
            else self.transitions,
            start=frozenset(start) if start is not None else self.start,
            accept=frozenset(accept) if accept is not None else self.accept,
        )

    def restrict(self, kept: Iterable[str]) -> "Automaton":
        """Sub-automaton induced by ``kept`` (start/accept intersected)."""
        keep = set(kept)
        if not self.start & keep:
            raise EmptyLanguageError("no start state survives the restriction")
        return Automaton(
            base=self.base,
            arity=self.arity,
            states=tuple(q for q in self.states if q in keep),
            transitions=tuple(
                t for t in self.transitions if t[0] in keep and t[2] in keep
            ),
            start=self.start & keep,
            accept=self.accept & keep,
        )


@dataclass(frozen=True)
class PropertyFlags:
    """Structural property flags of an automaton."""

    deterministic: bool
    finite_trim: bool
    trim: bool
    closed: bool
    weak: bool


@dataclass(frozen=True)
class SccDecomposition:
    """Strongly connected components of the automaton digraph.

    Components are numbered in topological order of the condensation DAG
    (edges go from lower to higher ids), states inside a component keep
    declaration order.  A component is non-trivial iff it contains a
    transition between two of its own states; a single state with a
    self-loop is non-trivial.
    """

    components: tuple[tuple[str, ...], ...]
    component_of: Mapping[str, int]
    dag_edges: frozenset[tuple[int, int]]
    contains_accept: tuple[bool, ...]
    trivial: tuple[bool, ...]

    def __len__(self) -> int:
        return len(self.components)


@dataclass(frozen=True)
class AmbiguityReport:
    """Result of the unambiguity check.

    ``witness`` is a shortest word prefix after which two in-progress
    accepting runs of one common word occupy different states (present
    only when the automaton is ambiguous).
    """

    unambiguous: bool
    witness: Word | None = None

    def __bool__(self) -> bool:
        return self.unambiguous


# ---------------------------------------------------------------------------
# parsing / serialization
# ---------------------------------------------------------------------------


def parse_automaton(text: str) -> Automaton:
    """Parse the JSON automaton document format.

    Expected shape::

        {"base": k, "arity": d, "states": [...], "start": [...],
         "accept": [...],
         "transitions": [{"from": id, "symbol": [d0,...], "to": id}, ...]}

    Raises :class:`FormatError` on malformed JSON (with line/column) and
    :class:`ValidationError` on structural violations (with the offending
    field in the message).
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(
            f"malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(doc, dict):
        raise FormatError("top-level value must be an object")
    for key in ("base", "arity", "states", "start", "accept", "transitions"):
        if key not in doc:
            raise ValidationError(f"missing required field {key!r}")
    if not isinstance(doc["base"], int) or isinstance(doc["base"], bool):
        raise ValidationError("field 'base' must be an integer")
    if not isinstance(doc["arity"], int) or isinstance(doc["arity"], bool):
        raise ValidationError("field 'arity' must be an integer")
    for key in ("states", "start", "accept", "transitions"):
        if not isinstance(doc[key], list):
            raise ValidationError(f"field {key!r} must be an array")
    transitions = []
    for i, entry in enumerate(doc["transitions"]):
        if not isinstance(entry, dict):
            raise ValidationError(f"transitions[{i}] must be an object")
        for key in ("from", "symbol", "to"):
            if key not in entry:
                raise ValidationError(f"transitions[{i}] missing field {key!r}")
        sym = entry["symbol"]
        if not isinstance(sym, list) or not all(
            isinstance(d, int) and not isinstance(d, bool) for d in sym
        ):
            raise ValidationError(
                f"transitions[{i}].symbol must be an array of integers"
            )
        transitions.append((str(entry["from"]), DigitVector(tuple(sym)), str(entry["to"])))
    states = [str(s) for s in doc["states"]]
    return Automaton(
        base=doc["base"],
        arity=doc["arity"],
        states=tuple(states),
        transitions=tuple(transitions),
        start=frozenset(str(s) for s in doc["start"]),
        accept=frozenset(str(s) for s in doc["accept"]),
    )


def automaton_to_dict(a: Automaton) -> dict:
    """Canonical plain-dict form: states in declaration order, start/accept
    in declaration order, transitions sorted by (from, symbol, to)."""
    order = a.state_index
    return {
        "base": a.base,
        "arity": a.arity,
        "states": list(a.states),
        "start": sorted(a.start, key=order.__getitem__),
        "accept": sorted(a.accept, key=order.__getitem__),
        "transitions": [
            {"from": src, "symbol": list(sym.digits), "to": dst}
            for src, sym, dst in a.transitions
        ],
    }


def serialize_automaton(a: Automaton) -> str:
    """Bit-exact canonical serialization of the automaton document."""
    return json.dumps(automaton_to_dict(a), separators=(", ", ": "))


def load_automaton(path: str) -> Automaton:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_automaton(handle.read())


# ---------------------------------------------------------------------------
# reachability and property flags
# ---------------------------------------------------------------------------


def _forward_reachable(a: Automaton, sources: Iterable[str]) -> set[str]:
    seen = set(sources)
    stack = list(seen)
    while stack:
        q = stack.pop()
        for _, dst in a.out_edges[q]:
            if dst not in seen:
                seen.add(dst)
                stack.append(dst)
    return seen


def _backward_reachable(a: Automaton, targets: Iterable[str]) -> set[str]:
    preds: dict[str, set[str]] = {q: set() for q in a.states}
    for src, _, dst in a.transitions:
        preds[dst].add(src)
    seen = set(targets)
    stack = list(seen)
    while stack:
        q = stack.pop()
        for p in preds[q]:
            if p not in seen:
                seen.add(p)
                stack.append(p)
    return seen


def _coaccessible_nonzero(a: Automaton) -> set[str]:
    """States with a path of length >= 1 to an accept state."""
    to_accept = _backward_reachable(a, a.accept)  # zero length allowed
    return {q for q in a.states if any(dst in to_accept for dst in a.successors(q))}


def classify_properties(a: Automaton) -> PropertyFlags:
    """Compute the deterministic / finite-trim / trim / closed / weak flags.

    Trim uses the strict reading: every state must be reachable from a
    start state and have a path of *nonzero* length to an accept state.
    ``finite_trim`` allows the zero-length path (the state may itself be
    accepting with no continuation).
    """
    deterministic = len(a.start) == 1 and all(
        len(dsts) <= 1 for dsts in a._delta.values()
    )
    reachable = _forward_reachable(a, a.start)
    coacc0 = _backward_reachable(a, a.accept)
    finite_trim = all(q in reachable and q in coacc0 for q in a.states)
    coacc1 = _coaccessible_nonzero(a)
    trim = all(q in reachable and q in coacc1 for q in a.states)
    closed = trim and a.accept == frozenset(a.states)
    scc = scc_decompose(a)
    weak = all(
        len({q in a.accept for q in comp}) == 1 for comp in scc.components
    )
    return PropertyFlags(
        deterministic=deterministic,
        finite_trim=finite_trim,
        trim=trim,
        closed=closed,
        weak=weak,
    )


def require_trim(a: Automaton) -> None:
    if not classify_properties(a).trim:
        raise NotTrimError("operation requires a trim automaton")


# ---------------------------------------------------------------------------
# trim / closure
# ---------------------------------------------------------------------------


def trim(a: Automaton) -> Automaton:
    """Largest sub-automaton in which every state is reachable from a start
    state and has a nonzero-length path to an accept state.

    The accepted infinite-word language is preserved: any state visited by
    an accepting run survives every pruning round.  Raises
    :class:`EmptyLanguageError` when nothing survives, which happens
    exactly when the automaton accepts no infinite word.
    """
    current = a
    while True:
        reachable = _forward_reachable(current, current.start)
        keep = {q for q in _coaccessible_nonzero(current) if q in reachable}
        if not keep or not (current.start & keep):
            raise EmptyLanguageError("trimming removed every state")
        if keep == set(current.states):
            return current
        current = current.restrict(keep)


def closure(a: Automaton) -> Automaton:
    """Same structure with every state accepting.

    Defined on trim automata only; the result recognizes the topological
    closure of the point set the input recognizes.
    """
    require_trim(a)
    return a.replace(accept=a.states)


# ---------------------------------------------------------------------------
# strongly connected components
# ---------------------------------------------------------------------------


def tarjan_components(nodes, successors) -> list[list]:
    """Iterative Tarjan SCC over any hashable nodes; components come out in
    reverse topological order, nodes inside a component in discovery order."""
    index: dict = {}
    low: dict = {}
    on_stack: set = set()
    stack: list = []
    components: list[list] = []
    counter = 0

    for root in nodes:
        if root in index:
            continue
        work = [(root, iter(successors[root]))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            node, it = work[-1]
            advanced = False
            for nxt in it:
                if nxt not in index:
                    index[nxt] = low[nxt] = counter
                    counter += 1
                    stack.append(nxt)
                    on_stack.add(nxt)
                    work.append((nxt, iter(successors[nxt])))
                    advanced = True
                    break
                if nxt in on_stack:
                    low[node] = min(low[node], index[nxt])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
            if low[node] == index[node]:
                comp = []
                while True:
                    q = stack.pop()
                    on_stack.discard(q)
                    comp.append(q)
                    if q == node:
                        break
                components.append(comp)
    return components


def scc_decompose(a: Automaton) -> SccDecomposition:
    """Strongly connected components of the transition digraph, numbered in
    topological order of the condensation."""
    succ = {q: sorted(a.successors(q)) for q in a.states}
    raw = tarjan_components(a.states, succ)
    raw.reverse()  # topological order: sources first
    order = a.state_index
    components = tuple(tuple(sorted(comp, key=order.__getitem__)) for comp in raw)
    component_of = {q: i for i, comp in enumerate(components) for q in comp}
    dag_edges = frozenset(
        (component_of[src], component_of[dst])
        for src, _, dst in a.transitions
        if component_of[src] != component_of[dst]
    )
    internal = set()
    for src, _, dst in a.transitions:
        if component_of[src] == component_of[dst]:
            internal.add(component_of[src])
    ids = range(len(components))
    return SccDecomposition(
        components=components,
        component_of=component_of,
        dag_edges=dag_edges,
        contains_accept=tuple(
            any(q in a.accept for q in components[i]) for i in ids
        ),
        trivial=tuple(i not in internal for i in ids),
    )


def states_on_cycles(a: Automaton) -> tuple[str, ...]:
    """States whose strongly connected component is non-trivial."""
    scc = scc_decompose(a)
    return tuple(
        q for q in a.states if not scc.trivial[scc.component_of[q]]
    )


# ---------------------------------------------------------------------------
# cycle automata and the multigraph -> digraph construction
# ---------------------------------------------------------------------------


def cycle_automaton(a: Automaton, q: str) -> Automaton:
    """Automaton whose finite-word language is the cycle language of ``q``:
    all words labeling a run from ``q`` back to itself.

    ``q`` becomes the only start and accept state and the result is
    trimmed, leaving exactly the states of ``q``'s strongly connected
    component.  ``q`` must lie on at least one cycle.
    """
    if q not in a.state_index:
        raise ValidationError(f"unknown state {q!r}")
    if q not in set(states_on_cycles(a)):
        raise AcyclicStateError(f"state {q!r} lies on no cycle")
    return trim(a.replace(start=[q], accept=[q]))


def multigraph_to_digraph(a: Automaton) -> Automaton:
    """Equivalent automaton whose transition graph is a true digraph: at
    most one transition between any ordered pair of states.

    States are (state, incoming-symbol) pairs of the trim part, so parallel
    edges of the original become edges between distinct pair states.  The
    start tag uses the lexicographically least alphabet symbol, which makes
    the construction reproducible.  Input must be deterministic; the
    accepted infinite-word language is preserved, and closed inputs yield
    closed outputs.
    """
    if not classify_properties(a).deterministic:
        raise NondeterministicError("digraph form is defined for deterministic input")
    sigma0 = DigitVector((0,) * a.arity)

    def name(q: str, sym: DigitVector) -> str:
        return f"{q}|{'-'.join(str(d) for d in sym.digits)}"

    (s0,) = a.start
    pair_states: list[tuple[str, DigitVector]] = [(s0, sigma0)]
    seen = {(s0, sigma0)}
    transitions: list[Transition] = []
    frontier = deque(pair_states)
    while frontier:
        q, tag = frontier.popleft()
        for sym, dst in a.out_edges[q]:
            target = (dst, sym)
            transitions.append((name(q, tag), sym, name(dst, sym)))
            if target not in seen:
                seen.add(target)
                pair_states.append(target)
                frontier.append(target)
    product = Automaton(
        base=a.base,
        arity=a.arity,
        states=tuple(name(q, sym) for q, sym in pair_states),
        transitions=tuple(transitions),
        start=frozenset({name(s0, sigma0)}),
        accept=frozenset(
            name(q, sym) for q, sym in pair_states if q in a.accept
        ),
    )
    result = trim(product)
    counts = result.transition_counts()
    assert all(c == 1 for c in counts.values()), "pair construction left a multi-edge"
    return result


# ---------------------------------------------------------------------------
# unambiguity
# ---------------------------------------------------------------------------


def check_unambiguous(a: Automaton) -> AmbiguityReport:
    """Decide whether every accepted infinite word has exactly one accepting run.

    Works on the self-product over ordered state pairs: the automaton is
    ambiguous iff some reachable pair of distinct states can reach (within
    the product) a non-trivial strongly connected component in which both
    coordinates pass through accept states, i.e. one shared word carries
    two accepting runs that differ at least once.  Deterministic automata
    are always unambiguous.
    """
    starts = sorted(a.start)
    init = [(p, q) for p in starts for q in starts]
    # BFS keeps, per product pair, a shortest word reaching it.
    word_to: dict[tuple[str, str], Word] = {pair: () for pair in init}
    frontier = deque(init)
    succ: dict[tuple[str, str], list[tuple[str, str]]] = {pair: [] for pair in init}
    while frontier:
        p, q = frontier.popleft()
        here = word_to[(p, q)]
        for sym in a.symbols_used:
            for p2 in a.delta(p, sym):
                for q2 in a.delta(q, sym):
                    succ[(p, q)].append((p2, q2))
                    if (p2, q2) not in word_to:
                        word_to[(p2, q2)] = here + (sym,)
                        succ.setdefault((p2, q2), [])
                        frontier.append((p2, q2))
    pairs = list(word_to)
    decoded = tarjan_components(pairs, succ)
    comp_of: dict[tuple[str, str], int] = {}
    for i, comp in enumerate(decoded):
        for pair in comp:
            comp_of[pair] = i
    nontrivial = set()
    for pair in pairs:
        for nxt in succ[pair]:
            if comp_of[nxt] == comp_of[pair]:
                nontrivial.add(comp_of[pair])
    good = {
        i
        for i, comp in enumerate(decoded)
        if i in nontrivial
        and any(p in a.accept for p, _ in comp)
        and any(q in a.accept for _, q in comp)
    }
    # pairs that can reach a good component
    reach_good: set[tuple[str, str]] = set()
    for i in good:
        reach_good.update(decoded[i])
    changed = True
    while changed:
        changed = False
        for pair in pairs:
            if pair not in reach_good and any(n in reach_good for n in succ[pair]):
                reach_good.add(pair)
                changed = True
    witnesses = [
        word_to[pair] for pair in pairs if pair[0] != pair[1] and pair in reach_good
    ]
    if not witnesses:
        return AmbiguityReport(unambiguous=True)
    witness = min(witnesses, key=lambda w: (len(w), tuple(s.digits for s in w)))
    return AmbiguityReport(unambiguous=False, witness=witness)


# ---------------------------------------------------------------------------
# prefix enumeration (the brute-force oracle)
# ---------------------------------------------------------------------------


def _check_cap(a: Automaton, n: int, cap: int) -> None:
    if n < 0:
        raise ValidationError("depth must be nonnegative")
    if (a.base ** a.arity) ** n > cap:
        raise CapExceededError(
            f"depth {n} needs up to {(a.base ** a.arity) ** n} strings, cap is {cap}"
        )


def _prefix_codes(a: Automaton, n: int) -> dict[int, frozenset[str]]:
    """Length-n words with a run from a start state, packed as integers over
    the used-symbol alphabet, mapped to the set of states their runs reach."""
    used = a.symbols_used
    radix = max(len(used), 1)
    level: dict[int, frozenset[str]] = {0: frozenset(a.start)}
    for _ in range(n):
        nxt: dict[int, set[str]] = {}
        for code, stateset in level.items():
            for i, sym in enumerate(used):
                targets = a.step_set(stateset, sym)
                if targets:
                    key = code * radix + i
                    bucket = nxt.get(key)
                    if bucket is None:
                        nxt[key] = set(targets)
                    else:
                        bucket.update(targets)
        level = {code: frozenset(s) for code, s in nxt.items()}
        if not level:
            break
    return level


def _decode_word(code: int, n: int, used: tuple[DigitVector, ...]) -> Word:
    radix = max(len(used), 1)
    out: list[DigitVector] = []
    for _ in range(n):
        code, i = divmod(code, radix)
        out.append(used[i])
    out.reverse()
    return tuple(out)


def prefix_count(a: Automaton, n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> int:
    """Number of distinct length-n words with a run from a start state
    (= ``len(enumerate_prefixes(a, n))``, without materializing the words)."""
    _check_cap(a, n, cap)
    return len(_prefix_codes(a, n))


def enumerate_prefixes(
    a: Automaton, n: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> set[Word]:
    """All length-n words with a run from a start state.

    On a trim automaton these are exactly the length-n prefixes of the
    accepted infinite words.  Guarded by the enumeration cap: depth n must
    satisfy (k^d)^n <= cap.
    """
    _check_cap(a, n, cap)
    used = a.symbols_used
    return {_decode_word(code, n, used) for code in _prefix_codes(a, n)}


def accepts(a: Automaton, word: Iterable[DigitVector | Sequence[int]]) -> bool:
    """Finite-automaton semantics: does some run of ``word`` from a start
    state end in an accept state?"""
    current = frozenset(a.start)
    for sym in word:
        current = a.step_set(current, _coerce_symbol(sym))
        if not current:
            return False
    return bool(current & a.accept)


# ---------------------------------------------------------------------------
# prefix-language determinization (subset construction)
# ---------------------------------------------------------------------------


def prefix_determinization(
    a: Automaton, cap: int = DEFAULT_ENUMERATION_CAP
) -> Automaton:
    """Deterministic automaton for the prefix language of ``a``.

    Subset construction over the trim input with every subset accepting:
    the prefix language of a trim automaton is prefix-closed and regular,
    so runs of the result are in bijection with distinct prefixes.  The
    result is trim, closed and deterministic.
    """
    require_trim(a)
    order = a.state_index

    def name(subset: frozenset[str]) -> str:
        return "{" + ",".join(sorted(subset, key=order.__getitem__)) + "}"

    start = frozenset(a.start)
    subsets: list[frozenset[str]] = [start]
    seen = {start}
    transitions: list[Transition] = []
    frontier = deque([start])
    while frontier:
        subset = frontier.popleft()
        for sym in a.symbols_used:
            target = a.step_set(subset, sym)
            if not target:
                continue
            transitions.append((name(subset), sym, name(target)))
            if target not in seen:
                seen.add(target)
                subsets.append(target)
                frontier.append(target)
                if len(subsets) > cap:
                    raise CapExceededError(
                        f"subset construction exceeded cap {cap}"
                    )
    names = tuple(name(s) for s in subsets)
    return Automaton(
        base=a.base,
        arity=a.arity,
        states=names,
        transitions=tuple(transitions),
        start=frozenset({name(start)}),
        accept=frozenset(names),
    )

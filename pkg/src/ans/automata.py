"""Ordered alphabets and deterministic finite automata, plain and with output.

Conventions used throughout the package:

* Automata are *partial*: a missing transition means the word falls into an
  implicit dead state and is rejected.  ``completed()`` materializes that
  state when a construction needs totality.
* States are opaque hashable values.  Constructions that build new automata
  (products, quotients) use tuples as states; ``renumbered()`` gives the
  canonical breadth-first string naming used for serialization.
* All instances are immutable by contract: no method mutates ``self``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Iterator

from .errors import AlphabetMismatchError

Symbol = Hashable
State = Hashable
Word = tuple

# Placeholder output carried by states that no accepted word reaches.
BOTTOM = "⊥"
# Default name of an explicitly materialized dead state.  The "@" prefix is
# reserved: user-supplied files cannot declare identifiers starting with it.
DEAD = "@dead"


@dataclass(frozen=True)
class OrderedAlphabet:
    """A finite alphabet with a fixed total order on its symbols."""

    symbols: tuple
    _pos: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        symbols = tuple(self.symbols)
        object.__setattr__(self, "symbols", symbols)
        if not symbols:
            raise ValueError("alphabet must contain at least one symbol")
        pos = {}
        for i, s in enumerate(symbols):
            if s in pos:
                raise ValueError(f"duplicate alphabet symbol {s!r}")
            pos[s] = i
        object.__setattr__(self, "_pos", pos)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator:
        return iter(self.symbols)

    def __contains__(self, symbol) -> bool:
        return symbol in self._pos

    def index(self, symbol) -> int:
        try:
            return self._pos[symbol]
        except KeyError:
            raise KeyError(f"symbol {symbol!r} not in alphabet {self.symbols!r}") from None

    def word_key(self, word: Word):
        """Sort key realizing shortlex order: length first, then letter order."""
        return (len(word), tuple(self._pos[s] for s in word))


class _Machine:
    """Method mixin shared by Dfa and Dfao (fields live in the dataclasses)."""

    alphabet: OrderedAlphabet
    states: tuple
    start: State
    trans: dict

    def _check_core(self):
        seen = set()
        for q in self.states:
            if q in seen:
                raise ValueError(f"duplicate state {q!r}")
            seen.add(q)
        if self.start not in seen:
            raise ValueError(f"start state {self.start!r} not among states")
        for (q, a), q2 in self.trans.items():
            if q not in seen or q2 not in seen:
                raise ValueError(f"transition {(q, a, q2)!r} uses an undeclared state")
            if a not in self.alphabet:
                raise ValueError(f"transition {(q, a, q2)!r} uses a symbol outside the alphabet")

    def step(self, state: State, symbol) -> State | None:
        return self.trans.get((state, symbol))

    def run(self, word: Iterable, state: State | None = None) -> State | None:
        """State reached from `state` (default: start) or None if undefined."""
        q = self.start if state is None else state
        for a in word:
            q = self.trans.get((q, a))
            if q is None:
                return None
        return q

    def run_trace(self, word: Iterable, state: State | None = None) -> list | None:
        """All intermediate states including the first; None if the run dies."""
        q = self.start if state is None else state
        trace = [q]
        for a in word:
            q = self.trans.get((q, a))
            if q is None:
                return None
            trace.append(q)
        return trace

    def reachable(self) -> tuple:
        """States reachable from the start, in breadth-first alphabet order."""
        order = [self.start]
        seen = {self.start}
        queue = deque(order)
        while queue:
            q = queue.popleft()
            for a in self.alphabet:
                q2 = self.trans.get((q, a))
                if q2 is not None and q2 not in seen:
                    seen.add(q2)
                    order.append(q2)
                    queue.append(q2)
        return tuple(order)

    def is_complete(self) -> bool:
        return all((q, a) in self.trans for q in self.states for a in self.alphabet)

    def _fresh_state(self, base: str) -> State:
        name = base
        k = 0
        existing = set(self.states)
        while name in existing:
            name = f"{base}{k}"
            k += 1
        return name


@dataclass(frozen=True)
class Dfa(_Machine):
    """Deterministic partial automaton accepting a language over its alphabet."""

    alphabet: OrderedAlphabet
    states: tuple
    start: State
    finals: frozenset
    trans: dict

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "finals", frozenset(self.finals))
        self._check_core()
        if not self.finals <= set(self.states):
            raise ValueError("final states must be declared states")

    def accepts(self, word: Iterable) -> bool:
        return self.run(word) in self.finals

    def coaccessible(self) -> frozenset:
        """States from which some final state can be reached."""
        back: dict[State, set] = {q: set() for q in self.states}
        for (q, _a), q2 in self.trans.items():
            back[q2].add(q)
        alive = set(self.finals)
        queue = deque(alive)
        while queue:
            q = queue.popleft()
            for p in back[q]:
                if p not in alive:
                    alive.add(p)
                    queue.append(p)
        return frozenset(alive)

    def trimmed(self) -> "Dfa":
        """Restrict to accessible-and-coaccessible states (start always kept)."""
        keep = set(self.reachable()) & self.coaccessible()
        keep.add(self.start)
        states = tuple(q for q in self.states if q in keep)
        trans = {(q, a): q2 for (q, a), q2 in self.trans.items() if q in keep and q2 in keep}
        return Dfa(self.alphabet, states, self.start, self.finals & keep, trans)

    def completed(self, dead: State = DEAD) -> "Dfa":
        """Total-transition view; adds a fresh dead state only if needed."""
        if self.is_complete():
            return self
        sink = self._fresh_state(dead)
        states = self.states + (sink,)
        trans = dict(self.trans)
        for q in states:
            for a in self.alphabet:
                trans.setdefault((q, a), sink)
        return Dfa(self.alphabet, states, self.start, self.finals, trans)

    def renumbered(self, prefix: str = "q") -> "Dfa":
        """Canonical copy: reachable states renamed q0, q1, ... in BFS order."""
        order = self.reachable()
        name = {q: f"{prefix}{i}" for i, q in enumerate(order)}
        trans = {
            (name[q], a): name[q2]
            for (q, a), q2 in self.trans.items()
            if q in name and q2 in name
        }
        finals = frozenset(name[q] for q in self.finals if q in name)
        return Dfa(self.alphabet, tuple(name[q] for q in order), name[self.start], finals, trans)


@dataclass(frozen=True)
class Dfao(_Machine):
    """Deterministic automaton with output: every state carries one output symbol."""

    alphabet: OrderedAlphabet
    states: tuple
    start: State
    trans: dict
    output: dict
    output_alphabet: tuple

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "output_alphabet", tuple(self.output_alphabet))
        self._check_core()
        allowed = set(self.output_alphabet)
        if len(allowed) != len(self.output_alphabet):
            raise ValueError("duplicate symbols in output alphabet")
        for q in self.states:
            if q not in self.output:
                raise ValueError(f"state {q!r} has no output symbol")
            if self.output[q] not in allowed:
                raise ValueError(f"state {q!r} outputs {self.output[q]!r}, outside the output alphabet")

    def transform(self, word: Iterable, state: State | None = None):
        """Output at the state reached by `word`; ValueError if the run dies."""
        q = self.run(word, state)
        if q is None:
            raise ValueError("output undefined: the run leaves the transition table")
        return self.output[q]

    def accessible(self) -> "Dfao":
        keep = self.reachable()
        kset = set(keep)
        trans = {(q, a): q2 for (q, a), q2 in self.trans.items() if q in kset and q2 in kset}
        out = {q: self.output[q] for q in keep}
        used = set(out.values())
        out_alpha = tuple(d for d in self.output_alphabet if d in used)
        return Dfao(self.alphabet, keep, self.start, trans, out, out_alpha)

    def completed(self, dead: State = DEAD, dead_output=BOTTOM) -> "Dfao":
        """Total-transition view; the added sink state outputs `dead_output`."""
        if self.is_complete():
            return self
        sink = self._fresh_state(dead)
        states = self.states + (sink,)
        trans = dict(self.trans)
        for q in states:
            for a in self.alphabet:
                trans.setdefault((q, a), sink)
        out = dict(self.output)
        out[sink] = dead_output
        out_alpha = self.output_alphabet
        if dead_output not in out_alpha:
            out_alpha = out_alpha + (dead_output,)
        return Dfao(self.alphabet, states, self.start, trans, out, out_alpha)

    def renumbered(self, prefix: str = "q") -> "Dfao":
        order = self.reachable()
        name = {q: f"{prefix}{i}" for i, q in enumerate(order)}
        trans = {
            (name[q], a): name[q2]
            for (q, a), q2 in self.trans.items()
            if q in name and q2 in name
        }
        out = {name[q]: self.output[q] for q in order}
        return Dfao(self.alphabet, tuple(name[q] for q in order), name[self.start], trans, out, self.output_alphabet)

    def as_acceptor(self, outputs) -> Dfa:
        """DFA over the same graph accepting words whose output lies in `outputs`."""
        wanted = set(outputs)
        finals = frozenset(q for q in self.states if self.output[q] in wanted)
        return Dfa(self.alphabet, self.states, self.start, finals, dict(self.trans))


@dataclass(frozen=True)
class ProductMachine:
    """Pair automaton of a DFA and a DFAO over one alphabet.

    States of ``dfao`` are pairs ``(k, k')``; the pair keeps the DFA side's
    acceptance (``finals``) and the DFAO side's output (``dfao.output``).
    Both factors are completed first, so the product has total transitions.
    """

    dfao: Dfao
    finals: frozenset


def _require_same_alphabet(a, b):
    if a.alphabet.symbols != b.alphabet.symbols:
        raise AlphabetMismatchError(
            f"operands use different ordered alphabets: {a.alphabet.symbols!r} vs {b.alphabet.symbols!r}"
        )


def product(a: Dfa, b: Dfao) -> ProductMachine:
    """Reachable pair automaton of `a` and `b` (both completed first)."""
    _require_same_alphabet(a, b)
    ca = a.completed()
    cb = b.completed()
    start = (ca.start, cb.start)
    order = [start]
    seen = {start}
    trans = {}
    queue = deque(order)
    while queue:
        (k, kp) = queue.popleft()
        for s in ca.alphabet:
            nxt = (ca.trans[(k, s)], cb.trans[(kp, s)])
            trans[((k, kp), s)] = nxt
            if nxt not in seen:
                seen.add(nxt)
                order.append(nxt)
                queue.append(nxt)
    out = {pair: cb.output[pair[1]] for pair in order}
    used = set(out.values())
    out_alpha = tuple(d for d in cb.output_alphabet if d in used)
    dfao = Dfao(ca.alphabet, tuple(order), start, trans, out, out_alpha)
    finals = frozenset(pair for pair in order if pair[0] in ca.finals)
    return ProductMachine(dfao, finals)


def _refine(states: tuple, alphabet: OrderedAlphabet, trans: dict, block: dict) -> dict:
    """Moore partition refinement of a total automaton; returns state -> block id."""
    while True:
        keys = {}
        nums = {}
        new = {}
        for q in states:
            key = (block[q], tuple(block[trans[(q, a)]] for a in alphabet))
            if key not in nums:
                nums[key] = len(nums)
            keys[q] = key
            new[q] = nums[keys[q]]
        if len(nums) == len(set(block.values())):
            return new
        block = new


def minimize(a: Dfa) -> Dfa:
    """Minimal partial DFA for the language of `a`, canonically renumbered."""
    c = a.trimmed().completed()
    reach = c.reachable()
    block = {q: (1 if q in c.finals else 0) for q in reach}
    trans = {(q, s): c.trans[(q, s)] for q in reach for s in c.alphabet}
    block = _refine(reach, c.alphabet, trans, block)
    # quotient
    rep = {}
    for q in reach:
        rep.setdefault(block[q], q)
    qstates = tuple(sorted(rep, key=lambda b: reach.index(rep[b])))
    qtrans = {(b, s): block[trans[(rep[b], s)]] for b in qstates for s in c.alphabet}
    qfinals = frozenset(block[q] for q in c.finals if q in block)
    quotient = Dfa(c.alphabet, qstates, block[c.start], qfinals, qtrans)
    return quotient.trimmed().renumbered()


def reduce_dfao(m: Dfao) -> Dfao:
    """Accessible DFAO merging states indistinguishable by future outputs.

    Two states merge exactly when every word leads them to equal outputs;
    missing transitions count as a distinct placeholder behavior.
    """
    acc = m.accessible()
    c = acc.completed()
    added_sink = tuple(q for q in c.states if q not in acc.states)
    reach = c.reachable()
    out_ids = {}
    block = {}
    for q in reach:
        d = c.output[q]
        if d not in out_ids:
            out_ids[d] = len(out_ids)
        block[q] = out_ids[d]
    trans = {(q, s): c.trans[(q, s)] for q in reach for s in c.alphabet}
    block = _refine(reach, c.alphabet, trans, block)
    rep = {}
    for q in reach:
        rep.setdefault(block[q], q)
    # the class of the completion sink reverts to missing transitions, except
    # when the start itself landed there (a state set cannot be empty)
    drop = {block[q] for q in added_sink} - {block[c.start]}
    qstates = tuple(sorted(rep, key=lambda b: reach.index(rep[b])))
    qtrans = {
        (b, s): block[trans[(rep[b], s)]]
        for b in qstates
        for s in c.alphabet
        if block[trans[(rep[b], s)]] not in drop
    }
    qout = {b: c.output[rep[b]] for b in qstates}
    kept = tuple(b for b in qstates if b not in drop)
    qtrans = {(b, s): q2 for (b, s), q2 in qtrans.items() if b not in drop}
    qout = {b: qout[b] for b in kept}
    used = set(qout.values())
    out_alpha = tuple(d for d in c.output_alphabet if d in used)
    reduced = Dfao(c.alphabet, kept, block[c.start], qtrans, qout, out_alpha)
    return reduced.renumbered()


def is_empty(a: Dfa) -> bool:
    return not (set(a.reachable()) & a.finals)


def is_infinite(a: Dfa) -> bool:
    """True iff `a` accepts infinitely many words (cycle in the trimmed part)."""
    t = a.trimmed()
    if is_empty(t):
        return False
    # iterative depth-first search for a cycle among live states
    WHITE, GREY, BLACK = 0, 1, 2
    color = {q: WHITE for q in t.states}
    for root in t.states:
        if color[root] != WHITE:
            continue
        stack = [(root, iter(t.alphabet))]
        color[root] = GREY
        while stack:
            q, it = stack[-1]
            advanced = False
            for s in it:
                q2 = t.trans.get((q, s))
                if q2 is None:
                    continue
                if color[q2] == GREY:
                    return True
                if color[q2] == WHITE:
                    color[q2] = GREY
                    stack.append((q2, iter(t.alphabet)))
                    advanced = True
                    break
            if not advanced:
                color[q] = BLACK
                stack.pop()
    return False


def distinguishing_word(a: Dfa, b: Dfa) -> Word | None:
    """Shortest word accepted by exactly one of the two DFAs, or None."""
    _require_same_alphabet(a, b)
    ca = a.completed()
    cb = b.completed()
    start = (ca.start, cb.start)
    seen = {start}
    queue = deque([(start, ())])
    while queue:
        (p, q), w = queue.popleft()
        if (p in ca.finals) != (q in cb.finals):
            return w
        for s in ca.alphabet:
            nxt = (ca.trans[(p, s)], cb.trans[(q, s)])
            if nxt not in seen:
                seen.add(nxt)
                queue.append((nxt, w + (s,)))
    return None


def equivalent(a: Dfa, b: Dfa) -> bool:
    """True iff the two DFAs accept the same language (same ordered alphabet)."""
    return distinguishing_word(a, b) is None


def _boolean_product(a: Dfa, b: Dfa, keep) -> Dfa:
    _require_same_alphabet(a, b)
    ca = a.completed()
    cb = b.completed()
    start = (ca.start, cb.start)
    order = [start]
    seen = {start}
    trans = {}
    queue = deque(order)
    while queue:
        (p, q) = queue.popleft()
        for s in ca.alphabet:
            nxt = (ca.trans[(p, s)], cb.trans[(q, s)])
            trans[((p, q), s)] = nxt
            if nxt not in seen:
                seen.add(nxt)
                order.append(nxt)
                queue.append(nxt)
    finals = frozenset(pq for pq in order if keep(pq[0] in ca.finals, pq[1] in cb.finals))
    dfa = Dfa(ca.alphabet, tuple(order), start, finals, trans)
    return dfa.trimmed().renumbered()


def intersect(a: Dfa, b: Dfa) -> Dfa:
    return _boolean_product(a, b, lambda x, y: x and y)


def union(a: Dfa, b: Dfa) -> Dfa:
    return _boolean_product(a, b, lambda x, y: x or y)


def difference(a: Dfa, b: Dfa) -> Dfa:
    """Words accepted by `a` but not by `b`."""
    return _boolean_product(a, b, lambda x, y: x and not y)

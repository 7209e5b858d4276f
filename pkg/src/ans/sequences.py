"""Sequences read off a numeration system by a finite-state output machine.

The n-th term is the machine's output on the n-th word of the language in
shortlex order.  Besides evaluation and streaming, this module converts both
ways between three presentations of such a sequence:

* per-symbol fibers — the regular languages of representations sharing one
  output value (``fiber`` / ``dfao_from_fibers``);
* the kernel — the finitely many "suffix subsequences" obtained by fixing a
  prefix of the representation (``kernel`` / ``subsequence``), together with
  a learner that rebuilds a machine from any black-box term function whose
  kernel is finite (``dfao_from_kernel``);
* occurrence statistics of output factors (``occurrence_gaps``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import islice
from typing import Callable, Hashable, Iterable, Iterator

from .automata import (
    BOTTOM,
    Dfa,
    Dfao,
    OrderedAlphabet,
    Word,
    _refine,
    distinguishing_word,
    equivalent,
    intersect,
    is_empty,
    minimize,
    reduce_dfao,
    union,
)
from .errors import AlphabetMismatchError, AnsError, KernelBoundError, PartitionError
from .numeration import NumerationSystem

SequenceStream = Iterator


def _fused_stream(system: NumerationSystem, machine: Dfao, root, mstate) -> SequenceStream:
    """Outputs of `machine` over the shortlex words accepted from `root`.

    `machine` must be complete and `mstate` is where its run currently
    stands.  The cursor reports the first position that changed between
    consecutive words, so the machine's run is patched, not recomputed.
    """
    cur = system.cursor(0, root=root)
    if cur.exhausted:
        return
    stack = [mstate]
    for a in cur.word:
        stack.append(machine.trans[(stack[-1], a)])
    while True:
        yield machine.output[stack[-1]]
        i = cur.advance()
        if cur.exhausted:
            return
        del stack[i + 1 :]
        for a in cur.word[i:]:
            stack.append(machine.trans[(stack[-1], a)])


def sequence(system: NumerationSystem, machine: Dfao) -> SequenceStream:
    """Lazily yield the sequence of machine outputs over all ranks 0, 1, 2, …"""
    if machine.alphabet.symbols != system.alphabet.symbols:
        raise AlphabetMismatchError(
            f"machine alphabet {machine.alphabet.symbols!r} differs from "
            f"system alphabet {system.alphabet.symbols!r}"
        )
    m = machine if machine.is_complete() else machine.completed()
    return _fused_stream(system, m, system.language.start, m.start)


def take(stream: Iterable, n: int) -> tuple:
    """First `n` items of a stream (fewer if it ends early)."""
    return tuple(islice(stream, n))


@dataclass(frozen=True)
class AutomaticSequence:
    """A sequence given by a numeration system and an output machine."""

    system: NumerationSystem
    machine: Dfao
    output_alphabet: tuple = field(init=False)

    def __post_init__(self):
        if self.machine.alphabet.symbols != self.system.alphabet.symbols:
            raise AlphabetMismatchError(
                f"machine alphabet {self.machine.alphabet.symbols!r} differs "
                f"from system alphabet {self.system.alphabet.symbols!r}"
            )
        object.__setattr__(self, "output_alphabet", self.machine.output_alphabet)

    def term(self, n: int):
        """The output at rank `n` (the machine run on the n-th word)."""
        return self.machine.transform(self.system.rep(n))

    def stream(self) -> SequenceStream:
        return sequence(self.system, self.machine)

    def prefix(self, n: int) -> tuple:
        return take(self.stream(), n)


def fiber(u: AutomaticSequence, a) -> Dfa:
    """Minimal DFA for the representations whose output is `a`."""
    if a not in set(u.machine.output_alphabet):
        raise AnsError(f"symbol {a!r} is not in the output alphabet")
    return minimize(intersect(u.machine.as_acceptor({a}), u.system.language))


def dfao_from_fibers(system: NumerationSystem, fibers: dict) -> Dfao:
    """Rebuild an output machine from one representation language per symbol.

    The languages must partition the system's language: any overlap or any
    uncovered word raises PartitionError naming a witness.  States of the
    result are reachable tuples of per-fiber states; a tuple accepted by
    exactly one fiber outputs that fiber's symbol, and tuples reached only
    by words outside the language output the placeholder "⊥".
    """
    symbols = tuple(fibers)
    if not symbols:
        raise PartitionError("no fibers given")
    for a, f in fibers.items():
        if f.alphabet.symbols != system.alphabet.symbols:
            raise AlphabetMismatchError(
                f"fiber for {a!r} uses alphabet {f.alphabet.symbols!r}, "
                f"expected {system.alphabet.symbols!r}"
            )
    for i, a in enumerate(symbols):
        for b in symbols[i + 1 :]:
            overlap = intersect(fibers[a], fibers[b])
            if not is_empty(overlap):
                raise PartitionError(f"fibers for {a!r} and {b!r} overlap")
    covered = fibers[symbols[0]]
    for a in symbols[1:]:
        covered = union(covered, fibers[a])
    if not equivalent(covered, system.language):
        w = distinguishing_word(covered, system.language)
        label = "".join(map(str, w)) if w else "the empty word"
        raise PartitionError(
            f"fibers do not cover the language exactly: {label} separates their "
            "union from it"
        )

    parts = [fibers[a].completed() for a in symbols]
    start = tuple(p.start for p in parts)
    states = [start]
    seen = {start}
    trans = {}
    out = {}
    i = 0
    while i < len(states):
        q = states[i]
        i += 1
        hits = [a for a, p, comp in zip(symbols, q, parts) if p in comp.finals]
        if len(hits) > 1:  # pragma: no cover - excluded by the overlap check
            raise PartitionError(f"fibers for {hits[0]!r} and {hits[1]!r} overlap")
        out[q] = hits[0] if hits else BOTTOM
        for s in system.alphabet:
            q2 = tuple(comp.trans[(p, s)] for p, comp in zip(q, parts))
            trans[(q, s)] = q2
            if q2 not in seen:
                seen.add(q2)
                states.append(q2)
    out_alpha = symbols if BOTTOM not in out.values() else symbols + (BOTTOM,)
    machine = Dfao(system.alphabet, tuple(states), start, trans, out, out_alpha)
    return machine.renumbered()


@dataclass(frozen=True)
class KernelClass:
    """One class of prefixes inducing the same suffix subsequence.

    `representative_prefix` is the shortlex-least member; `pair_state` is
    the (language state, machine state) pair it reaches in the canonical
    automata; `empty` flags prefixes that no word of the language extends.
    """

    class_id: int
    representative_prefix: Word
    pair_state: tuple
    empty: bool


def kernel(u: AutomaticSequence) -> tuple[KernelClass, ...]:
    """All distinct suffix subsequences of `u`, one class each.

    Two prefixes w, w' are identified when they admit the same accepted
    continuations and the machine outputs agree on all of them — decided
    exactly, by partition refinement over the pair automaton of the minimal
    language automaton and the reduced output machine (outputs masked at
    non-accepting language states, where they can never be observed).
    """
    lang = minimize(u.system.language).completed()
    mach = reduce_dfao(u.machine).completed()
    alive = lang.coaccessible()
    alphabet = u.system.alphabet

    start = (lang.start, mach.start)
    pairs = [start]
    seen = {start}
    trans = {}
    i = 0
    while i < len(pairs):
        ql, qm = pairs[i]
        i += 1
        for s in alphabet:
            q2 = (lang.trans[(ql, s)], mach.trans[(qm, s)])
            trans[((ql, qm), s)] = q2
            if q2 not in seen:
                seen.add(q2)
                pairs.append(q2)

    block = {
        (ql, qm): (True, mach.output[qm]) if ql in lang.finals else (False, None)
        for (ql, qm) in pairs
    }
    ids = {}
    for q in pairs:
        ids.setdefault(block[q], len(ids))
    block = _refine(tuple(pairs), alphabet, trans, {q: ids[block[q]] for q in pairs})

    word_to = {start: ()}
    queue = [start]
    i = 0
    while i < len(queue):
        q = queue[i]
        i += 1
        for s in alphabet:
            q2 = trans[(q, s)]
            if q2 not in word_to:
                word_to[q2] = word_to[q] + (s,)
                queue.append(q2)

    key = lambda w: (len(w), alphabet.word_key(w))
    best: dict[int, Word] = {}
    for q in pairs:
        w = word_to[q]
        b = block[q]
        if b not in best or key(w) < key(best[b]):
            best[b] = w
    reps = sorted(best.values(), key=key)
    classes = []
    for cid, w in enumerate(reps):
        ql = lang.run(w)
        qm = mach.run(w)
        classes.append(KernelClass(cid, w, (ql, qm), ql not in alive))
    return tuple(classes)


def subsequence(u: AutomaticSequence, k: KernelClass) -> SequenceStream:
    """Terms of `u` at ranks whose representation extends the class prefix.

    Continuations are enumerated shortlex; the stream is finite or empty
    when the prefix admits few or no accepted extensions.
    """
    w = k.representative_prefix
    root = u.system.language.run(w)
    if root is None:
        return iter(())
    m = u.machine if u.machine.is_complete() else u.machine.completed()
    return _fused_stream(u.system, m, root, m.run(w))


def dfao_from_kernel(term: Callable[[int], Hashable], system: NumerationSystem, bound: int) -> Dfao:
    """Learn an output machine for a black-box term function.

    Prefixes are explored breadth-first and identified when they agree on
    their first `bound` accepted continuations (the continuation words and
    the terms at them).  More than `bound` distinct classes, or a rebuilt
    machine that fails to reproduce the first `bound` terms, raises
    KernelBoundError: the sequence is not recognized within this bound.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    lang = system.language

    def signature(w: Word) -> tuple:
        q = lang.run(w)
        if q is None:
            return ()
        sig = []
        for z in islice(system.words_from(q), bound):
            sig.append((z, term(system.val(w + z))))
        return tuple(sig)

    start_sig = signature(())
    index = {start_sig: 0}
    reps: list[Word] = [()]
    sigs: list[tuple] = [start_sig]
    trans = {}
    ci = 0
    while ci < len(reps):
        w = reps[ci]
        for s in system.alphabet:
            w2 = w + (s,)
            sig = signature(w2)
            if sig not in index:
                if len(reps) == bound:
                    raise KernelBoundError(
                        f"not recognized within bound: more than {bound} "
                        f"prefix classes at {''.join(map(str, w2))!r}"
                    )
                index[sig] = len(reps)
                reps.append(w2)
                sigs.append(sig)
            trans[(ci, s)] = index[sig]
        ci += 1

    states = tuple(f"q{i}" for i in range(len(reps)))
    out = {}
    for i, sig in enumerate(sigs):
        out[states[i]] = sig[0][1] if sig and sig[0][0] == () else BOTTOM
    used = []
    for q in states:
        if out[q] not in used:
            used.append(out[q])
    if BOTTOM in used:
        used.remove(BOTTOM)
        used.append(BOTTOM)
    machine = Dfao(
        system.alphabet,
        states,
        states[0],
        {(states[q], s): states[q2] for (q, s), q2 in trans.items()},
        out,
        tuple(used),
    )

    for n, got in enumerate(take(sequence(system, machine), bound)):
        if got != term(n):
            raise KernelBoundError(
                f"not recognized within bound: reconstruction disagrees with "
                f"the term function at rank {n}"
            )
    return machine


@dataclass(frozen=True)
class GapReport:
    """Occurrence positions of a factor and the differences between them."""

    positions: tuple[int, ...]
    gaps: tuple[int, ...]


def occurrence_gaps(stream: Iterable, factor, horizon: int) -> GapReport:
    """Where a factor occurs among the first `horizon` terms of a stream.

    Positions are 0-based starts; gaps are the successive differences.
    """
    fact = tuple(factor)
    if not fact:
        raise ValueError("factor must be nonempty")
    if horizon < len(fact):
        raise ValueError("horizon is shorter than the factor")
    terms = list(islice(stream, horizon))
    positions = tuple(
        i
        for i in range(len(terms) - len(fact) + 1)
        if tuple(terms[i : i + len(fact)]) == fact
    )
    gaps = tuple(b - a for a, b in zip(positions, positions[1:]))
    return GapReport(positions, gaps)

"""Morphisms, substitutions, and their equivalence with automatic sequences.

The two directions implemented here:

* ``substitution_of`` turns a numeration system plus output automaton into a
  prolongable morphism over pair states together with a weak coding whose
  image of the fixed point is the original sequence, letter by letter.
* ``system_from_morphism`` reads a morphism as an automaton over a fresh
  input alphabet (i-th letter of the image = transition on the i-th input
  symbol) and returns the induced numeration system and identity-output
  machine, whose sequence concatenates the iterates of the morphism.

``Substitution.generate()`` never materializes the fixed point: subtrees of
the expansion whose coding image is empty are skipped wholesale, so heavily
erasing codings (the rule, not the exception, for pair-state substitutions)
still stream their words in time proportional to the output.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterator

from .automata import Dfa, Dfao, OrderedAlphabet, Word, product
from .errors import NotProlongableError
from .numeration import NumerationSystem


@dataclass(frozen=True)
class Morphism:
    """A monoid morphism given by the images of single letters."""

    domain: OrderedAlphabet
    codomain: OrderedAlphabet
    images: dict

    def __post_init__(self):
        images = {x: tuple(img) for x, img in self.images.items()}
        object.__setattr__(self, "images", images)
        for x in self.domain:
            if x not in images:
                raise ValueError(f"letter {x!r} has no image")
        for x, img in images.items():
            if x not in self.domain:
                raise ValueError(f"image given for {x!r}, which is not a domain letter")
            for y in img:
                if y not in self.codomain:
                    raise ValueError(f"image of {x!r} uses {y!r}, outside the codomain")

    def __call__(self, word) -> Word:
        return self.apply(word)

    def apply(self, word) -> Word:
        out = []
        for x in word:
            out.extend(self.images[x])
        return tuple(out)

    def apply_letter(self, x) -> Word:
        return self.images[x]

    def is_endomorphism(self) -> bool:
        return self.domain.symbols == self.codomain.symbols

    def is_prolongable_on(self, seed) -> bool:
        """Image of `seed` starts with `seed` and has length at least two."""
        if seed not in self.domain or not self.is_endomorphism():
            return False
        img = self.images[seed]
        return len(img) >= 2 and img[0] == seed

    def is_weak_coding(self) -> bool:
        return all(len(img) <= 1 for img in self.images.values())

    # -- letter dependency analysis (used by the infinite-image check) ----

    def _reach_plus(self) -> dict:
        """letter -> set of letters reachable through one or more images."""
        edges = {x: set(self.images[x]) for x in self.domain}
        reach = {}
        for x in self.domain:
            seen = set(edges[x])
            queue = list(seen)
            while queue:
                y = queue.pop()
                for z in edges.get(y, ()):
                    if z not in seen:
                        seen.add(z)
                        queue.append(z)
            reach[x] = seen
        return reach

    def growing_letters(self) -> frozenset:
        """Letters whose iterated image lengths are unbounded.

        A letter grows exactly when it reaches a letter on a cycle whose
        image contains two or more immortal letters counted with
        multiplicity (every extra immortal survives each turn of the cycle).
        """
        reach = self._reach_plus()
        cyclic = {x for x in self.domain if x in reach[x]}
        immortal = {x for x in self.domain if cyclic & ({x} | reach[x])}
        pumping = {
            y
            for y in cyclic
            if sum(1 for z in self.images[y] if z in immortal) >= 2
        }
        return frozenset(x for x in self.domain if pumping & ({x} | reach[x]))


def fixed_point(phi: Morphism, seed) -> Iterator:
    """Lazily yield the fixed point of `phi` starting with the letter `seed`.

    The buffer always equals the image of the prefix emitted so far, which
    is itself a prefix of the fixed point; if expanding every known letter
    stops producing new ones the fixed point is finite and the stream ends.
    """
    if not phi.is_prolongable_on(seed):
        raise NotProlongableError(
            f"morphism is not prolongable on {seed!r}: need an image starting with it of length >= 2"
        )
    out = list(phi.images[seed])
    i = 0  # next letter to yield
    j = 1  # next letter to expand (the seed itself is already expanded)
    while True:
        while i < len(out):
            yield out[i]
            i += 1
        if j >= len(out):
            return  # the fixed point is the finite word already emitted
        out.extend(phi.images[out[j]])
        j += 1


@dataclass(frozen=True)
class Substitution:
    """Prolongable morphism + weak coding + seed, generating h(phi^omega(seed))."""

    phi: Morphism
    coding: Morphism
    seed: Hashable

    def __post_init__(self):
        if not self.phi.is_prolongable_on(self.seed):
            raise NotProlongableError(f"phi is not prolongable on {self.seed!r}")
        if not self.coding.is_weak_coding():
            raise ValueError("the coding must map every letter to one letter or the empty word")
        if set(self.coding.images) < set(self.phi.domain.symbols):
            raise ValueError("the coding must be total on phi's alphabet")
        if not self._image_provably_infinite():
            raise ValueError(
                "the coding erases too much: no growing letter with a nonempty image "
                "is reachable from the seed, so the generated word may be finite"
            )

    def _image_provably_infinite(self) -> bool:
        growing = self.phi.growing_letters()
        reach = self.phi._reach_plus()
        candidates = {self.seed} | reach[self.seed]
        return any(x in growing and self.coding.images[x] for x in candidates)

    def fixed_point_stream(self) -> Iterator:
        return fixed_point(self.phi, self.seed)

    def generate(self) -> Iterator:
        """Stream h(phi^omega(seed)) without expanding erased subtrees.

        Writing the fixed point as seed * phi^0(t) * phi^1(t) * ... for the
        tail t of phi(seed), each level is expanded depth-first, skipping
        letters whose depth-d expansion contains no coded letter at all.
        """
        phi_img = self.phi.images
        h_img = self.coding.images
        yield from h_img[self.seed]
        tail = phi_img[self.seed][1:]
        # emits[d][x] == True iff h(phi^d(x)) is nonempty
        emits = [{x: bool(h_img[x]) for x in self.phi.domain}]
        level_letters = set(tail)
        silent_since: dict = {}
        depth = 0
        while True:
            if not level_letters:
                return
            key = frozenset(level_letters)
            if key in silent_since:
                return  # the letter sets cycle without ever coding a letter
            silent_since[key] = depth
            emitted = False
            stack = [(t, depth) for t in reversed(tail) if emits[depth][t]]
            while stack:
                x, d = stack.pop()
                if d == 0:
                    yield from h_img[x]
                    emitted = True
                    continue
                lower = emits[d - 1]
                stack.extend((y, d - 1) for y in reversed(phi_img[x]) if lower[y])
            if emitted:
                silent_since.clear()
            depth += 1
            prev = emits[-1]
            emits.append({x: any(prev[y] for y in phi_img[x]) for x in self.phi.domain})
            level_letters = {y for x in level_letters for y in phi_img[x]}

ALPHA_BASE = "@a"  # reserved-prefix name for the fresh seed letter of state morphisms


def state_morphism(machine) -> tuple[Morphism, Hashable]:
    """Morphism over the states of a complete automaton plus a fresh seed.

    The seed maps to itself followed by the start state; a state maps to its
    successors in alphabet order.  Dropping the seed, the fixed point lists
    the state reached by every word over the alphabet in shortlex order,
    beginning with the empty word.  Returns (morphism, seed letter).
    """
    if not machine.is_complete():
        raise ValueError("a state morphism needs a complete transition table")
    alpha = ALPHA_BASE
    k = 0
    existing = set(machine.states)
    while alpha in existing:
        alpha = f"{ALPHA_BASE}{k}"
        k += 1
    letters = (alpha,) + tuple(machine.states)
    images = {alpha: (alpha, machine.start)}
    for q in machine.states:
        images[q] = tuple(machine.trans[(q, a)] for a in machine.alphabet)
    domain = OrderedAlphabet(letters)
    return Morphism(domain, domain, images), alpha


def substitution_of(u) -> Substitution:
    """Substitution generating the sequence of `u` (an AutomaticSequence).

    Built on the pair automaton of the language automaton and the output
    machine: the coding erases the fresh seed and every pair whose language
    side is not final, and otherwise emits the machine side's output.
    """
    prod = product(u.system.language, u.machine)
    pairs = prod.dfao
    phi, alpha = state_morphism(pairs)
    h_images = {alpha: ()}
    used = []
    for q in pairs.states:
        if q in prod.finals:
            d = pairs.output[q]
            h_images[q] = (d,)
            if d not in used:
                used.append(d)
        else:
            h_images[q] = ()
    ordered = tuple(d for d in pairs.output_alphabet if d in set(used))
    coding = Morphism(phi.domain, OrderedAlphabet(ordered), h_images)
    return Substitution(phi, coding, alpha)


def canonical_substitution(language: Dfa, machine: Dfao) -> Substitution:
    """substitution_of over the minimized language and reduced machine.

    Minimization and reduction both renumber states breadth-first, so equal
    (language, output function) inputs always yield the same substitution.
    """
    from .automata import minimize, reduce_dfao
    from .sequences import AutomaticSequence

    system = NumerationSystem(minimize(language))
    return substitution_of(AutomaticSequence(system, reduce_dfao(machine)))


_DEFAULT_INPUT_LETTERS = "abcdefghijklmnopqrstuvwxyz"


def system_from_morphism(phi: Morphism, seed, input_symbols=None) -> tuple[NumerationSystem, Dfao]:
    """Read a prolongable morphism as a numeration system plus output machine.

    Letters become states (all final, seed initial); a fresh input alphabet
    with one symbol per image position drives transitions: the i-th input
    symbol moves a letter to the i-th letter of its image.  The output map
    is the identity, so the machine's sequence concatenates the iterates
    phi^m(seed), the empty word's term contributing phi^0(seed) = seed.
    """
    if not phi.is_prolongable_on(seed):
        raise NotProlongableError(f"morphism is not prolongable on {seed!r}")
    width = max(len(img) for img in phi.images.values())
    if input_symbols is None:
        if width <= len(_DEFAULT_INPUT_LETTERS):
            input_symbols = tuple(_DEFAULT_INPUT_LETTERS[:width])
        else:
            input_symbols = tuple(f"c{i}" for i in range(width))
    else:
        input_symbols = tuple(input_symbols)
        if len(input_symbols) != width:
            raise ValueError(f"need exactly {width} input symbols (the widest image)")
    alphabet = OrderedAlphabet(input_symbols)
    states = phi.domain.symbols
    trans = {}
    for x in states:
        for i, y in enumerate(phi.images[x]):
            trans[(x, input_symbols[i])] = y
    language = Dfa(alphabet, states, seed, frozenset(states), trans)
    machine = Dfao(alphabet, states, seed, dict(trans), {x: x for x in states}, states)
    return NumerationSystem(language), machine


def is_substitution_morphism(mapping: dict, t1: Substitution, t2: Substitution) -> bool:
    """Check that `mapping` carries substitution t1 onto substitution t2.

    The map must be total on t1's letters and coded letters (ValueError
    otherwise); it qualifies when it sends seed to seed, letters onto
    letters, coded letters onto coded letters, and commutes letterwise with
    both the morphisms and the codings.
    """
    sigma1 = tuple(t1.phi.domain)
    delta1 = tuple(t1.coding.codomain)
    missing = [x for x in (*sigma1, *delta1) if x not in mapping]
    if missing:
        raise ValueError(f"mapping is not total: no image for {missing[0]!r}")
    m = mapping
    if m[t1.seed] != t2.seed:
        return False
    if {m[x] for x in sigma1} != set(t2.phi.domain.symbols):
        return False
    if {m[d] for d in delta1} != set(t2.coding.codomain.symbols):
        return False
    for x in sigma1:
        if m[x] not in t2.phi.domain:
            return False
        if tuple(m[y] for y in t1.phi.images[x]) != t2.phi.images[m[x]]:
            return False
        if tuple(m[d] for d in t1.coding.images[x]) != t2.coding.images[m[x]]:
            return False
    return True

"""Prefix generators for infinite-word constructions, plus an exact
repetition estimator over those prefixes.

Generators produce stable prefixes: prefix(n) is a prefix of prefix(m) for
n <= m.  The estimator reports, for every factor length in a tail window, the
exact maximal fractional exponent among factors of that length; the tail
maximum is a lower bound for the asymptotic behaviour of the infinite word,
never a claimed limit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .morphisms import Morphism, parse_morphism
from .words import (
    Alphabet,
    ParseError,
    Word,
    WordError,
    WordLike,
    _select_max_exponent,
    as_word,
    fresh_letters,
    minimal_period_profile,
)


class WordGenerator:
    """Base for on-demand prefix producers of an infinite word."""

    kind = "custom-stream"

    def __init__(self, alphabet: Alphabet):
        self.alphabet = alphabet
        self._buf = ""

    def prefix(self, n: int) -> Word:
        if n < 0:
            raise WordError("prefix length must be >= 0")
        while len(self._buf) < n:
            before = len(self._buf)
            self._grow(n)
            if len(self._buf) <= before:
                raise WordError("generator failed to produce more letters")
        return Word._make(self._buf[:n], self.alphabet)

    def _grow(self, n: int) -> None:
        raise NotImplementedError


class StreamGenerator(WordGenerator):
    """Wraps any letter iterator; single consumer."""

    kind = "custom-stream"

    def __init__(self, letters: Iterable[str], alphabet: Alphabet):
        super().__init__(alphabet)
        self._letters: Iterator[str] = iter(letters)

    def _grow(self, n: int) -> None:
        try:
            self._buf += next(self._letters)
        except StopIteration:
            raise WordError("letter stream exhausted") from None


class PeriodicGenerator(WordGenerator):
    """The word v v v ..."""

    kind = "periodic"

    def __init__(self, period_word: WordLike):
        v = as_word(period_word)
        if not v:
            raise WordError("empty period word")
        super().__init__(v.alphabet)
        self.period_word = v

    def _grow(self, n: int) -> None:
        reps = -(-(n - len(self._buf)) // len(self.period_word)) + 1
        self._buf += str(self.period_word) * reps


class MorphicGenerator(WordGenerator):
    """Fixed point of a morphism prolongable on its seed letter."""

    kind = "morphic-fixed-point"

    def __init__(self, rules: Morphism, seed: str):
        start = rules.apply(seed)
        if len(start) < 2 or not str(start).startswith(seed):
            raise WordError(f"morphism is not prolongable on seed {seed!r}")
        super().__init__(rules.codomain)
        self.rules = rules
        self.seed = seed
        self._buf = str(start)
        self._cursor = 1

    def _grow(self, n: int) -> None:
        images = self.rules.images
        while len(self._buf) < n:
            ch = self._buf[self._cursor]
            try:
                self._buf += images[ch]
            except KeyError:
                raise WordError(f"letter {ch!r} outside morphism domain") from None
            self._cursor += 1


def periodic_generator(v: WordLike) -> PeriodicGenerator:
    return PeriodicGenerator(v)


def morphic_generator(rules: Morphism, seed: str) -> MorphicGenerator:
    return MorphicGenerator(rules, seed)


def thue_morse() -> MorphicGenerator:
    return MorphicGenerator(Morphism({"0": "01", "1": "10"}), "0")


class InterleavedCopiesGenerator(WordGenerator):
    """Interleaves n renamed copies of a binary base word in rounds of
    growing chunks: round j contributes the j-th length-j chunk of every
    copy, in copy order.

    Under the letter-spreading morphism from `embedding_morphism`, the image
    of round j is an exact fractional power of (image of the first copy's
    chunk) + 'c' with exponent jn^2/(jn+1) = n - n/(jn+1).
    """

    kind = "interleaved-big-acei"

    def __init__(self, copies: int, base: WordGenerator):
        if copies < 1:
            raise WordError("copies must be >= 1")
        if len(base.alphabet) != 2:
            raise WordError("base generator must be over a binary alphabet")
        pool = fresh_letters(2 * copies, avoid="abc")
        super().__init__(Alphabet(pool))
        self.copies = copies
        self.base = base
        self._first = pool[0::2]
        self._second = pool[1::2]
        self._rounds_done = 0

    def _chunk_text(self, j: int) -> str:
        hi = j * (j + 1) // 2
        return str(self.base.prefix(hi))[hi - j:hi]

    def copy_chunk(self, i: int, j: int) -> Word:
        """The j-th chunk (length j) of the i-th copy; i, j are 1-based."""
        if not 1 <= i <= self.copies:
            raise WordError(f"copy index {i} out of range 1..{self.copies}")
        if j < 1:
            raise WordError("round index must be >= 1")
        lo, hi = self.base.alphabet.letters
        table = str.maketrans(lo + hi, self._first[i - 1] + self._second[i - 1])
        return Word._make(self._chunk_text(j).translate(table), self.alphabet)

    def round_block(self, j: int) -> Word:
        """Round j of the interleaving: chunks of every copy, concatenated."""
        parts = [str(self.copy_chunk(i, j)) for i in range(1, self.copies + 1)]
        return Word._make("".join(parts), self.alphabet)

    def embedding_morphism(self) -> Morphism:
        """Spreads copy i over position i of a c-block: the copy's letters
        map to c^(i-1) a c^(n-i) and c^(i-1) b c^(n-i)."""
        n = self.copies
        images = {}
        for i in range(n):
            images[self._first[i]] = "c" * i + "a" + "c" * (n - 1 - i)
            images[self._second[i]] = "c" * i + "b" + "c" * (n - 1 - i)
        return Morphism(images, domain=self.alphabet, codomain=Alphabet("abc"))

    def _grow(self, n: int) -> None:
        j = self._rounds_done + 1
        self._buf += str(self.round_block(j))
        self._rounds_done = j


def interleaved_copies_generator(copies: int, base: WordGenerator) -> InterleavedCopiesGenerator:
    return InterleavedCopiesGenerator(copies, base)


class OptimalBinaryGenerator(WordGenerator):
    """Binary word whose plain repetitions stay near n + 1/(k+1) while a
    suitable injective morphism pushes them near n + 1.

    A six-letter intermediate word is built from a binary base u split into
    chunks u_i (schedule: |u_1| = k+1, |u_(i+1)| = i^2 (k+1) |u_i|) and a
    renamed copy split into chunks v_i with |v_i| + 1 = k (|u_i| + 1):

        product over i of  (u_i SEP v_i SEP)^n u_i SEP END

    The emitted word is its image under a fixed-length (m-letter) binary
    encoding of the six letters.
    """

    kind = "optimal-binary"

    def __init__(self, n: int, k: int, m: int, base: WordGenerator | None = None):
        if n < 1:
            raise WordError("constraint violated: n must be >= 1")
        if k < 2:
            raise WordError("constraint violated: k must be >= 2")
        if m <= 2 * k + 2:
            raise WordError(f"constraint violated: m must exceed 2k+2 = {2 * k + 2}")
        base = base if base is not None else thue_morse()
        if len(base.alphabet) != 2:
            raise WordError("base generator must be over a binary alphabet")
        super().__init__(Alphabet("ab"))
        self.n = n
        self.k = k
        self.m = m
        self.base = base
        u1, u2, v1, v2, sep, end = fresh_letters(6, avoid="ab")
        self._u_letters = u1 + u2
        self._v_letters = v1 + v2
        self.separator = sep
        self.terminator = end
        self.intermediate_alphabet = Alphabet([u1, u2, v1, v2, sep, end])
        self._chunk_lengths = [k + 1]
        self._u_taken = 0
        self._v_taken = 0
        self._u_chunks: list[str] = []
        self._v_chunks: list[str] = []
        self._blocks_done = 0

    @property
    def implied_delta(self) -> Fraction | None:
        """The margin the parameter m guarantees (smaller is stronger);
        defined once m > 2k + 6."""
        slack = self.m - 2 * self.k - 6
        if slack <= 0:
            return None
        return Fraction(2 + 2 * self.k, slack)

    def chunk_length(self, i: int) -> int:
        if i < 1:
            raise WordError("chunk index must be >= 1")
        while len(self._chunk_lengths) < i:
            j = len(self._chunk_lengths)
            self._chunk_lengths.append(j * j * (self.k + 1) * self._chunk_lengths[-1])
        return self._chunk_lengths[i - 1]

    def _take(self, counter: str, amount: int, letters: str) -> str:
        taken = getattr(self, counter)
        text = str(self.base.prefix(taken + amount))[taken:taken + amount]
        setattr(self, counter, taken + amount)
        lo, hi = self.base.alphabet.letters
        return text.translate(str.maketrans(lo + hi, letters))

    def chunk(self, i: int) -> Word:
        """u_i over the intermediate alphabet; 1-based."""
        while len(self._u_chunks) < i:
            size = self.chunk_length(len(self._u_chunks) + 1)
            self._u_chunks.append(self._take("_u_taken", size, self._u_letters))
        return Word._make(self._u_chunks[i - 1], self.intermediate_alphabet)

    def _v_chunk(self, i: int) -> str:
        while len(self._v_chunks) < i:
            size = self.k * (self.chunk_length(len(self._v_chunks) + 1) + 1) - 1
            self._v_chunks.append(self._take("_v_taken", size, self._v_letters))
        return self._v_chunks[i - 1]

    def intermediate_block(self, i: int) -> Word:
        """(u_i SEP v_i SEP)^n u_i SEP, the repeated core of block i."""
        u = str(self.chunk(i))
        v = self._v_chunk(i)
        sep = self.separator
        text = (u + sep + v + sep) * self.n + u + sep
        return Word._make(text, self.intermediate_alphabet)

    def image_morphism(self) -> Morphism:
        """Fixed-length binary encoding of the six intermediate letters."""
        m = self.m
        u1, u2 = self._u_letters
        v1, v2 = self._v_letters
        images = {
            u1: "a" + "b" * (m - 1),
            u2: "aa" + "b" * (m - 2),
            v1: "a" * (m - 2) + "bb",
            v2: "a" * (m - 1) + "b",
            self.separator: "a" * (m - 3) + "bbb",
            self.terminator: "a" * (m - 4) + "bbbb",
        }
        return Morphism(images, domain=self.intermediate_alphabet, codomain=Alphabet("ab"))

    def _grow(self, n: int) -> None:
        i = self._blocks_done + 1
        block = str(self.intermediate_block(i)) + self.terminator
        self._buf += str(self.image_morphism().apply(Word._make(block, self.intermediate_alphabet)))
        self._blocks_done = i


def optimal_binary_generator(
    n: int, k: int, m: int, base: WordGenerator | None = None
) -> OptimalBinaryGenerator:
    return OptimalBinaryGenerator(n, k, m, base)


def cassaigne_morphism(weights: Sequence[int], m: int) -> Morphism:
    """Fixed-length binary images a^(m-f(i)) b^(f(i)) for an injective weight
    map f; preserves asymptotic repetition behaviour."""
    d = len(weights)
    if d < 1:
        raise WordError("need at least one weight")
    if len(set(weights)) != d:
        raise WordError("weight map must be injective")
    if any(f < 0 for f in weights):
        raise WordError("weights must be >= 0")
    if m < max(weights) + 1:
        raise WordError(f"m too small: need m >= max(f)+1 = {max(weights) + 1}")
    letters = fresh_letters(d, avoid="ab")
    images = {letters[i]: "a" * (m - weights[i]) + "b" * weights[i] for i in range(d)}
    return Morphism(images, domain=Alphabet(letters), codomain=Alphabet("ab"))


@dataclass(frozen=True)
class AceEstimate:
    """Per-length maximal exponents over a prefix, and their tail maximum.

    `estimate` is max over factor lengths >= tail of the exact maximal
    exponent at that length: a lower bound for the infinite word's asymptotic
    critical exponent, monotone in prefix_length and non-increasing in tail.
    """

    prefix_length: int
    tail: int
    per_length: dict[int, Fraction]
    offsets: dict[int, int]
    estimate: Fraction
    witness_offset: int
    witness_length: int

    def rows(self) -> list[tuple[int, int, int, int]]:
        return [
            (length, e.numerator, e.denominator, self.offsets[length])
            for length, e in sorted(self.per_length.items())
        ]

    def to_csv(self) -> str:
        lines = ["factor_length,max_exponent_num,max_exponent_den,witness_offset"]
        lines.extend(",".join(map(str, row)) for row in self.rows())
        return "\n".join(lines)


def ace_estimate(
    gen: WordGenerator, prefix_len: int, tail: int, engine: str = "border"
) -> AceEstimate:
    """Exact per-length maximal exponents over the length-prefix_len prefix,
    for factor lengths tail..prefix_len."""
    if not 1 <= tail <= prefix_len:
        raise WordError(f"tail {tail} out of range 1..{prefix_len}")
    word = gen.prefix(prefix_len)
    minper, start = minimal_period_profile(word, engine=engine)
    per_length = {}
    offsets = {}
    for length in range(tail, prefix_len + 1):
        per_length[length] = Fraction(length, minper[length])
        offsets[length] = start[length]
    best_len, best_per, best_start = _select_max_exponent(minper, start, tail, prefix_len)
    return AceEstimate(
        prefix_length=prefix_len,
        tail=tail,
        per_length=per_length,
        offsets=offsets,
        estimate=Fraction(best_len, best_per),
        witness_offset=best_start,
        witness_length=best_len,
    )


def factor_complexity(gen: WordGenerator, prefix_len: int, n: int) -> int:
    """Number of distinct length-n factors of the prefix (a lower bound for
    the complexity of the infinite word)."""
    if not 1 <= n <= prefix_len:
        raise WordError(f"factor length {n} out of range 1..{prefix_len}")
    text = str(gen.prefix(prefix_len))
    return len({text[i:i + n] for i in range(prefix_len - n + 1)})


def _base_generator(spec: str) -> WordGenerator:
    if spec == "thue-morse":
        return thue_morse()
    if spec.startswith("periodic:"):
        return PeriodicGenerator(Word(spec[len("periodic:"):]))
    if spec.startswith("morphic:"):
        rest = spec[len("morphic:"):]
        if ":" not in rest:
            raise ParseError("morphic base needs rules:seed", len("morphic:"))
        rules, seed = rest.rsplit(":", 1)
        return MorphicGenerator(parse_morphism(rules), seed)
    raise ParseError(f"unknown base generator {spec!r}")


def generator_from_spec(name: str, params: dict[str, str]) -> WordGenerator:
    """Build a generator from a CLI name and key=value parameters."""

    def need(key: str) -> str:
        if key not in params:
            raise ParseError(f"generator {name!r} needs parameter {key!r}")
        return params[key]

    if name == "periodic":
        return PeriodicGenerator(Word(need("v")))
    if name == "thue-morse":
        return thue_morse()
    if name == "morphic":
        return MorphicGenerator(parse_morphism(need("rules")), need("seed"))
    if name == "interleaved":
        base = _base_generator(params.get("base", "thue-morse"))
        return InterleavedCopiesGenerator(int(need("n")), base)
    if name == "optimal-binary":
        base = _base_generator(params.get("base", "thue-morse"))
        return OptimalBinaryGenerator(int(need("n")), int(need("k")), int(need("m")), base)
    raise ParseError(f"unknown generator {name!r}")

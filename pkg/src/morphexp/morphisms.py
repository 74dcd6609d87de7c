"""Morphisms between free monoids: application, injectivity, enumeration.

A morphism is given by its letter images.  Injectivity on the whole free
monoid is decided exactly: the images must be pairwise distinct and form a
uniquely decodable code (Sardinas-Patterson); on failure a shortest pair of
distinct words with equal images is produced.
"""

from __future__ import annotations

from collections import deque
from itertools import product
from typing import Iterator, Mapping, Sequence

from .words import Alphabet, ParseError, Word, WordError, WordLike, as_word


def sardinas_patterson(images: Sequence[str]) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Decide unique decodability of a list of nonempty code words.

    Returns None when the images form a code.  Otherwise returns two distinct
    index sequences with equal concatenations, shortest first in BFS order.
    """
    for img in images:
        if not img:
            raise WordError("erasing morphism")
    # State: a dangling suffix d with witness sequences (ahead, behind) such
    # that images(ahead) == images(behind) + d and the sequences differ in
    # their first element.
    queue: deque[tuple[str, tuple[int, ...], tuple[int, ...]]] = deque()
    seen: set[str] = set()
    for i, a in enumerate(images):
        for j, b in enumerate(images):
            if i == j:
                continue
            if a == b:
                return (i,), (j,)
            if b.startswith(a):
                d = b[len(a):]
                if d not in seen:
                    seen.add(d)
                    queue.append((d, (j,), (i,)))
    while queue:
        d, ahead, behind = queue.popleft()
        for k, u in enumerate(images):
            if u == d:
                return ahead, behind + (k,)
            if d.startswith(u):
                nd = d[len(u):]
                if nd not in seen:
                    seen.add(nd)
                    queue.append((nd, ahead, behind + (k,)))
            elif u.startswith(d):
                nd = u[len(d):]
                if nd not in seen:
                    seen.add(nd)
                    queue.append((nd, behind + (k,), ahead))
    return None


class Morphism:
    """A letter-to-word map extended to words by concatenation.

    Immutable after construction; the injectivity verdict is computed once on
    demand and cached, so values are safe to share across threads.
    """

    __slots__ = ("domain", "codomain", "images", "_verdict")

    def __init__(
        self,
        images: Mapping[str, WordLike],
        domain: Alphabet | None = None,
        codomain: Alphabet | None = None,
    ):
        imgs = {letter: str(as_word(img)) for letter, img in images.items()}
        if domain is None:
            domain = Alphabet(imgs.keys())
        if set(imgs) != set(domain.letters):
            raise WordError("images must cover exactly the domain alphabet")
        if codomain is None:
            codomain = Alphabet(sorted({ch for img in imgs.values() for ch in img}))
        else:
            for letter, img in imgs.items():
                for ch in img:
                    if ch not in codomain:
                        raise WordError(f"image of {letter!r} uses letter {ch!r} outside codomain")
        self.domain = domain
        self.codomain = codomain
        self.images = {letter: imgs[letter] for letter in domain.letters}
        self._verdict: tuple[bool, tuple[Word, Word] | None] | None = None

    @classmethod
    def identity(cls, alphabet: Alphabet) -> "Morphism":
        return cls({ch: ch for ch in alphabet}, domain=alphabet, codomain=alphabet)

    def image(self, letter: str) -> Word:
        return Word._make(self.images[letter], self.codomain)

    def apply(self, w: WordLike) -> Word:
        images = self.images
        try:
            text = "".join([images[ch] for ch in str(as_word(w))])
        except KeyError as exc:
            raise WordError(f"letter {exc.args[0]!r} outside morphism domain") from None
        return Word._make(text, self.codomain)

    __call__ = apply

    def is_erasing(self) -> bool:
        return any(not img for img in self.images.values())

    def _decide_injectivity(self) -> tuple[bool, tuple[Word, Word] | None]:
        if self._verdict is None:
            letters = self.domain.letters
            witness = sardinas_patterson([self.images[ch] for ch in letters])
            if witness is None:
                self._verdict = (True, None)
            else:
                first, second = witness
                pair = (
                    Word._make("".join(letters[i] for i in first), self.domain),
                    Word._make("".join(letters[i] for i in second), self.domain),
                )
                self._verdict = (False, pair)
        return self._verdict

    def is_injective(self) -> bool:
        return self._decide_injectivity()[0]

    def injectivity_counterexample(self) -> tuple[Word, Word] | None:
        """A shortest pair of distinct words with equal images, or None."""
        return self._decide_injectivity()[1]

    def decode(self, w: WordLike) -> Word | None:
        """Preimage of w under an injective morphism, or None when w is not
        in the image submonoid."""
        if not self.is_injective():
            raise WordError("decode requires an injective morphism")
        text = str(as_word(w))
        n = len(text)
        items = list(self.images.items())
        parseable = [False] * (n + 1)
        parseable[n] = True
        for pos in range(n - 1, -1, -1):
            parseable[pos] = any(
                parseable[pos + len(img)] for _, img in items if text.startswith(img, pos)
            )
        if not parseable[0]:
            return None
        out = []
        pos = 0
        while pos < n:
            for letter, img in items:
                if text.startswith(img, pos) and parseable[pos + len(img)]:
                    out.append(letter)
                    pos += len(img)
                    break
        return Word._make("".join(out), self.domain)

    def to_text(self) -> str:
        return ",".join(f"{letter}={self.images[letter]}" for letter in self.domain.letters)

    def __repr__(self) -> str:
        return f"Morphism({self.to_text()!r})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Morphism):
            return NotImplemented
        return self.domain == other.domain and self.images == other.images

    def __hash__(self) -> int:
        return hash((self.domain, tuple(self.images.items())))


def parse_morphism(literal: str) -> Morphism:
    """Parse the text format `a=cdc,b=dc` (printed back bit-exactly)."""
    images: dict[str, str] = {}
    pos = 0
    for chunk in literal.split(","):
        if "=" not in chunk:
            raise ParseError(f"expected letter=image, got {chunk!r}", pos)
        letter, img = chunk.split("=", 1)
        if len(letter) != 1:
            raise ParseError(f"morphism domain letter must be a single character, got {letter!r}", pos)
        if letter in images:
            raise ParseError(f"duplicate image for letter {letter!r}", pos)
        images[letter] = img
        pos += len(chunk) + 1
    if not images:
        raise ParseError("empty morphism literal", 0)
    return Morphism(images)


def compose(outer: Morphism, inner: Morphism) -> Morphism:
    """(outer o inner)(a) = outer(inner(a)); defined on inner's domain."""
    for ch in inner.codomain:
        if ch not in outer.domain and any(ch in img for img in inner.images.values()):
            raise WordError(f"alphabet mismatch: letter {ch!r} not in outer domain")
    images = {letter: outer.apply(inner.image(letter)) for letter in inner.domain.letters}
    return Morphism(images, domain=inner.domain, codomain=outer.codomain)


def binary_embedding(source: Alphabet) -> Morphism:
    """The injective embedding of an n-letter alphabet into {0,1}: the i-th
    letter maps to 0^(n+1-i) 1^i.  Applying it never decreases exponents."""
    n = len(source)
    if n < 1:
        raise WordError("source alphabet must be nonempty")
    codomain = Alphabet("01")
    images = {
        letter: "0" * (n + 1 - i) + "1" * i
        for i, letter in enumerate(source.letters, start=1)
    }
    return Morphism(images, domain=source, codomain=codomain)


def words_up_to(alphabet: Alphabet, max_len: int) -> list[str]:
    """All nonempty words of length <= max_len in shortlex order."""
    out: list[str] = []
    layer = [""]
    for _ in range(max_len):
        layer = [w + ch for w in layer for ch in alphabet.letters]
        out.extend(layer)
    return out


def enumerate_injective(domain: Alphabet, codomain: Alphabet, max_image_len: int) -> Iterator[Morphism]:
    """Every injective morphism with image lengths in 1..max_image_len, each
    exactly once, ordered lexicographically on the image tuple (individual
    images in shortlex order)."""
    if max_image_len < 1:
        raise WordError("max_image_len must be >= 1")
    candidates = words_up_to(codomain, max_image_len)
    for images in product(candidates, repeat=len(domain)):
        if len(set(images)) != len(images):
            continue
        if sardinas_patterson(images) is not None:
            continue
        yield Morphism(dict(zip(domain.letters, images)), domain=domain, codomain=codomain)

import random
from fractions import Fraction
from itertools import product

import pytest

from morphexp.morphisms import (
    Morphism,
    binary_embedding,
    compose,
    enumerate_injective,
    parse_morphism,
    sardinas_patterson,
    words_up_to,
)
from morphexp.words import Alphabet, Word, WordError, fractional_exponent


class TestApply:
    def test_paper_instance(self):
        h = Morphism({"a": "cdc", "b": "dc"})
        assert h.apply("ab") == "cdcdc"

    def test_identity(self):
        ident = Morphism.identity(Alphabet("abc"))
        assert ident.apply("bacca") == "bacca"

    def test_empty_word(self):
        h = Morphism({"a": "x", "b": "y"})
        assert h.apply("") == ""

    def test_length_formula(self):
        rng = random.Random(20)
        h = Morphism({"a": "xy", "b": "x", "c": "yyy"})
        for _ in range(100):
            w = "".join(rng.choice("abc") for _ in range(rng.randint(0, 12)))
            expected = sum(len(h.images[ch]) for ch in w)
            assert len(h.apply(w)) == expected

    def test_letter_outside_domain(self):
        h = Morphism({"a": "x"})
        with pytest.raises(WordError, match="'b'"):
            h.apply("ab")

    def test_respects_concatenation(self):
        rng = random.Random(21)
        h = Morphism({"a": "010", "b": "11"})
        for _ in range(100):
            u = "".join(rng.choice("ab") for _ in range(rng.randint(0, 8)))
            v = "".join(rng.choice("ab") for _ in range(rng.randint(0, 8)))
            assert h.apply(u + v) == str(h.apply(u)) + str(h.apply(v))


class TestInjectivity:
    def test_examples(self):
        assert Morphism({"a": "ab", "b": "aab"}).is_injective()
        bad = Morphism({"a": "ab", "b": "abab"})
        assert not bad.is_injective()
        trivial = Morphism({"a": "x", "b": "x"})
        assert not trivial.is_injective()
        assert trivial.injectivity_counterexample() == (Word("a"), Word("b"))

    def test_counterexample_has_equal_images(self):
        for images in ({"a": "ab", "b": "abab"}, {"a": "0", "b": "01", "c": "10"}):
            h = Morphism(images)
            assert not h.is_injective()
            u, v = h.injectivity_counterexample()
            assert u != v
            assert h.apply(u) == h.apply(v)

    def test_erasing_rejected(self):
        h = Morphism({"a": "", "b": "x"})
        with pytest.raises(WordError, match="erasing"):
            h.is_injective()

    @staticmethod
    def _collision_up_to(h: dict, letters: str, depth: int) -> bool:
        by_image = {"": ""}
        layer = [("", "")]
        for _ in range(depth):
            new_layer = []
            for w, img in layer:
                for ch in letters:
                    nw, nimg = w + ch, img + h[ch]
                    other = by_image.get(nimg)
                    if other is not None and other != nw:
                        return True
                    by_image[nimg] = nw
                    new_layer.append((nw, nimg))
            layer = new_layer
        return False

    def test_brute_force_agreement(self):
        # Every morphism with <= 3 domain letters and binary images of length
        # <= 3.  Non-injective verdicts are checked against their own witness
        # (sound for any collision length); a brute collision search over all
        # word pairs of length <= 6 must never contradict either verdict.
        images = words_up_to(Alphabet("01"), 3)
        for size in (1, 2, 3):
            letters = "abc"[:size]
            for imgs in product(images, repeat=size):
                h = dict(zip(letters, imgs))
                m = Morphism(h)
                verdict = m.is_injective()
                if not verdict:
                    u, v = m.injectivity_counterexample()
                    assert u != v and m.apply(u) == m.apply(v), h
                assert not (verdict and self._collision_up_to(h, letters, depth=6)), h


class TestCompose:
    def test_identity_neutral(self):
        h = Morphism({"a": "cdc", "b": "dc"})
        ident = Morphism.identity(Alphabet("cd"))
        assert compose(ident, h).images == h.images

    def test_renaming(self):
        g = Morphism({"c": "0", "d": "1"})
        h = Morphism({"a": "cdc", "b": "dc"})
        assert compose(g, h).to_text() == "a=010,b=10"

    def test_composition_of_injectives_is_injective(self):
        rng = random.Random(22)
        pool = list(enumerate_injective(Alphabet("ab"), Alphabet("ab"), 2))
        for _ in range(40):
            g = rng.choice(pool)
            h = rng.choice(pool)
            assert compose(g, h).is_injective()

    def test_alphabet_mismatch(self):
        g = Morphism({"c": "0"})
        h = Morphism({"a": "cdc", "b": "dc"})
        with pytest.raises(WordError):
            compose(g, h)


class TestBinaryEmbedding:
    def test_formula_instances(self):
        assert binary_embedding(Alphabet("pq")).to_text() == "p=001,q=011"
        assert binary_embedding(Alphabet("p")).to_text() == "p=01"
        assert binary_embedding(Alphabet("pqr")).to_text() == "p=0001,q=0011,r=0111"

    def test_injective_prefix_code(self):
        for n in range(1, 7):
            src = Alphabet("abcdefg"[:n])
            assert binary_embedding(src).is_injective()

    def test_exponent_never_decreases(self):
        rng = random.Random(23)
        for alpha_size in (2, 3, 4):
            src = Alphabet("abcd"[:alpha_size])
            inner_pool = list(enumerate_injective(src, Alphabet("xy"), 2))
            emb = binary_embedding(Alphabet("xy"))
            for _ in range(25):
                w = "".join(rng.choice(src.letters) for _ in range(rng.randint(1, 8)))
                inner = rng.choice(inner_pool)
                before = fractional_exponent(inner.apply(w)).exponent
                after = fractional_exponent(emb.apply(inner.apply(w))).exponent
                assert after >= before


class TestEnumeration:
    def test_unit_length_binary(self):
        got = [m.to_text() for m in enumerate_injective(Alphabet("ab"), Alphabet("01"), 1)]
        assert got == ["a=0,b=1", "a=1,b=0"]

    def test_count_matches_filtered_brute_force(self):
        candidates = words_up_to(Alphabet("01"), 2)
        expected = 0
        for u, v in product(candidates, repeat=2):
            if u != v and sardinas_patterson([u, v]) is None:
                expected += 1
        got = sum(1 for _ in enumerate_injective(Alphabet("ab"), Alphabet("01"), 2))
        assert got == expected

    def test_all_yielded_are_injective(self):
        for m in enumerate_injective(Alphabet("ab"), Alphabet("01"), 3):
            assert m.is_injective()

    def test_bad_bound(self):
        with pytest.raises(WordError):
            list(enumerate_injective(Alphabet("ab"), Alphabet("01"), 0))


class TestTextFormat:
    def test_round_trip_bit_exact(self):
        for literal in ("a=cdc,b=dc", "b=x,a=yy", "a=0,b=1,c=01"):
            assert parse_morphism(literal).to_text() == literal

    def test_parse_errors(self):
        with pytest.raises(WordError):
            parse_morphism("a")
        with pytest.raises(WordError):
            parse_morphism("ab=x")
        with pytest.raises(WordError):
            parse_morphism("a=x,a=y")


class TestDecode:
    def test_round_trip(self):
        rng = random.Random(24)
        h = Morphism({"a": "ab", "b": "aab"})
        for _ in range(100):
            w = "".join(rng.choice("ab") for _ in range(rng.randint(0, 10)))
            assert h.decode(h.apply(w)) == w

    def test_non_image_returns_none(self):
        h = Morphism({"a": "ab", "b": "aab"})
        assert h.decode("ba") is None

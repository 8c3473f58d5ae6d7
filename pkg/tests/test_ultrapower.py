"""Rational sequences: pointwise ring, eventual comparison, embedding."""

import random
from fractions import Fraction

import pytest

from helpers import agree_to_order
from hyperreal import OMEGA, HyperReal, Ordering, RatSeq, embed, seq_compare
from hyperreal.errors import ExactZeroDivisionError, NotRationalSequenceError

F = Fraction


def rand_seq(rng, max_degree=3, nonzero=False):
    while True:
        num = [F(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(rng.randint(1, max_degree + 1))]
        den = [F(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(rng.randint(1, max_degree + 1))]
        if not any(den):
            continue
        seq = RatSeq(num, den)
        if seq.num or not nonzero:
            return seq


# ---------------------------------------------------------------------------
# Ring operations


def test_add_n_and_reciprocal():
    n = RatSeq.identity()
    got = n + RatSeq((1,), (0, 1))
    assert got == RatSeq((1, 0, 1), (0, 1))  # (n^2 + 1)/n


def test_mul_reciprocal_gives_constant_one():
    got = RatSeq((1,), (0, 1)) * RatSeq.identity()
    assert got == RatSeq.constant(1)


def test_add_zero_identity():
    rng = random.Random(31)
    zero = RatSeq.constant(0)
    for _ in range(25):
        r = rand_seq(rng)
        assert r + zero == r


def test_canonical_form_reduces():
    # (n^2 - 1)/(n - 1) is the polynomial n + 1.
    assert RatSeq((-1, 0, 1), (-1, 1)) == RatSeq((1, 1))


def test_defined_from_past_denominator_roots():
    seq = RatSeq((1,), (-3, 1))  # 1/(n-3)
    assert seq.defined_from == 4
    with pytest.raises(ValueError):
        seq.value_at(3)
    assert seq.value_at(4) == 1


# ---------------------------------------------------------------------------
# Comparison


def test_compare_reciprocal_with_zero():
    assert seq_compare(RatSeq((1,), (0, 1)), RatSeq.constant(0)) is Ordering.GREATER


def test_compare_n_with_successor():
    n = RatSeq.identity()
    assert seq_compare(n, n + 1) is Ordering.LESS


def test_compare_with_numeric_oracle():
    r = RatSeq((0, -5, 1), (1, 1))  # (n^2 - 5n)/(n + 1)
    s = RatSeq.identity()
    assert seq_compare(r, s) is Ordering.LESS
    # Eventual-sign oracle: sample far out and check the sign directly.
    for n in (10**3, 10**4, 10**5, 10**6):
        assert r.value_at(n) < s.value_at(n)


def test_compare_equal_iff_same_rational_function():
    r = RatSeq((0, 2), (2,))  # 2n/2 = n
    assert seq_compare(r, RatSeq.identity()) is Ordering.EQUAL


def test_agreement_sets():
    n = RatSeq.identity()
    eq = n.agreement(n, "eq")
    assert eq.verdict == "cofinite"
    le = n.agreement(n + 1, "le")
    assert le.verdict == "cofinite"
    gt = n.agreement(n + 1, "gt")
    assert gt.verdict == "finite"
    # (n - 5)^2 vs 0: equal only at n = 5, witness past it.
    r = RatSeq((25, -10, 1))
    ag = r.agreement(RatSeq.constant(0), "eq")
    assert ag.verdict == "finite"
    assert ag.witness >= 5
    for n_ in range(ag.witness + 1, ag.witness + 20):
        assert r.value_at(n_) != 0


# ---------------------------------------------------------------------------
# Embedding


def test_embed_identity_is_omega():
    assert embed(RatSeq.identity()) == OMEGA


def test_embed_constant():
    assert embed(RatSeq.constant(5)) == HyperReal.from_rational(5)


def test_embed_rational_function():
    got = embed(RatSeq.parse("(2*n^2+1)/(n^2+3)"), 8)
    # Long-division oracle: (2w^2+1)/(w^2+3) = 2 - 5eps^2 + 15eps^4 - ...
    assert got.shadow() == 2
    assert got.coefficient(2) == -5
    assert got.coefficient(4) == 15
    # Numeric cross-check of the shadow far along the sequence.
    value = RatSeq.parse("(2*n^2+1)/(n^2+3)").value_at(10**6)
    assert abs(value - 2) < F(1, 10**6)


def test_embed_is_ring_homomorphism():
    rng = random.Random(37)
    for _ in range(40):
        r, s = rand_seq(rng), rand_seq(rng)
        assert agree_to_order(embed(r + s), embed(r) + embed(s))
        assert agree_to_order(embed(r * s), embed(r) * embed(s))


def test_embed_preserves_order():
    rng = random.Random(39)
    for _ in range(40):
        r, s = rand_seq(rng), rand_seq(rng)
        sequential = seq_compare(r, s)
        embedded = embed(r).compare(embed(s))
        if embedded is not Ordering.UNKNOWN:
            assert sequential is embedded


def test_convergent_sequences_embed_as_infinitesimals():
    rng = random.Random(43)
    for _ in range(25):
        den_degree = rng.randint(1, 3)
        num_degree = rng.randint(0, den_degree - 1)
        num = [F(rng.randint(-5, 5)) for _ in range(num_degree)] + [F(rng.randint(1, 5))]
        den = [F(rng.randint(-5, 5)) for _ in range(den_degree)] + [F(rng.randint(1, 5))]
        seq = RatSeq(num, den)
        assert embed(seq).is_infinitesimal()
        assert embed(seq.reciprocal()).is_unlimited()


def test_reciprocal_inverts_under_embedding():
    rng = random.Random(47)
    for _ in range(25):
        r = rand_seq(rng, nonzero=True)
        product = embed(r) * embed(r.reciprocal())
        assert agree_to_order(product, HyperReal.from_rational(1))


def test_reciprocal_of_zero_rejected():
    with pytest.raises(ExactZeroDivisionError):
        RatSeq.constant(0).reciprocal()


# ---------------------------------------------------------------------------
# Literals


def test_parse_sequence_literal():
    assert RatSeq.parse("(2*n^2+1)/(n^2+3)") == RatSeq((1, 0, 2), (3, 0, 1))


def test_oscillating_and_non_rational_rejected():
    for text in ("abs(n)", "root(n, 2)", "n^(1/2)"):
        with pytest.raises(NotRationalSequenceError):
            RatSeq.parse(text)


def test_sequence_text_roundtrip():
    rng = random.Random(53)
    for _ in range(20):
        r = rand_seq(rng)
        assert RatSeq.parse(str(r)) == r

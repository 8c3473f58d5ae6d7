"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
report.  Randomized suites use fixed seeds so reruns are reproducible; the
timed criteria assert their stated budgets.
"""

import contextlib
import random
import time
from fractions import Fraction

import pytest

from helpers import (
    agree_to_order,
    rand_appreciable,
    rand_exact,
    rand_fraction,
    rand_infinitesimal,
    rand_limited,
    rand_unlimited,
)
from hyperreal import (
    EPS,
    OMEGA,
    ONE,
    ZERO,
    Classification,
    HVector,
    HyperComplex,
    HyperReal,
    Ordering,
    RatSeq,
    embed,
    galaxy_compare,
    halo_equiv,
    seq_compare,
    standard_part_vec,
    vec_classify,
)
from hyperreal.calculus import derivative, eval_hyper, limit_fun, limit_seq, parse_expr
from hyperreal.errors import NonDifferentiableError
from hyperreal.filters import (
    classify_family,
    enumerate_ultrafilters,
    powerset_family,
    trivial_filter,
)
from hyperreal.hilbert import VectorClass
from hyperreal.transfer import (
    check_statement,
    check_transferable,
    classify_text,
    naturals_structure,
    parse_formula,
    reals_structure,
    sequence_structure,
    star_transform,
)

F = Fraction


@contextlib.contextmanager
def criterion(number: int, name: str, budget_seconds: float | None = None):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"[criterion {number:2d}] {name}: FAIL")
        raise
    elapsed = time.perf_counter() - start
    if budget_seconds is not None and elapsed >= budget_seconds:
        print(f"[criterion {number:2d}] {name}: FAIL (took {elapsed:.2f}s)")
        raise AssertionError(
            f"criterion {number} exceeded its {budget_seconds}s budget ({elapsed:.2f}s)"
        )
    print(f"[criterion {number:2d}] {name}: PASS ({elapsed:.2f}s)")


def test_criterion_01_ordered_field_suite():
    rng = random.Random(20260101)
    with criterion(1, "ordered-field suite", budget_seconds=5.0):
        elements = [rand_exact(rng) for _ in range(500)]
        for i, x in enumerate(elements):
            y = elements[(i + 37) % len(elements)]
            z = elements[(i * 7 + 11) % len(elements)]
            assert (x + y) + z == x + (y + z)
            assert x + y == y + x
            assert (x * y) * z == x * (y * z)
            assert x * y == y * x
            assert x * (y + z) == x * y + x * z
            assert x + ZERO == x and x * ONE == x
            assert x + (-x) == ZERO
            if x.compare(y) is Ordering.LESS:
                assert (x + z).compare(y + z) is Ordering.LESS
                if z.terms and z.sign() > 0:
                    assert (x * z).compare(y * z) is Ordering.LESS
            if x.terms:
                residual = x * x.inv(16) - 1
                assert residual.terms == ()
                assert residual.order_bound is None or residual.order_bound >= 16


def test_criterion_02_arithmetic_table_suite():
    rng = random.Random(20260202)
    # Classifications are decided by the leading term, so a low relative
    # order is enough for inverses and roots here.
    T = 6
    with criterion(2, "arithmetic-table suite", budget_seconds=5.0):
        for _ in range(200):
            e, d = rand_infinitesimal(rng), rand_infinitesimal(rng)
            b, c = rand_appreciable(rng), rand_appreciable(rng)
            H, K = rand_unlimited(rng), rand_unlimited(rng)
            assert (-e).classify().is_infinitesimal
            assert (-b).classify() is Classification.APPRECIABLE
            assert (-H).classify().is_unlimited
            assert (e + d).classify().is_infinitesimal
            assert (b + c).classify().is_limited
            assert (b + e).classify() is Classification.APPRECIABLE
            assert (H + b).classify().is_unlimited
            assert (H + e).classify().is_unlimited
            assert (e * d).classify().is_infinitesimal
            assert (b * c).classify() is Classification.APPRECIABLE
            assert (H * b).classify().is_unlimited
            assert (H * K).classify().is_unlimited
            e_inv, b_inv, c_inv, H_inv = e.inv(T), b.inv(T), c.inv(T), H.inv(T)
            assert e_inv.classify().is_unlimited
            assert b_inv.classify() is Classification.APPRECIABLE
            assert H_inv.classify().is_infinitesimal
            assert (e * H_inv).classify().is_infinitesimal
            assert (e * b_inv).classify().is_infinitesimal
            assert (b * H_inv).classify().is_infinitesimal
            assert (b * c_inv).classify() is Classification.APPRECIABLE
            assert (H * e_inv).classify().is_unlimited
            assert (b * e_inv).classify().is_unlimited
            assert (H * b_inv).classify().is_unlimited
            for n in (2, 3):
                for gen in (rand_infinitesimal, rand_appreciable, rand_unlimited):
                    x = gen(rng, positive=True)
                    scaled = x * (F(x.lead_coefficient) ** (n - 1))
                    assert scaled.root(n, T).classify() is x.classify()
        eps2 = EPS * EPS
        omega2 = OMEGA * OMEGA
        assert len({(EPS / eps2).classify(), (eps2 / EPS).classify()}) >= 2
        assert len({(OMEGA / omega2).classify(), (omega2 / OMEGA).classify()}) >= 2
        assert len({(EPS * OMEGA).classify(), (EPS * omega2).classify()}) >= 2
        assert len({(OMEGA + OMEGA).classify(), (OMEGA + (-OMEGA + 1)).classify()}) >= 2


def test_criterion_03_shadow_suite():
    rng = random.Random(20260303)
    with criterion(3, "shadow suite"):
        for _ in range(200):
            x, y = rand_limited(rng), rand_limited(rng)
            assert (x + y).shadow() == x.shadow() + y.shadow()
            assert (x - y).shadow() == x.shadow() - y.shadow()
            assert (x * y).shadow() == x.shadow() * y.shadow()
            n = rng.randint(0, 4)
            assert (x**n).shadow() == x.shadow() ** n
            assert abs(x).shadow() == abs(x.shadow())
            if x.compare(y) in (Ordering.LESS, Ordering.EQUAL):
                assert x.shadow() <= y.shadow()
        for _ in range(100):
            x = rand_limited(rng)
            s = x.shadow()
            assert halo_equiv(x, HyperReal.from_rational(s))
            for _ in range(5):
                q = s + rand_fraction(rng, nonzero=True)
                assert not halo_equiv(x, HyperReal.from_rational(q))


def _random_ratseq(rng):
    num = [F(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(rng.randint(1, 4))]
    den = [F(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(rng.randint(1, 4))]
    if not any(den):
        den = [F(1)]
    return RatSeq(num, den)


def test_criterion_04_ultrapower_oracle_equivalence():
    rng = random.Random(20260404)
    with criterion(4, "ultrapower oracle equivalence", budget_seconds=10.0):
        assert embed(RatSeq.identity()) == OMEGA
        for _ in range(100):
            r, s = _random_ratseq(rng), _random_ratseq(rng)
            sequential = seq_compare(r, s)
            embedded = embed(r).compare(embed(s))
            if embedded is not Ordering.UNKNOWN:
                assert sequential is embedded
            assert agree_to_order(embed(r + s), embed(r) + embed(s))
            assert agree_to_order(embed(r * s), embed(r) * embed(s))


def test_criterion_05_calculus_exactness():
    rng = random.Random(20260505)
    with criterion(5, "calculus exactness"):
        for _ in range(20):
            x0 = F(rng.randint(-40, 40), rng.randint(1, 12))
            assert derivative("x^2", x0) == 2 * x0
        corpus = _rational_function_corpus(rng, 30)
        h = F(1, 10**6)
        for node, x0 in corpus:
            exact = derivative(node, x0)
            f_hi = eval_hyper(node, x0 + h).shadow()
            f_lo = eval_hyper(node, x0 - h).shadow()
            fd = (f_hi - f_lo) / (2 * h)
            assert abs(fd - exact) < F(1, 10**6)
        with pytest.raises(NonDifferentiableError):
            derivative("abs(x)", 0)


def _rational_function_corpus(rng, count):
    corpus = []
    while len(corpus) < count:
        num_deg = rng.randint(1, 3)
        den_deg = rng.randint(0, 2)
        num = [F(rng.randint(-3, 3)) for _ in range(num_deg)] + [F(rng.choice((1, 2, -1)))]
        den = [F(rng.randint(-2, 2)) for _ in range(den_deg)] + [F(1)]
        num_text = _poly_expr(num)
        den_text = _poly_expr(den)
        node = parse_expr(f"({num_text})/({den_text})" if den_deg else num_text)
        x0 = F(rng.randint(-8, 8), rng.randint(1, 4))
        den_value = sum(c * x0**k for k, c in enumerate(den))
        if abs(den_value) < F(1, 2):
            continue
        corpus.append((node, x0))
    return corpus


def _poly_expr(coeffs):
    pieces = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        if k == 0:
            pieces.append(str(c))
        elif k == 1:
            pieces.append(f"{c}*x")
        else:
            pieces.append(f"{c}*x^{k}")
    return " + ".join(pieces) if pieces else "0"


def test_criterion_06_limits():
    with criterion(6, "limits"):
        result = limit_seq("(2*n^2+1)/(n^2+3)")
        assert result.kind == "finite" and result.value == 2
        # Classical epsilon-index oracle at tolerance 1e-6: past n = 3000
        # every sampled term up to 1e9 is within tolerance of the limit.
        node = parse_expr("(2*n^2+1)/(n^2+3)")
        tol = F(1, 10**6)
        for n in (3001, 10**4, 10**5, 10**7, 10**9):
            assert abs(eval_hyper(node, F(n)).shadow() - result.value) < tol
        reciprocal = limit_seq("1/n")
        assert reciprocal.kind == "finite" and reciprocal.value == 0
        assert limit_fun("1/x", 0, side="right").kind == "plus-infinity"


def test_criterion_07_filters():
    with criterion(7, "filters", budget_seconds=2.0):
        for size in (1, 2, 3, 4):
            found = enumerate_ultrafilters(size, mode="exhaustive")
            assert len(found) == size
            generators = set()
            for fam in found:
                tag = classify_family(fam)
                assert tag.is_ultrafilter and tag.principal_generator is not None
                generators.add(tag.principal_generator)
            assert generators == set(range(size))
        powerset_tag = classify_family(powerset_family(3))
        assert powerset_tag.is_filter and not powerset_tag.is_ultrafilter
        trivial_tag = classify_family(trivial_filter(3))
        assert trivial_tag.is_filter and trivial_tag.is_proper
        assert not trivial_tag.is_ultrafilter


def test_criterion_08_transfer_golden_tests():
    with criterion(8, "transfer golden tests"):
        N = naturals_structure()
        R = reals_structure()
        assert classify_text("forall K subset N, empty in K", N).kind == "not-in-language"
        assert classify_text("x in N", N).kind == "formula-not-statement"
        assert classify_text("1 in N", N).kind == "statement"
        assert classify_text("forall x in N, x + 1 in N", N).kind == "statement"
        archimedean = "forall n in N, exists r in R : n < r"
        assert classify_text(archimedean, R).kind == "statement"
        assert classify_text(archimedean, N).kind == "not-in-language"
        assert classify_text("forall c in C, c + 1 in R", R).kind == "statement"

        starred = star_transform(parse_formula("forall x in N, x + 1 in N", N))
        assert starred.render() == "forall x in *N, x + *1 in *N"

        star_seq = sequence_structure().star().with_constants("omega")
        bounded = parse_formula("forall n in *N, |*s(n)| <= omega", star_seq)
        assert check_statement(bounded).kind == "statement"
        blocked = check_transferable(bounded, "backward")
        assert blocked.kind == "not-transferable"
        assert blocked.external_symbols == ("omega",)
        weakened = parse_formula(
            "exists r in *R : forall n in *N, |*s(n)| <= r", star_seq
        )
        assert check_transferable(weakened, "backward").kind == "transferable"


def test_criterion_09_hilbert():
    rng = random.Random(20260909)
    with criterion(9, "hilbert layer"):
        assert vec_classify(HVector([EPS, EPS])) is VectorClass.INFINITESIMAL_VECTOR
        near = HVector([HyperComplex(1 + EPS), HyperComplex(2 - EPS * EPS)])
        assert vec_classify(near) is VectorClass.NEAR_STANDARD
        assert vec_classify(OMEGA * near) is VectorClass.REMOTE
        for _ in range(100):
            v = _random_near_standard(rng)
            w = _random_near_standard(rng)
            v_part = standard_part_vec(v)
            w_part = standard_part_vec(w)
            assert standard_part_vec(v + w) == tuple(
                a + b for a, b in zip(v_part, w_part)
            )
            lam = HyperReal.from_rational(rand_fraction(rng)) + rand_infinitesimal(rng)
            assert standard_part_vec(lam * v) == tuple(
                lam.shadow() * c for c in v_part
            )


def _random_near_standard(rng, dim=3):
    return HVector(
        HyperComplex(
            HyperReal.from_rational(rand_fraction(rng)) + rand_infinitesimal(rng),
            HyperReal.from_rational(rand_fraction(rng)) + rand_infinitesimal(rng),
        )
        for _ in range(dim)
    )


def test_criterion_10_galaxy_structure():
    with criterion(10, "galaxy structure"):
        for m in range(1, 11):
            assert galaxy_compare(OMEGA, OMEGA + m) is Ordering.EQUAL
            assert galaxy_compare(OMEGA, OMEGA - m) is Ordering.EQUAL
        two_omega = OMEGA + OMEGA
        assert galaxy_compare(OMEGA, two_omega) is Ordering.LESS
        omega_sq = OMEGA * OMEGA
        midpoint = (OMEGA + omega_sq) * HyperReal.from_rational(F(1, 2))
        assert galaxy_compare(OMEGA, midpoint) is Ordering.LESS
        assert galaxy_compare(midpoint, omega_sq) is Ordering.LESS

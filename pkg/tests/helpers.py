"""Random generators shared by the randomized and acceptance suites."""

from fractions import Fraction

from hyperreal import HyperReal


def rand_fraction(rng, lo=-8, hi=8, max_den=6, nonzero=False):
    while True:
        q = Fraction(rng.randint(lo, hi), rng.randint(1, max_den))
        if q != 0 or not nonzero:
            return q


def rand_exponent(rng, lo=-4, hi=4, max_den=3):
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def rand_exact(rng, max_terms=4, nonzero=False):
    """Random exact element with a handful of small rational terms."""
    while True:
        count = rng.randint(0, max_terms)
        terms = {}
        for _ in range(count):
            terms[rand_exponent(rng)] = rand_fraction(rng, nonzero=True)
        value = HyperReal(terms.items())
        if value.terms or not nonzero:
            return value


def _with_lead(rng, lead_exponent, positive=None, extra=2):
    sign = 1 if positive or (positive is None and rng.random() < 0.5) else -1
    terms = {lead_exponent: sign * abs(rand_fraction(rng, nonzero=True))}
    for _ in range(rng.randint(0, extra)):
        e = lead_exponent + Fraction(rng.randint(1, 6), rng.randint(1, 3))
        terms.setdefault(e, rand_fraction(rng, nonzero=True))
    return HyperReal(terms.items())


def rand_infinitesimal(rng, positive=None):
    lead = Fraction(rng.randint(1, 9), rng.randint(1, 3))
    return _with_lead(rng, lead, positive)


def rand_appreciable(rng, positive=None):
    return _with_lead(rng, Fraction(0), positive)


def rand_unlimited(rng, positive=None):
    lead = Fraction(-rng.randint(1, 9), rng.randint(1, 3))
    return _with_lead(rng, lead, positive)


def rand_limited(rng):
    pick = rng.random()
    if pick < 0.4:
        return rand_appreciable(rng)
    if pick < 0.8:
        return rand_infinitesimal(rng)
    return HyperReal.from_rational(rand_fraction(rng))


def agree_to_order(a: HyperReal, b: HyperReal) -> bool:
    """True when a and b coincide on every term either one determines."""
    return not (a - b).terms

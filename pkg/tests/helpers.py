"""Shared generators for randomized tests (seeded by each test)."""

from fractions import Fraction
from functools import cmp_to_key, lru_cache

from surreals.dyadic import Dyadic, ZERO, by_birthday, decode_signs
from surreals import normalform as nf


@lru_cache(maxsize=None)
def all_upto(n):
    """Every dyadic of birthday <= n, in tree order (do not mutate)."""
    return tuple(v for level in by_birthday(n) for v in level)


def random_dyadic(rng, max_birthday=10):
    n = rng.randint(0, max_birthday)
    return decode_signs("".join(rng.choice("+-") for _ in range(n)))


def random_nonzero_dyadic(rng, max_birthday=10):
    while True:
        d = random_dyadic(rng, max_birthday)
        if d.num:
            return d


def random_nonzero_fraction(rng, max_num=12, max_den=8):
    num = rng.randint(1, max_num) * rng.choice((-1, 1))
    return Fraction(num, rng.randint(1, max_den))


def random_exponent(rng, depth=2):
    # depth counts nesting of forms inside exponents
    if depth <= 1 or rng.random() < 0.6:
        return random_dyadic(rng, 4)
    return nf.from_terms([(random_dyadic(rng, 3),
                           random_nonzero_fraction(rng, 4, 2))])


def random_form(rng, max_terms=3, depth=2):
    """Any canonical surreal with up to max_terms terms (may be a Dyadic)."""
    terms = [(random_exponent(rng, depth), random_nonzero_fraction(rng))
             for _ in range(rng.randint(0, max_terms))]
    return nf.from_terms(terms)


def random_tier2(rng, max_terms=3, depth=2):
    while True:
        v = random_form(rng, max_terms, depth)
        if isinstance(v, nf.NormalForm):
            return v


def random_positive_form(rng, max_terms=3):
    """Positive value whose leading coefficient lies in [1/8, 7].

    The bounded coefficient range keeps commensurable pairs within an
    integer ratio < 64, so the n=1..64 probe can witness it.
    """
    want = rng.randint(1, max_terms)
    exps = []
    while len(exps) < want:
        y = random_exponent(rng, 2)
        if all(nf.compare(y, e) != 0 for e in exps):
            exps.append(y)
    exps.sort(key=cmp_to_key(nf.compare), reverse=True)
    lead = Fraction(rng.randint(1, 7), rng.randint(1, 8))
    terms = [(exps[0], lead)]
    for y in exps[1:]:
        terms.append((y, random_nonzero_fraction(rng, 6, 4)))
    return nf.from_terms(terms)


def random_surreal(rng):
    if rng.random() < 0.5:
        return random_dyadic(rng, 12)
    return random_form(rng, 3, 2)

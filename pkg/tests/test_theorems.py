import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import kronecker_oracle, naive_divisors, trial_factor
from zetaspan.arith import SplittingType
from zetaspan.field import DomainError, QuadField, ideal_count
from zetaspan.incidence import IntervalFn, convolve_full, mobius_full, reduce_numerical, zeta_full
from zetaspan.theorems import (
    CharSets,
    Variant,
    Verdict,
    beta_full_local,
    beta_reduced_global,
    beta_reduced_local,
    build_L_reduced,
    fidelity_report,
    interval_character_eval,
    interval_character_fn,
    interval_count_fn,
    local_primes,
    reduced_global_spans,
    reduced_local_spans,
    relative_zeta_check,
    verify_full_numerical,
    verify_reduced_global,
    verify_reduction,
)

G = QuadField.from_disc(-4, 2000)
FIELDS = [-4, 8, 5, -3, 12, -20]


def inert_parity_oracle(D, n):
    """(+1, -1, or 0) from scratch: ramified-free n, sign from inert exponent parity."""
    f = trial_factor(n)
    if any(D % p == 0 for p in f):
        return 0
    odd = sum(e for p, e in f.items() if kronecker_oracle(D, p) == -1) % 2
    return -1 if odd else 1


@pytest.mark.parametrize("D", FIELDS)
def test_parity_sets_realize_character(D):
    cs = CharSets(QuadField.from_disc(D, 3000))
    for n in range(1, 3001):
        assert cs.plus(n) - cs.minus(n) == kronecker_oracle(D, n)
        assert not (cs.plus(n) and cs.minus(n))
        sign = inert_parity_oracle(D, n)
        assert cs.plus(n) == (sign == 1) and cs.minus(n) == (sign == -1)


def test_build_L_examples():
    plus = build_L_reduced(G, 50, "+")
    minus = build_L_reduced(G, 50, "-")
    assert plus.fiber(9) and not minus.fiber(9)
    assert not minus.fiber(1)
    assert not minus.fiber(21) and plus.fiber(21)


@pytest.mark.parametrize("p", [2, 5, 13, 3, 7])
def test_reduced_local_witness(p):
    w = beta_reduced_local(G, p, 12)
    assert w.valid
    left, right, _ = reduced_local_spans(G, p, 12)
    assert len(left) == len(right) == len(w.pairs)


def test_reduced_local_inert_fiber_p4():
    left, right, _ = reduced_local_spans(G, 3, 6)
    fib_l = left.fiber(81)
    assert sum(1 for x in fib_l if not x.parts) == 1
    assert sum(1 for x in fib_l if x.parts) == 2
    assert len(right.fiber(81)) == 3


def test_reduced_local_split_fiber_p2():
    left, right, _ = reduced_local_spans(G, 5, 4)
    assert len(left.fiber(25)) == len(right.fiber(25)) == 3


def test_reduced_local_ramified():
    left, right, _ = reduced_local_spans(G, 2, 12)
    for k in range(13):
        assert len(left.fiber(2**k)) == len(right.fiber(2**k)) == 1


def _fiber_divisors(left, right, n):
    minus = sorted(x.parts[1].label for x in left.fiber(n) if x.parts)
    plus = sorted(y.parts[1].label for y in right.fiber(n))
    ideals = sum(1 for x in left.fiber(n) if not x.parts)
    return ideals, minus, plus


def test_global_fiber_examples():
    left, right, _ = reduced_global_spans(G, 60)
    assert _fiber_divisors(left, right, 45) == (2, [3, 15], [1, 5, 9, 45])
    assert _fiber_divisors(left, right, 21) == (0, [3, 7], [1, 21])
    assert _fiber_divisors(left, right, 1) == (1, [], [1])


@pytest.mark.parametrize("D", FIELDS)
def test_global_witness_and_shadow(D):
    K = QuadField.from_disc(D, 600)
    w = beta_reduced_global(K, 600)
    assert w.valid
    cs = CharSets(K)
    for n in range(1, 601):
        ds = naive_divisors(n)
        assert ideal_count(K, n) + sum(map(cs.minus, ds)) == sum(map(cs.plus, ds))


@pytest.mark.parametrize("swapped", [False, True])
def test_global_restricts_to_local(swapped):
    K = QuadField.from_disc(-4, 2000, swapped=swapped)
    left, right, _ = reduced_global_spans(K, 2000)
    for p in (2, 3, 5, 7, 13):
        ll, lr, _ = reduced_local_spans(K, p, 6)
        for k in range(7):
            if p**k > 2000:
                break
            q = p**k
            assert len(left.fiber(q)) == len(ll.fiber(q))
            assert len(right.fiber(q)) == len(lr.fiber(q))


def test_witness_independent_of_choice():
    a = beta_reduced_global(QuadField.from_disc(5, 800), 800)
    b = beta_reduced_global(QuadField.from_disc(5, 800, swapped=True), 800)
    assert a.valid and b.valid

    def cards(w):
        out = {}
        for x, _ in w.pairs:
            out[x.label] = out.get(x.label, 0) + 1
        return out

    assert cards(a) == cards(b)
    assert [(x.payload, y.payload) for x, y in a.pairs] != [(x.payload, y.payload) for x, y in b.pairs]


# -- literal readings: oracle-derived first divergences, frozen ----------------------

LITERAL_MINIMA = {
    Variant.LITERAL_PRESENT_ODD: ("21", (0, 3), (1,)),
    Variant.LITERAL_PRESENT_ODD_SPLIT_FREE: ("15", (0, 1), (2,)),
    Variant.LITERAL_ALL_EVEN: ("3", (0, 0), (1,)),
}


@pytest.mark.parametrize("variant", list(LITERAL_MINIMA))
def test_literal_variants_diverge(variant):
    rec = verify_reduced_global(G, 200, variant)
    assert rec.verdict is Verdict.DIVERGES and not rec.normative
    ce = rec.counterexample
    assert (ce.label, ce.left_card, ce.right_card) == LITERAL_MINIMA[variant]


def test_literal_present_odd_oracle_at_21():
    # divisors of 21 = {1, 3, 7, 21}; 3, 7 inert for D = -4
    plus = [b for b in naive_divisors(21) if all(e % 2 == 0 for e in trial_factor(b).values())]
    minus = [b for b in naive_divisors(21) if b > 1 and all(e % 2 for e in trial_factor(b).values())]
    assert (ideal_count(G, 21), len(minus), len(plus)) == (0, 3, 1)


def test_normative_global_confirmed():
    rec = verify_reduced_global(G, 2000)
    assert rec.confirmed and rec.counterexample is None


# -- full level ----------------------------------------------------------------


def test_interval_character_examples():
    assert interval_character_eval(G, 1, 5) == 0
    assert interval_character_eval(G, 4, 4) == 1
    assert interval_character_eval(G, 3, 9) == -1
    assert interval_character_eval(G, 5, 5) == 2
    K5 = QuadField.from_disc(5, 100)
    assert [interval_character_eval(K5, a, 4) for a in (1, 2, 4)] == [1, -1, 1]
    with pytest.raises(DomainError):
        interval_character_eval(G, 3, 5)


@pytest.mark.parametrize("D", [-4, 5, 8])
def test_interval_character_is_mobius_inversion(D):
    N = 400
    K = QuadField.from_disc(D, N)
    X = interval_character_fn(K, N)
    counts = interval_count_fn(K, N)
    # X = mu * counts on the left: zeta * X = counts
    assert convolve_full(mobius_full(N), counts) == X
    assert convolve_full(zeta_full(N), X) == counts


def test_interval_character_perturbation_breaks_identity():
    N = 120
    K = QuadField.from_disc(-4, N)
    X = dict(interval_character_fn(K, N).items())
    X[(5, 25)] = X.get((5, 25), 0) + 1
    bad = convolve_full(zeta_full(N), IntervalFn.from_intervals(N, X))
    assert bad != interval_count_fn(K, N)


def test_interval_character_does_not_restrict_to_kronecker():
    K = QuadField.from_disc(-4, 200)
    X = reduce_numerical(interval_character_fn(K, 200))
    assert (X[5], kronecker_oracle(-4, 5)) == (0, 1)
    # what does hold: zeta * X restricted to [1, n] is the ideal count
    Z = reduce_numerical(convolve_full(zeta_full(200), interval_character_fn(K, 200)))
    assert all(Z[n] == ideal_count(K, n) for n in range(1, 201))


def test_full_numerical_small():
    for D in (-4, 5, 8, 12):
        assert verify_full_numerical(QuadField.from_disc(D, 300), 300).confirmed


def test_full_local_ramified_confirmed():
    rec = beta_full_local(G, 2, 8)
    assert rec.confirmed and rec.variant == "printed-ramified"


def test_full_local_inert_oracle_fibers():
    rec = beta_full_local(G, 3, 4)
    assert rec.verdict is Verdict.DIVERGES
    by_label = {f.label: f for f in rec.fibers}
    assert (by_label["[3,27]"].left, by_label["[3,27]"].right) == ((0, 1), (2,))
    # oracle: the smallest fiber breaking the printed inert construction is [p, p]
    assert rec.counterexample.label == "[3,3]"
    assert (rec.counterexample.left_card, rec.counterexample.right_card) == ((0, 0), (1,))


def test_full_local_split_readings_diverge():
    for reading in ("printed-split-face", "printed-split-product"):
        rec = beta_full_local(G, 5, 4, reading)
        assert rec.verdict is Verdict.DIVERGES
        assert rec.counterexample.label == "[1,1]"
    signed = beta_full_local(G, 5, 8, "signed")
    assert signed.confirmed


def test_split_local_value_goes_negative():
    K = G
    assert interval_character_eval(K, 1, 25) == -1  # 2*0 - 2 + 1


def test_reduction():
    assert verify_reduction(QuadField.from_disc(8, 500), 500).confirmed
    rec = verify_reduction(QuadField.from_disc(-4, 100), 100)
    f5 = next(f for f in rec.fibers if f.label == "5")
    assert f5.left == f5.right == (2, 2)


def test_relative_zeta_examples():
    rec = relative_zeta_check("mobius", 50)
    f6 = next(f for f in rec.fibers if f.label == "6")
    assert f6.left == (0, 3) and f6.right == (3,)
    pf = relative_zeta_check("prime_factor", 50, p=2)
    fib = {f.label: f for f in pf.fibers}
    assert fib["8"].left == (1,) and fib["12"].left == (0,)
    q = relative_zeta_check("quadratic", 50, K=QuadField.from_disc(-4, 50))
    assert next(f for f in q.fibers if f.label == "25").left == (3,)
    assert rec.confirmed and pf.confirmed and q.confirmed
    with pytest.raises(ValueError):
        relative_zeta_check("nope", 10)


def test_report_d_minus4():
    recs = fidelity_report(QuadField.from_disc(-4, 100), 100)
    assert all(r.confirmed for r in recs if r.normative)
    keys = [(r.construction, r.variant) for r in recs]
    assert len(keys) == len(set(keys))
    assert ("reduced-global", "literal-present-odd") in keys


def test_record_restrict_and_json():
    rec = verify_reduced_global(G, 200, Variant.LITERAL_PRESENT_ODD)
    assert rec.restrict(20).confirmed
    assert rec.restrict(21).counterexample.label == "21"
    js = rec.to_json()
    assert js["counterexample"] == {"label": "21", "left_card": ["0", "3"], "right_card": ["1"]}
    assert set(js) == {"construction", "variant", "verdict", "counterexample"}


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 2000))
def test_local_primes_selection(limit):
    ps = local_primes(G, min(limit, 100))
    assert ps == sorted(ps)
    assert sum(1 for p in ps if G.stype(p) is SplittingType.RAMIFIED) <= 1

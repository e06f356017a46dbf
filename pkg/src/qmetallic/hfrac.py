"""Periodic Hankel-fraction discovery for quadratic power series.

A quadratic model A + B*F + C*F^2 = 0 (A != 0, B(0) = 1, C != 0,
C(0) = 0) pins down a unique power-series root F. One `alg_step` peels
the leading Hankel-fraction term (k, a, D) off that root and returns the
model of the tail series; iterating with cycle detection turns the whole
expansion into a finite object whenever the model triples repeat. The
metallic models do repeat, with cycle length 6n-4, and the module also
builds that cycle directly from its closed-form block structure, the
models of coefficient-shifted series, their fraction expansions by stream
truncation, and the support bookkeeping (s_p, eps_p) that evaluates every
Hankel determinant of such a series by a product formula.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    Domain,
    ExactDivisionError,
    Poly,
    QQ,
    Series,
    ZZ,
)
from .cfrac import HFTerm, PeriodicHFraction
from .qseries import Model, angle_bracket, metallic_model, metallic_series, q_integer


@dataclass(frozen=True)
class AlgStepResult:
    """One expansion step: emitted term data plus the follow-up model.

    next_model is None exactly when the tail series is zero, i.e. the
    root was rational and the fraction terminates after this term.
    """

    k: int
    a: object
    d: Poly
    next_model: object  # Model or None


def alg_step(model: Model) -> AlgStepResult:
    """Peel one Hankel-fraction term off the root of a quadratic model.

    With (k, a) the lowest term of A, the emitted denominator D is the
    unique polynomial of degree <= k+1 with
        a q^k B/A - a c1 q^(k+1) = D + O(q^(k+2)),
    where c1 is the linear coefficient of C, and the tail model is
        A* = (-D^2 A/a + B D q^k - C a q^(2k)) / q^(2k+2),
        B* = 2 A D/(a q^k) - B,
        C* = -A q^2 / a.
    All divisions are exact; a failing one signals a corrupted model.
    The lowest coefficient a must be invertible (run over a field if it
    is not a unit of the coefficient ring).
    """
    model.validate()
    dom = model.dom
    a_pol, b_pol, c_pol = model.a, model.b, model.c
    k = a_pol.valuation()
    a = a_pol.coefficient(k)
    if not dom.is_unit(a):
        raise ExactDivisionError(
            f"lowest coefficient {a} of A is not invertible in {dom}; "
            "map the model into a field first"
        )
    inv_a = dom.inv(a)

    unit_part = a_pol.exact_div_monomial(k)
    ratio = Series.from_poly(b_pol, k + 2) * Series.from_poly(unit_part, k + 2).invert()
    d_coeffs = [dom.mul(a, c) for c in ratio.coeffs]
    c1 = c_pol.coefficient(1)
    d_coeffs[k + 1] = dom.sub(d_coeffs[k + 1], dom.mul(a, c1))
    d = Poly(dom, d_coeffs)

    a_next = (
        (d * d * a_pol).scale(dom.neg(inv_a))
        + (b_pol * d).shift(k)
        - c_pol.scale(a).shift(2 * k)
    ).exact_div_monomial(2 * k + 2)
    if a_next.is_zero():
        return AlgStepResult(k=k, a=a, d=d, next_model=None)
    b_next = (a_pol * d).exact_div_monomial(k).scale(dom.mul(dom.from_int(2), inv_a)) - b_pol
    c_next = a_pol.shift(2).scale(dom.neg(inv_a))
    return AlgStepResult(
        k=k, a=a, d=d, next_model=Model(a_next, b_next, c_next).validate()
    )


def hfraction_of_quadratic(model: Model, max_steps: int = None) -> PeriodicHFraction:
    """Expand the root of a quadratic model into its Hankel fraction.

    Iterates alg_step, recording each (A, B, C) triple; the first repeated
    triple closes the cycle and the result is returned in canonical form
    (primitive cycle, shortest preamble). A vanishing tail terminates the
    fraction instead (rational root). If neither happens within max_steps
    terms, the partial prefix is returned with an empty cycle and
    terminated=False; callers can distinguish the three outcomes by
    inspecting `cycle` and `terminated`.

    Integer models are expanded over the rationals (the step divides by
    the lowest A-coefficient) and mapped back when every emitted term is
    integral.
    """
    model.validate()
    if max_steps is None:
        max_steps = 1000
    if max_steps < 1:
        raise ValueError("max_steps must be >= 1")
    orig_dom = model.dom
    dom = QQ if orig_dom == ZZ else orig_dom
    state = model.map_domain(dom) if dom is not orig_dom else model

    terms = []
    seen = {}
    preamble = ()
    cycle = ()
    terminated = False
    while True:
        key = (state.a, state.b, state.c)
        if key in seen:
            first = seen[key]
            if first == 0:
                # the head term re-occurs as cycle data; keep index 0 as head
                cycle = tuple(terms[1:]) + (terms[0],)
            else:
                preamble = tuple(terms[1:first])
                cycle = tuple(terms[first:])
            break
        if len(terms) >= max_steps:
            preamble = tuple(terms[1:])
            break
        seen[key] = len(terms)
        step = alg_step(state)
        terms.append(HFTerm(k=step.k, v=dom.neg(step.a), d=step.d).validate())
        if step.next_model is None:
            preamble = tuple(terms[1:])
            terminated = True
            break
        state = step.next_model

    out = PeriodicHFraction(
        head=terms[0], preamble=preamble, cycle=cycle, terminated=terminated
    ).canonical()
    if orig_dom is not dom:
        try:
            out = out.map_domain(orig_dom)
        except (ExactDivisionError, TypeError):
            pass  # genuinely fractional term data stays in the field
    return out


def metallic_step_cap(n: int) -> int:
    """Generous step budget for metallic inputs: the cycle length is
    6n-4, so a dozen periods plus slack always suffices."""
    return 12 * (6 * n - 4) + 24


def expected_hfraction(n: int, dom: Domain = ZZ) -> PeriodicHFraction:
    """The predicted periodic Hankel fraction of the q-metallic series.

    n = 1 is the published 3-cycle; n >= 2 is assembled from the
    closed-form block structure: a first block of n-2 triples
    (q^(n-i)/[n-i]_q, q^n/([i+2]_q - q), q^(i+2)/(1-q)) capped by
    q^2/[2]_q, q^n/([n]_q - q), q^n/1; a middle block of four terms built
    on the bracket polynomial; a mirror block; and a final q^2/1. Cycle
    length 6n-4, head 1/(1-q).
    """
    if n < 1:
        raise ValueError(f"metallic index must be >= 1, got {n}")
    one = Poly.one(dom)
    if n == 1:
        pair = q_integer(2, dom)  # 1 + q
        return PeriodicHFraction(
            head=HFTerm(0, dom.from_int(1), one).validate(),
            preamble=(),
            cycle=(
                HFTerm(0, dom.from_int(1), pair).validate(),
                HFTerm(1, dom.from_int(-1), Poly(dom, (1, 1, -1))).validate(),
                HFTerm(0, dom.from_int(-1), pair).validate(),
            ),
        )
    q = Poly.q(dom)
    one_minus_q = one - q
    # (numerator exponent, numerator sign, denominator) along one cycle
    entries = []
    for i in range(n - 2):
        entries.append((n - i, 1, q_integer(n - i, dom)))
        entries.append((n, 1, q_integer(i + 2, dom) - q))
        entries.append((i + 2, 1, one_minus_q))
    entries.append((2, 1, q_integer(2, dom)))
    entries.append((n, 1, q_integer(n, dom) - q))
    entries.append((n, 1, one))
    bracket = angle_bracket(n, dom)
    bracket_plus = bracket + Poly.monomial(dom, n + 1)
    entries.append((n + 1, -1, bracket_plus))
    entries.append((2 * n + 1, 1, bracket))
    entries.append((2 * n + 1, 1, bracket_plus))
    entries.append((n + 1, -1, one))
    for i in range(n - 2):
        entries.append((n - i, 1, q_integer(n - i, dom) - q))
        entries.append((n, 1, q_integer(i + 2, dom)))
        entries.append((i + 2, 1, one_minus_q))
    entries.append((2, 1, one))
    assert len(entries) == 6 * n - 4

    cycle = []
    k_prev = 0
    for exponent, sign, den in entries:
        k = exponent - k_prev - 2
        # a term numerator -v q^(k_prev + k + 2) carries sign -v
        cycle.append(HFTerm(k=k, v=dom.from_int(-sign), d=den).validate())
        k_prev = k
    head = HFTerm(0, dom.from_int(1), one_minus_q).validate()
    return PeriodicHFraction(head=head, preamble=(), cycle=tuple(cycle))


def shift_model(model: Model, f0) -> Model:
    """Model of the tail (F - f0)/q, given the root's constant term f0.

    The update is A' = (A + f0 B + f0^2 C)/q, B' = B + 2 f0 C, C' = q C,
    followed by rescaling so B'(0) = 1 (a no-op for valid inputs, kept
    for models handed in unnormalized).
    """
    dom = model.dom
    f0 = dom.coerce(f0)
    a_pol, b_pol, c_pol = model.a, model.b, model.c
    shifted = a_pol + b_pol.scale(f0) + c_pol.scale(dom.mul(f0, f0))
    if shifted.is_zero():
        raise ValueError("the tail series is zero: the root equals f0 exactly")
    if not dom.is_zero(shifted.constant()):
        raise ValueError(
            f"{f0} is not the constant term of the model's root "
            f"(A + f0*B + f0^2*C has constant term {shifted.constant()})"
        )
    a_new = shifted.exact_div_monomial(1)
    b_new = b_pol + c_pol.scale(dom.add(f0, f0))
    c_new = c_pol.shift(1)
    b0 = b_new.constant()
    if b0 != dom.from_int(1):
        if not dom.is_unit(b0):
            raise ExactDivisionError(f"cannot normalize: B(0) = {b0} is not a unit")
        u = dom.inv(b0)
        a_new, b_new, c_new = a_new.scale(u), b_new.scale(u), c_new.scale(u)
    if a_new.is_zero():
        raise ValueError("the tail series is zero beyond this coefficient")
    return Model(a_new, b_new, c_new).validate()


def shifted_metallic_model(n: int, ell: int, dom: Domain = ZZ) -> Model:
    """Closed-form model of the ell-fold coefficient shift of the
    q-metallic series, valid for 0 <= ell <= n+1.

    For ell <= n the triple is
        A = (q^(ell+1) - (q^2-q+1)(q^n - q^(n-ell) + 1)) / (q-1)^2,
        B = (2 q^(ell+1) - (q^2-q+1)(q^n + 1)) / (q-1),
        C = q^(ell+1),
    and for ell = n+1 it is
        A = -q^(n-1),
        B = -((q^2-q+1) + (q^2-3q+1) q^n) / (q-1),
        C = q^(n+2).
    Both divisions are exact. ell = 0 reproduces the metallic model.
    """
    if n < 1:
        raise ValueError(f"metallic index must be >= 1, got {n}")
    if not 0 <= ell <= n + 1:
        raise ValueError(f"shift must be in 0..n+1 for the closed forms, got {ell}")
    one = Poly.one(dom)
    q_minus_1 = Poly.q(dom) - one
    quadratic_unit = Poly(dom, (1, -1, 1))  # q^2 - q + 1
    if ell <= n:
        inner = Poly.monomial(dom, n) - Poly.monomial(dom, n - ell) + one
        a_pol = (Poly.monomial(dom, ell + 1) - quadratic_unit * inner).exact_div(
            q_minus_1 * q_minus_1
        )
        b_pol = (
            Poly.monomial(dom, ell + 1).scale(dom.from_int(2))
            - quadratic_unit * (Poly.monomial(dom, n) + one)
        ).exact_div(q_minus_1)
        c_pol = Poly.monomial(dom, ell + 1)
    else:
        a_pol = Poly.monomial(dom, n - 1, dom.from_int(-1))
        b_pol = (
            -(quadratic_unit + Poly(dom, (1, -3, 1)) * Poly.monomial(dom, n))
        ).exact_div(q_minus_1)
        c_pol = Poly.monomial(dom, n + 2)
    return Model(a_pol, b_pol, c_pol).validate()


def shifted_model_chain(n: int, ell: int, dom: Domain = ZZ) -> Model:
    """Model of the ell-fold coefficient shift built by iterating
    shift_model along the series coefficients. Works for every ell >= 0,
    beyond the closed-form range of shifted_metallic_model."""
    if ell < 0:
        raise ValueError("shift must be >= 0")
    model = metallic_model(n, dom)
    if ell == 0:
        return model
    coeffs = metallic_series(n, ell, dom).coeffs
    for i in range(ell):
        model = shift_model(model, coeffs[i])
    return model


def truncate_hfraction_stream(hf: PeriodicHFraction, drop: int) -> PeriodicHFraction:
    """Hankel fraction of the series left after peeling `drop` leading
    fraction terms. The term after the dropped ones becomes the new head;
    its stored coefficient flips sign because head numerators carry +v
    while later numerators carry -v."""
    if drop < 0:
        raise ValueError("cannot drop a negative number of terms")
    if drop == 0:
        return hf
    dom = hf.dom
    try:
        new_first = hf.term(drop)
    except IndexError:
        raise ValueError(
            f"fraction has fewer than {drop + 1} terms; nothing left to expose"
        ) from None
    head = HFTerm(new_first.k, dom.neg(dom.coerce(new_first.v)), new_first.d)
    n_pre, n_cyc = len(hf.preamble), len(hf.cycle)
    if n_cyc:
        if drop >= n_pre + 1:
            start = (drop - n_pre) % n_cyc
            cycle = tuple(hf.cycle[(start + i) % n_cyc] for i in range(n_cyc))
            return PeriodicHFraction(head=head, preamble=(), cycle=cycle)
        return PeriodicHFraction(head=head, preamble=hf.preamble[drop:], cycle=hf.cycle)
    rest = tuple(hf.stream(hf.n_stored_terms())[drop + 1 :])
    return PeriodicHFraction(
        head=head, preamble=rest, cycle=(), terminated=hf.terminated
    )


def hfraction_of_shift(n: int, ell: int, dom: Domain = ZZ) -> PeriodicHFraction:
    """Hankel fraction of the ell-fold coefficient shift of the
    q-metallic series, by stream truncation of the full fraction.

    Dropping m terms with m = 3*ell (ell <= n-1), 3n-1 (ell = n), or
    3n (ell = n+1) exposes the fraction of the shifted series directly;
    no re-expansion is needed. Valid for 1 <= ell <= n+1; ell = 0 is just
    expected_hfraction.
    """
    if not 1 <= ell <= n + 1:
        raise ValueError(f"shift must be in 1..n+1 for the truncation rule, got {ell}")
    if ell <= n - 1:
        drop = 3 * ell
    elif ell == n:
        drop = 3 * n - 1
    else:
        drop = 3 * n
    return truncate_hfraction_stream(expected_hfraction(n, dom), drop)


@dataclass(frozen=True)
class SupportProfile:
    """Index bookkeeping of a Hankel fraction.

    s_p = p + sum_{i<p} k_i enumerates the indices of nonzero Hankel
    determinants; eps_p = sum_{i<p} k_i(k_i+1)/2 their sign exponents;
    `support` is the set {s_p}. period_len is the fraction's term-cycle
    length (0 when none is certified).
    """

    k_seq: tuple
    s_seq: tuple
    eps_seq: tuple
    support: frozenset
    period_len: int

    def contains(self, j: int) -> bool:
        if j < 0:
            raise ValueError("index must be >= 0")
        if j > self.s_seq[-1]:
            raise ValueError(
                f"membership certified only up to {self.s_seq[-1]}, asked for {j}"
            )
        return j in self.support

    def to_json_dict(self) -> dict:
        return {
            "k": list(self.k_seq),
            "s": list(self.s_seq),
            "eps": list(self.eps_seq),
            "period_len": self.period_len,
        }


def support_profile(H: PeriodicHFraction, horizon: int) -> SupportProfile:
    """k/s/eps sequences of a fraction up to term index `horizon`.

    Sequences stop early only when the fraction is finite and shorter.
    """
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    terms = H.stream(horizon + 1)
    k_seq = tuple(t.k for t in terms)
    s_seq = [0]
    eps_seq = [0]
    for t in terms[:horizon]:
        s_seq.append(s_seq[-1] + 1 + t.k)
        eps_seq.append(eps_seq[-1] + t.k * (t.k + 1) // 2)
    return SupportProfile(
        k_seq=k_seq,
        s_seq=tuple(s_seq),
        eps_seq=tuple(eps_seq),
        support=frozenset(s_seq),
        period_len=len(H.cycle),
    )


def hankel_values_from_hfraction(H: PeriodicHFraction, count: int) -> list:
    """The first `count` Hankel determinants of the series represented
    by H, by the support product formula. No determinant is expanded:
        delta_{s_{p+1}} = delta_{s_p} * (-1)^(k_p(k_p+1)/2) * (v_0...v_p)^(k_p+1)
    and every index outside {s_p} gives zero.

    A finite fraction certifies all indices (beyond the final s the
    determinants vanish); a bare prefix certifies only up to its last
    reachable s and raises beyond it.
    """
    dom = H.dom
    if count < 0:
        raise ValueError("count must be >= 0")
    zero = dom.from_int(0)
    out = [zero] * count
    if count == 0:
        return out
    out[0] = dom.from_int(1)
    s = 0
    delta = dom.from_int(1)
    running = dom.from_int(1)
    p = 0
    while s < count - 1:
        try:
            t = H.term(p)
        except IndexError:
            if H.terminated:
                break  # rational series: all later determinants are zero
            raise ValueError(
                f"fraction prefix certifies determinants only up to index {s}, "
                f"index {count - 1} requested"
            ) from None
        running = dom.mul(running, dom.coerce(t.v))
        parity = (t.k * (t.k + 1) // 2) % 2
        step = dom.pow(running, t.k + 1)
        if parity:
            step = dom.neg(step)
        delta = dom.mul(delta, step)
        s += 1 + t.k
        if s < count:
            out[s] = delta
        p += 1
    return out


def hankel_from_hfraction(H: PeriodicHFraction, j: int):
    """Exact j-th Hankel determinant of the series represented by H."""
    if j < 0:
        raise ValueError("index must be >= 0")
    return hankel_values_from_hfraction(H, j + 1)[j]

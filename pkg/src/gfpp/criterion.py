"""Binomial-sum permutation criteria and numeric identity verifiers.

Every sum here is exact integer arithmetic reduced mod p at the end.
Starred quantities are exponent classes mod q-1 computed with
digits.star_reduce, whose positive-multiple-of-(q-1) -> q-1 rule is
load-bearing: the row class in the support identity is such a multiple
whenever u = v = 0.
"""

from __future__ import annotations

from math import comb, gcd

from .digits import digit_vector, lucas_binom, mod_inverse, shift_class, star_reduce, support
from .errors import ParamDomainError


def criterion_sum(field, k: int, s: int) -> int:
    """sum over 1 <= i <= q-2 of (-1)^i C(s, i) C((ki)*, (2ks)*), mod p.

    C(s, i) is an exact integer binomial reduced mod p; the starred pair
    goes through the digitwise product.  Terms with i > s vanish through
    C(s, i) = 0.
    """
    q, p = field.q, field.p
    bottom = star_reduce(2 * k * s, q)
    total = 0
    for i in range(1, q - 1):
        c1 = comb(s, i) % p
        if not c1:
            continue
        c2 = lucas_binom(star_reduce(k * i, q), bottom, p)
        if c2:
            total += -c1 * c2 if i & 1 else c1 * c2
    return total % p


def pp_criterion(field, k: int) -> bool:
    """a_k is a PP iff gcd(k, q-1) = 1 and criterion_sum vanishes for every
    s in 1..q-2."""
    q = field.q
    if gcd(k, q - 1) != 1:
        return False
    return all(criterion_sum(field, k, s) == 0 for s in range(1, q - 1))


def _row_sum(field, mult: int, top: int, s: int) -> int:
    # sum over 2 <= i <= q-2 of (-1)^i C(top, (mult*i)*) C(i, 2s), mod p
    q, p = field.q, field.p
    s2 = 2 * s
    total = 0
    for i in range(2, q - 1):
        c2 = comb(i, s2) % p
        if not c2:
            continue
        c1 = lucas_binom(top, star_reduce(mult * i, q), p)
        if c1:
            total += -c1 * c2 if i & 1 else c1 * c2
    return total % p


def inverse_criterion_sum(field, k_prime: int, s: int, half: bool = False) -> int:
    """The criterion sum rewritten through the inverse exponent k'.

    sum over 2 <= i <= q-2 of (-1)^i C((k'*row)*, (k'i)*) C(i, 2s) mod p,
    where row = s for half=False and row = s + (q-1)/2 for half=True.
    C(i, 2s) is an ordinary integer binomial reduced mod p.
    """
    q = field.q
    row = s + (q - 1) // 2 if half else s
    return _row_sum(field, k_prime, star_reduce(k_prime * row, q), s)


def inverse_pp_criterion(field, k: int) -> bool:
    """PP test through k' = k^(-1) mod q-1: gcd ok and both sum families
    vanish (plain rows for 1 <= s <= (q-1)/2, shifted rows for s < (q-1)/2)."""
    q = field.q
    if gcd(k, q - 1) != 1:
        return False
    kp = mod_inverse(k, q - 1)
    h = (q - 1) // 2
    for s in range(1, h + 1):
        if inverse_criterion_sum(field, kp, s) != 0:
            return False
    for s in range(1, h):
        if inverse_criterion_sum(field, kp, s, half=True) != 0:
            return False
    return True


def xy_params(l: int, t: int, p: int, e: int) -> tuple[int, int]:
    """Support split (x, y) of the class l against its rotation by t:
    y counts positions where both l and p^t*l have a nonzero digit, and
    x is the digit sum of l minus y."""
    dv = digit_vector(l, p, e)
    y = len(support(dv) & support(shift_class(l, t, p, e)))
    return sum(dv.digits) - y, y


def support_identity_lhs(field, l: int, t: int, u: int, v: int) -> int:
    """Row-sum side of the digit-support identity.

    With s = (q-1)/2 - (u + v*p^t), computes
    sum over 2 <= i <= q-2 of (-1)^i C((l*(s+(q-1)/2))*, (li)*) C(i, 2s)
    mod p.  s is recomputed from (u, v, t) here so that inconsistent
    parameter bundles cannot be formed.
    """
    p, e, q = field.p, field.e, field.q
    if e < 3:
        raise ParamDomainError("requires e >= 3, got e = %d" % e)
    if not 1 <= t <= e - 1:
        raise ParamDomainError("t must be in 1..%d, got %d" % (e - 1, t))
    h = (p - 1) // 2
    if not (0 <= u <= h and 0 <= v <= h):
        raise ParamDomainError("u, v must be in 0..%d, got (%d, %d)" % (h, u, v))
    if l < 1:
        raise ParamDomainError("l must be >= 1, got %d" % l)
    digs = digit_vector(l, p, e).digits
    if any(d > 1 for d in digs):
        raise ParamDomainError("l = %d has a base-%d digit above 1" % (l, p))
    if all(d == 1 for d in digs):
        raise ParamDomainError("l = %d has all base-%d digits equal to 1" % (l, p))
    s = (q - 1) // 2 - (u + v * p**t)
    top = star_reduce(l * (s + (q - 1) // 2), q)
    return _row_sum(field, l, top, s)


def support_identity_rhs(p: int, x: int, y: int, u: int, v: int) -> int:
    """Closed-form side of the digit-support identity:

    sum over 0 <= a <= 2u, 0 <= b <= 2v of
    (-1)^((a+b+u+v)(x+y)) C(a,u)^x C(b,v)^x C(a+b,u+v)^y C(2u,a) C(2v,b)
    mod p, with 0^0 = 1 for the powered factors.
    """
    total = 0
    for a in range(2 * u + 1):
        ca = comb(a, u) ** x * comb(2 * u, a)
        for b in range(2 * v + 1):
            term = ca * comb(b, v) ** x * comb(a + b, u + v) ** y * comb(2 * v, b)
            if (a + b + u + v) * (x + y) & 1:
                term = -term
            total += term
    return total % p


def upper_half_sum(p: int, x: int, y: int) -> int:
    """sum over (p-1)/2 <= a, b <= p-1 of
    (-1)^(a+b) C(a,(p-1)/2)^x C(b,(p-1)/2)^x C(a+b,p-1)^y C(p-1,a) C(p-1,b)
    mod p.  For y >= 1 only the a = b = (p-1)/2 term survives mod p and the
    value is 1.
    """
    h = (p - 1) // 2
    total = 0
    for a in range(h, p):
        ca = comb(a, h) ** x * comb(p - 1, a)
        for b in range(h, p):
            term = ca * comb(b, h) ** x * comb(a + b, p - 1) ** y * comb(p - 1, b)
            if (a + b) & 1:
                term = -term
            total += term
    return total % p

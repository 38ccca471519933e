"""Arithmetic in GF(p^e) for odd primes p.

An element is identified by its index in the canonical enumeration: the
element with coefficient vector (c0, ..., c_{e-1}) over Z_p (low degree
first) has index sum(c_i * p^i).  Index 0 is the zero element and index 1
is the one element, so plain ints double as element handles and dense
tables can be indexed directly.

The modulus is always the lexicographically smallest monic irreducible
polynomial of degree e (coefficients compared low-degree-first), which
makes every element-dependent value reproducible across runs and machines.
"""

from __future__ import annotations

import itertools

from .errors import CapExceededError, EvenPrimeError, NotPrimeError

DEFAULT_FIELD_CAP = 10**6

# Dense q x q helper tables (powers, differences) are only built for fields
# small enough that exhaustive per-exponent sweeps are realistic.
TABLE_CAP = 4096

_COEFF_CACHE_CAP = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _poly_divides(den: tuple[int, ...], num: tuple[int, ...], p: int) -> bool:
    """Whether the monic polynomial den divides num over Z_p (coeffs low first)."""
    rem = list(num)
    dd = len(den) - 1
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i]
        if c:
            off = i - dd
            for j in range(dd):
                rem[off + j] = (rem[off + j] - c * den[j]) % p
            rem[i] = 0
    return not any(rem[:dd])


def smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree e over Z_p.

    Candidates (c0, ..., c_{e-1}, 1) are compared low-degree-first.  A
    candidate is irreducible iff no monic polynomial of degree 1..e//2
    divides it; for e = 1 that is vacuous and the result is X.
    """
    divisors = [
        tail + (1,)
        for d in range(1, e // 2 + 1)
        for tail in itertools.product(range(p), repeat=d)
    ]
    for tail in itertools.product(range(p), repeat=e):
        cand = tail + (1,)
        if all(not _poly_divides(den, cand, p) for den in divisors):
            return cand
    raise AssertionError("no monic irreducible of degree %d over Z_%d" % (e, p))


def poly_str(coeffs) -> str:
    """Human-readable polynomial, highest degree first, e.g. "X^2 + 1"."""
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            var = "X" if i == 1 else "X^%d" % i
            terms.append(var if c == 1 else "%d*%s" % (c, var))
    return " + ".join(terms) if terms else "0"


class Field:
    """A concrete GF(p^e): fixed modulus, canonical element order, arithmetic.

    Immutable after construction apart from internally cached tables; all
    operations are pure, so instances can be shared freely across workers.
    """

    def __init__(self, p: int, e: int, cap: int = DEFAULT_FIELD_CAP):
        if not is_prime(p):
            raise NotPrimeError("p = %d is not prime" % p)
        if p == 2:
            raise EvenPrimeError("p = 2 is rejected; only odd characteristic is supported")
        if e < 1:
            raise ValueError("extension degree must be >= 1, got %d" % e)
        q = p**e
        if q > cap:
            raise CapExceededError("q = %d exceeds the field cap %d" % (q, cap))
        self.p = p
        self.e = e
        self.q = q
        self.modulus = smallest_irreducible(p, e)
        self._pbase = tuple(p**i for i in range(e))
        self._xpow = self._reduction_rows()
        self._coeff_cache = None
        if e > 1 and q <= _COEFF_CACHE_CAP:
            self._coeff_cache = [self._decode(a) for a in range(q)]
        self._pow_rows = None
        self._sub_rows = None

    def __repr__(self) -> str:
        return "Field(p=%d, e=%d, modulus=%s)" % (self.p, self.e, poly_str(self.modulus))

    # -- representation ------------------------------------------------

    def _decode(self, a: int) -> tuple[int, ...]:
        p = self.p
        out = []
        for _ in range(self.e):
            a, c = divmod(a, p)
            out.append(c)
        return tuple(out)

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Coefficient vector of element a, low degree first, length e."""
        if self._coeff_cache is not None:
            return self._coeff_cache[a]
        return self._decode(a)

    def element(self, coeffs) -> int:
        """Element index for a coefficient vector (entries reduced mod p)."""
        if len(coeffs) != self.e:
            raise ValueError("expected %d coefficients, got %d" % (self.e, len(coeffs)))
        p = self.p
        return sum((c % p) * b for c, b in zip(coeffs, self._pbase))

    def elements(self) -> range:
        """All q elements in canonical order: zero first, one second."""
        return range(self.q)

    # -- arithmetic ------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        p = self.p
        if self.e == 1:
            return (a + b) % p
        ca = self.coeffs(a)
        cb = self.coeffs(b)
        enc = 0
        for i in range(self.e - 1, -1, -1):
            enc = enc * p + (ca[i] + cb[i]) % p
        return enc

    def neg(self, a: int) -> int:
        p = self.p
        if self.e == 1:
            return -a % p
        ca = self.coeffs(a)
        enc = 0
        for i in range(self.e - 1, -1, -1):
            enc = enc * p + -ca[i] % p
        return enc

    def sub(self, a: int, b: int) -> int:
        p = self.p
        if self.e == 1:
            return (a - b) % p
        ca = self.coeffs(a)
        cb = self.coeffs(b)
        enc = 0
        for i in range(self.e - 1, -1, -1):
            enc = enc * p + (ca[i] - cb[i]) % p
        return enc

    def mul(self, a: int, b: int) -> int:
        p = self.p
        if self.e == 1:
            return a * b % p
        e = self.e
        ca = self.coeffs(a)
        cb = self.coeffs(b)
        acc = [0] * (2 * e - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    if y:
                        acc[i + j] += x * y
        res = acc[:e]
        xpow = self._xpow
        for j in range(e, 2 * e - 1):
            c = acc[j] % p
            if c:
                row = xpow[j - e]
                for i in range(e):
                    res[i] += c * row[i]
        enc = 0
        for i in range(e - 1, -1, -1):
            enc = enc * p + res[i] % p
        return enc

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of the zero element")
        return self.pow(a, self.q - 2)

    def pow(self, x: int, n: int) -> int:
        """x**n by square-and-multiply; x**0 == 1 for every x, including 0."""
        if n < 0:
            raise ValueError("negative exponent %d" % n)
        if self.e == 1:
            return pow(x, n, self.p)
        result = 1
        base = x
        while n:
            if n & 1:
                result = self.mul(result, base)
            n >>= 1
            if n:
                base = self.mul(base, base)
        return result

    def _reduction_rows(self):
        # X^j mod modulus for e <= j <= 2e-2, as coefficient tuples.
        p, e = self.p, self.e
        if e == 1:
            return ()
        base = tuple(-self.modulus[i] % p for i in range(e))
        rows = [base]
        cur = base
        for _ in range(e - 2):
            shifted = (0,) + cur[:-1]
            c = cur[-1]
            if c:
                cur = tuple((shifted[i] + c * base[i]) % p for i in range(e))
            else:
                cur = shifted
            rows.append(cur)
        return tuple(rows)

    # -- dense helper tables ----------------------------------------------

    def power_table(self) -> list[list[int]]:
        """rows[x][n] = x**n for 0 <= n <= q-1 (row 0 is [1, 0, ..., 0]).

        Built once and cached; only available for q <= TABLE_CAP.
        """
        if self._pow_rows is None:
            if self.q > TABLE_CAP:
                raise CapExceededError("q = %d exceeds the table cap %d" % (self.q, TABLE_CAP))
            q = self.q
            mul = self.mul
            rows = []
            for x in range(q):
                row = [1] * q
                acc = 1
                for n in range(1, q):
                    acc = mul(acc, x)
                    row[n] = acc
                rows.append(row)
            self._pow_rows = rows
        return self._pow_rows

    def sub_table(self) -> list[list[int]]:
        """rows[a][b] = a - b.  Built once and cached; q <= TABLE_CAP only."""
        if self._sub_rows is None:
            if self.q > TABLE_CAP:
                raise CapExceededError("q = %d exceeds the table cap %d" % (self.q, TABLE_CAP))
            q = self.q
            if self.e == 1:
                p = self.p
                self._sub_rows = [[(a - b) % p for b in range(q)] for a in range(q)]
            else:
                add = self.add
                negs = [self.neg(b) for b in range(q)]
                self._sub_rows = [[add(a, nb) for nb in negs] for a in range(q)]
        return self._sub_rows

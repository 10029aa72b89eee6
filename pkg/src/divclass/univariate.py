"""Dense univariate polynomial arithmetic over Z and F_p.

These are the workhorses behind the 1+t^c factor counting and the exact
two-variable irreducibility checks: cyclotomic polynomials with integer
coefficients, and enough F_p[t] arithmetic for Rabin's irreducibility test,
distinct-degree factor counting and a bounded trial-division factorizer.

A polynomial is a list of coefficients, index = degree, last entry nonzero.
The zero polynomial is the empty list.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product

from .errors import DegenerateInput, SearchSpaceTooLarge
from .exactmath import divisors, factorize


def _zip_pad(f: list[int], g: list[int]):
    n = max(len(f), len(g))
    return zip(f + [0] * (n - len(f)), g + [0] * (n - len(g)))


# ---------------------------------------------------------------------------
# integer coefficients

def int_strip(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def int_mul(f: list[int], g: list[int]) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return int_strip(out)


def int_divmod(f: list[int], g: list[int]) -> tuple[list[int], list[int]]:
    """Division with remainder; the divisor must be monic up to sign."""
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    if abs(g[-1]) != 1:
        raise DegenerateInput("integer polynomial division needs a monic divisor")
    rem = list(f)
    dq = len(f) - len(g)
    if dq < 0:
        return [], int_strip(rem)
    quo = [0] * (dq + 1)
    inv = g[-1]  # 1 or -1
    for k in range(dq, -1, -1):
        c = rem[k + len(g) - 1] * inv
        if c:
            quo[k] = c
            for j, b in enumerate(g):
                rem[k + j] -= c * b
    return int_strip(quo), int_strip(rem)


def one_plus_tc(c: int) -> list[int]:
    f = [0] * (c + 1)
    f[0] = 1
    f[c] = 1
    return f


@lru_cache(maxsize=None)
def cyclotomic(e: int) -> tuple[int, ...]:
    """The e-th cyclotomic polynomial, by exact division of t^e - 1."""
    if e < 1:
        raise DegenerateInput(f"cyclotomic index must be >= 1, got {e}")
    if e == 1:
        return (-1, 1)
    f = [0] * (e + 1)
    f[0] = -1
    f[e] = 1
    for d in divisors(e):
        if d < e:
            q, r = int_divmod(f, list(cyclotomic(d)))
            if r:
                raise DegenerateInput("cyclotomic division left a remainder; bug")
            f = q
    return tuple(f)


# ---------------------------------------------------------------------------
# F_p coefficients

def fp_strip(f: list[int], p: int) -> list[int]:
    f = [c % p for c in f]
    while f and f[-1] == 0:
        f.pop()
    return f


def fp_mul(f: list[int], g: list[int], p: int) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return fp_strip(out, p)


def fp_divmod(f: list[int], g: list[int], p: int) -> tuple[list[int], list[int]]:
    g = fp_strip(list(g), p)
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    rem = [c % p for c in f]
    while rem and rem[-1] == 0:
        rem.pop()
    dg = len(g) - 1
    dq = len(rem) - 1 - dg
    if dq < 0:
        return [], rem
    inv = pow(g[-1], p - 2, p)
    quo = [0] * (dq + 1)
    for k in range(dq, -1, -1):
        c = rem[k + dg] * inv % p
        if c:
            quo[k] = c
            for j, b in enumerate(g):
                rem[k + j] = (rem[k + j] - c * b) % p
    return fp_strip(quo, p), fp_strip(rem, p)


def fp_monic(f: list[int], p: int) -> list[int]:
    f = fp_strip(list(f), p)
    if not f or f[-1] == 1:
        return f
    inv = pow(f[-1], p - 2, p)
    return [c * inv % p for c in f]


def fp_gcd(f: list[int], g: list[int], p: int) -> list[int]:
    a, b = fp_strip(list(f), p), fp_strip(list(g), p)
    while b:
        _, r = fp_divmod(a, b, p)
        a, b = b, r
    return fp_monic(a, p)


def fp_powmod(base: list[int], e: int, mod: list[int], p: int) -> list[int]:
    """base^e mod (mod, p) by square and multiply; mod must be nonconstant."""
    if len(fp_strip(list(mod), p)) <= 1:
        raise DegenerateInput("fp_powmod needs a nonconstant modulus")
    result = [1]
    _, acc = fp_divmod(base, mod, p)
    while e:
        if e & 1:
            result = fp_divmod(fp_mul(result, acc, p), mod, p)[1]
        acc = fp_divmod(fp_mul(acc, acc, p), mod, p)[1]
        e >>= 1
    return result


def fp_derivative(f: list[int], p: int) -> list[int]:
    return fp_strip([i * c % p for i, c in enumerate(f)][1:], p)


def fp_radical(f: list[int], p: int) -> list[int]:
    """Product of the distinct monic irreducible factors of f.

    Handles the char-p wrinkles: a vanishing derivative means f = v(t)^p
    (coefficients are Frobenius-fixed in F_p, so v is read off directly), and
    factors whose multiplicity is divisible by p survive inside gcd(f, f')
    and must be collected recursively.
    """
    f = fp_monic(f, p)
    if not f:
        raise DegenerateInput("radical of the zero polynomial")
    if len(f) == 1:
        return [1]
    d = fp_derivative(f, p)
    if not d:
        return fp_radical([f[i] for i in range(0, len(f), p)], p)
    g = fp_gcd(f, d, p)
    w = fp_divmod(f, g, p)[0]  # squarefree, but may miss multiplicity-p factors
    if len(g) == 1:
        return w
    rg = fp_radical(g, p)
    h = fp_gcd(w, rg, p)
    return fp_monic(fp_divmod(fp_mul(w, rg, p), h, p)[0], p)


def fp_is_squarefree(f: list[int], p: int) -> bool:
    f = fp_monic(f, p)
    if len(f) <= 1:
        return True
    return len(fp_radical(f, p)) == len(f)


def fp_squarefree_degree(f: list[int], p: int) -> int:
    """Number of distinct roots of f in the algebraic closure of F_p."""
    return len(fp_radical(f, p)) - 1


def fp_irreducible(f: list[int], p: int) -> bool:
    """Rabin's deterministic irreducibility test over F_p."""
    f = fp_monic(f, p)
    n = len(f) - 1
    if n <= 0:
        return False
    if n == 1:
        return True
    t = [0, 1]
    h = t
    for _ in range(n):
        h = fp_powmod(h, p, f, p)
    if fp_strip([a - b for a, b in _zip_pad(h, t)], p):
        return False
    for q in factorize(n):
        h = t
        for _ in range(n // q):
            h = fp_powmod(h, p, f, p)
        diff = fp_strip([a - b for a, b in _zip_pad(h, t)], p)
        if len(fp_gcd(diff, f, p)) != 1:
            return False
    return True


def fp_distinct_factor_count(f: list[int], p: int) -> int:
    """Number of distinct monic irreducible factors of f over F_p.

    Works on the radical, then counts degree by degree: gcd(f, t^(p^k) - t)
    is the product of the irreducible factors of degree dividing k, so after
    peeling degrees below k its degree is k times the number of degree-k
    factors.
    """
    f = fp_radical(f, p)
    count = 0
    h = [0, 1]
    k = 0
    while len(f) - 1 >= 1:
        k += 1
        if 2 * k > len(f) - 1:
            count += 1
            break
        h = fp_powmod(h, p, f, p)
        diff = fp_strip([a - b for a, b in _zip_pad(h, [0, 1])], p)
        g = fp_gcd(diff, f, p)
        if len(g) > 1:
            count += (len(g) - 1) // k
            f = fp_divmod(f, g, p)[0]
            if len(f) - 1 >= 1:
                h = fp_divmod(h, f, p)[1]
    return count


def fp_trial_division_factors(
    f: list[int], p: int, budget: int = 2_000_000
) -> list[tuple[tuple[int, ...], int]]:
    """Factor f over F_p by trial division over all monic polynomials.

    Candidates are enumerated degree by degree, so any factor found is
    irreducible (all smaller degrees were exhausted first).  Raises
    SearchSpaceTooLarge when the candidate count would exceed the budget.
    """
    f = fp_monic(f, p)
    if not f:
        raise DegenerateInput("cannot factor the zero polynomial")
    out: list[tuple[tuple[int, ...], int]] = []
    spent = 0
    deg = 1
    while len(f) - 1 >= 2 * deg:
        spent += p**deg
        if spent > budget:
            raise SearchSpaceTooLarge(
                f"trial division over F_{p} at degree {deg} exceeds budget"
            )
        for tail in product(range(p), repeat=deg):
            cand = list(tail) + [1]
            mult = 0
            while len(f) - 1 >= deg:
                q, r = fp_divmod(f, cand, p)
                if r:
                    break
                f = q
                mult += 1
            if mult:
                out.append((tuple(cand), mult))
        deg += 1
    if len(f) - 1 >= 1:
        out.append((tuple(f), 1))
    return sorted(out)


# ---------------------------------------------------------------------------
# characteristic zero

def _q_strip(f: list[Fraction]) -> list[Fraction]:
    while f and f[-1] == 0:
        f.pop()
    return f


def q_gcd_degree(f: list, g: list) -> int:
    """Degree of gcd over Q (monic Euclid with exact Fractions)."""
    a = _q_strip([Fraction(c) for c in f])
    b = _q_strip([Fraction(c) for c in g])
    while b:
        r = list(a)
        while r and len(r) >= len(b):
            c = r[-1] / b[-1]
            k = len(r) - len(b)
            for j, bc in enumerate(b):
                r[k + j] -= c * bc
            _q_strip(r)
        a, b = b, r
    if not a:
        raise DegenerateInput("gcd of two zero polynomials")
    return len(a) - 1


def q_squarefree_degree(coeffs: list) -> int:
    """Number of distinct complex roots: deg f - deg gcd(f, f')."""
    f = _q_strip([Fraction(c) for c in coeffs])
    if len(f) <= 1:
        return 0
    d = [i * c for i, c in enumerate(f)][1:]
    return (len(f) - 1) - q_gcd_degree(f, d)


def q_irreducible(coeffs: list) -> bool:
    """Irreducibility over Q of a nonconstant polynomial with rational coefficients.

    The one externally sourced primitive (sympy); reduction modulo small
    primes cannot decide this (t^4 + 1 factors modulo every prime).
    """
    from sympy import Poly, Rational, Symbol

    t = Symbol("t")
    poly = Poly([Rational(str(c)) for c in reversed(coeffs)], t, domain="QQ")
    if poly.degree() < 1:
        raise DegenerateInput("irreducibility is about nonconstant polynomials")
    _, factors = poly.factor_list()
    return len(factors) == 1 and factors[0][1] == 1

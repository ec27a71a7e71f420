"""Irreducible factorization over the rationals at desk scale.

Pipeline: squarefree decomposition, rational-root extraction (Newton-lifted
p-adic roots, no big-integer divisor enumeration), then a Berlekamp/Hensel
lift with subset recombination for the residual squarefree factors. Intended
for degrees up to a few dozen with moderate coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .unipoly import UniPoly, squarefree_decompose


@dataclass(frozen=True)
class IrreducibleFactorization:
    """p = content * prod(factor ** multiplicity), factors monic irreducible."""

    content: Fraction
    parts: tuple[tuple[UniPoly, int], ...]

    def expand(self) -> UniPoly:
        var = self.parts[0][0].var if self.parts else "x"
        acc = UniPoly.constant(self.content, var)
        for f, m in self.parts:
            acc = acc * f**m
        return acc


# -- arithmetic mod p on integer coefficient lists ---------------------------


def _pz_trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _pz_add(a, b, m):
    n = max(len(a), len(b))
    return _pz_trim(
        [((a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0)) % m for k in range(n)]
    )


def _pz_sub(a, b, m):
    n = max(len(a), len(b))
    return _pz_trim(
        [((a[k] if k < len(a) else 0) - (b[k] if k < len(b) else 0)) % m for k in range(n)]
    )


def _pz_mul(a, b, m):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, av in enumerate(a):
        if av == 0:
            continue
        for j, bv in enumerate(b):
            out[i + j] = (out[i + j] + av * bv) % m
    return _pz_trim(out)


def _pz_divmod(a, b, m):
    """Division by b with invertible leading coefficient mod m."""
    a = [v % m for v in a]
    inv = pow(b[-1], -1, m)
    db = len(b) - 1
    q = [0] * max(len(a) - db, 0)
    for k in range(len(a) - 1 - db, -1, -1):
        c = (a[k + db] * inv) % m
        if c:
            q[k] = c
            for j, bv in enumerate(b):
                a[k + j] = (a[k + j] - c * bv) % m
    return _pz_trim(q), _pz_trim(a)


def _pz_gcd(a, b, p):
    a, b = _pz_trim([v % p for v in a]), _pz_trim([v % p for v in b])
    while b:
        _, r = _pz_divmod(a, b, p)
        a, b = b, r
    if a:
        inv = pow(a[-1], -1, p)
        a = [(v * inv) % p for v in a]
    return a


def _pz_xgcd(a, b, p):
    """Extended Euclid mod prime p: g monic, s*a + t*b = g."""
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _pz_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _pz_sub(s0, _pz_mul(q, s1, p), p)
        t0, t1 = t1, _pz_sub(t0, _pz_mul(q, t1, p), p)
    inv = pow(r0[-1], -1, p)
    return (
        [(v * inv) % p for v in r0],
        [(v * inv) % p for v in s0],
        [(v * inv) % p for v in t0],
    )


def _pz_deriv(a, m):
    return _pz_trim([(k * a[k]) % m for k in range(1, len(a))])


def _symmetric(v: int, m: int) -> int:
    v %= m
    return v - m if v > m // 2 else v


def _primes():
    yield from (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53)
    n = 59
    while True:
        for d in range(3, int(math.isqrt(n)) + 1, 2):
            if n % d == 0:
                break
        else:
            yield n
        n += 2


def _good_prime(f_int: list[int]) -> int:
    """A prime not dividing lc(f) and keeping f squarefree mod p."""
    for p in _primes():
        if f_int[-1] % p == 0:
            continue
        fp = _pz_trim([v % p for v in f_int])
        if len(fp) != len(f_int):
            continue
        if len(_pz_gcd(fp, _pz_deriv(fp, p), p)) == 1:
            return p
    raise RuntimeError("unreachable: no good prime found")


# -- Berlekamp factorization mod p -------------------------------------------


def _berlekamp(f: list[int], p: int) -> list[list[int]]:
    """Factor a monic squarefree polynomial mod a small prime p."""
    n = len(f) - 1
    if n <= 1:
        return [f]
    # rows of Q: coefficients of x^(i*p) mod f
    xpow = [0] * p + [1]
    _, xp_base = _pz_divmod(xpow, f, p)
    rows = []
    cur = [1]
    for _ in range(n):
        padded = cur + [0] * (n - len(cur))
        rows.append(padded[:n])
        cur = _pz_divmod(_pz_mul(cur, xp_base, p), f, p)[1]
    # left nullspace of (Q - I): vectors v with v*(Q - I) = 0
    mat = [[(rows[i][j] - (1 if i == j else 0)) % p for j in range(n)] for i in range(n)]
    basis = _left_nullspace(mat, p)
    r = len(basis)
    if r == 1:
        return [f]
    factors = [f]
    for v in basis:
        vpoly = _pz_trim(list(v))
        if len(vpoly) <= 1:
            continue
        for s in range(p):
            if len(factors) == r:
                return factors
            new_factors = []
            shifted = _pz_sub(vpoly, [s], p)
            for u in factors:
                if len(u) <= 2:
                    new_factors.append(u)
                    continue
                g = _pz_gcd(u, shifted, p)
                if 1 < len(g) < len(u):
                    new_factors.append(g)
                    new_factors.append(_pz_divmod(u, g, p)[0])
                else:
                    new_factors.append(u)
            factors = new_factors
    if len(factors) != r:
        raise RuntimeError("modular factorization did not split completely")
    return factors


def _left_nullspace(mat: list[list[int]], p: int) -> list[list[int]]:
    """Basis of {v : v*mat = 0} over GF(p)."""
    n = len(mat)
    cols = [[mat[i][j] for i in range(n)] for j in range(n)]  # transpose
    aug = [cols[j] + [] for j in range(n)]
    pivots: dict[int, int] = {}
    row = 0
    m = [list(r) for r in aug]
    for col in range(n):
        pr = next((i for i in range(row, n) if m[i][col] % p != 0), None)
        if pr is None:
            continue
        m[row], m[pr] = m[pr], m[row]
        inv = pow(m[row][col], -1, p)
        m[row] = [(v * inv) % p for v in m[row]]
        for i in range(n):
            if i != row and m[i][col] % p:
                c = m[i][col]
                m[i] = [(m[i][k] - c * m[row][k]) % p for k in range(n)]
        pivots[col] = row
        row += 1
    basis = []
    free_cols = [c for c in range(n) if c not in pivots]
    for fc in free_cols:
        v = [0] * n
        v[fc] = 1
        for col, r in pivots.items():
            v[col] = (-m[r][fc]) % p
        basis.append(v)
    return basis


# -- Hensel lifting ------------------------------------------------------------


def _hensel_pair(f, g, h, s, t, p, target):
    """Lift f = g*h (mod p) with s*g + t*h = 1 (mod p) to modulus >= target.

    f, g, h monic integer polynomials (f exact over Z); returns (g*, h*, modulus).
    """
    m = p
    while m < target:
        m2 = m * m
        e = _pz_sub([v % m2 for v in f], _pz_mul(g, h, m2), m2)
        q, r = _pz_divmod(_pz_mul(s, e, m2), h, m2)
        g1 = _pz_add(_pz_add(g, _pz_mul(t, e, m2), m2), _pz_mul(q, g, m2), m2)
        h1 = _pz_add(h, r, m2)
        b = _pz_sub(_pz_add(_pz_mul(s, g1, m2), _pz_mul(t, h1, m2), m2), [1], m2)
        c, d = _pz_divmod(_pz_mul(s, b, m2), h1, m2)
        s1 = _pz_sub(s, d, m2)
        t1 = _pz_sub(t, _pz_add(_pz_mul(t, b, m2), _pz_mul(c, g1, m2), m2), m2)
        g, h, s, t, m = g1, h1, s1, t1, m2
    return g, h, m


def _lift_factors(f_int: list[int], facs: list[list[int]], p: int, target: int):
    """Lift a mod-p factorization of monic f to modulus >= target, sequentially."""
    out = []
    cur = list(f_int)
    modulus = p
    for i in range(len(facs) - 1):
        h0 = facs[i]
        g0 = [1]
        for other in facs[i + 1 :]:
            g0 = _pz_mul(g0, other, p)
        _, s, t = _pz_xgcd(g0, h0, p)
        g_lift, h_lift, modulus = _hensel_pair(cur, g0, h0, s, t, p, target)
        out.append(h_lift)
        cur = g_lift
    out.append(cur)
    return out, max(modulus, p)


# -- Zassenhaus ------------------------------------------------------------------


def _mignotte_target(f_int: list[int]) -> int:
    norm2 = math.isqrt(sum(v * v for v in f_int)) + 1
    return 2 * (2 ** (len(f_int) - 1)) * norm2 + 1


def _factor_squarefree_monic_int(f_int: list[int]) -> list[list[int]]:
    """Irreducible factors over Z of a monic squarefree integer polynomial."""
    n = len(f_int) - 1
    if n <= 1:
        return [f_int] if n == 1 else []
    p = _good_prime(f_int)
    fp = [v % p for v in f_int]
    modular = _berlekamp(fp, p)
    if len(modular) == 1:
        return [f_int]
    target = _mignotte_target(f_int)
    lifted, modulus = _lift_factors(f_int, modular, p, target)
    return _recombine(f_int, lifted, modulus)


def _recombine(f_int: list[int], lifted: list[list[int]], modulus: int) -> list[list[int]]:
    from itertools import combinations

    remaining = list(range(len(lifted)))
    result = []
    f_cur = list(f_int)
    size = 1
    while 2 * size <= len(remaining):
        found = False
        for subset in combinations(remaining, size):
            cand = [1]
            for idx in subset:
                cand = _pz_mul(cand, lifted[idx], modulus)
            cand = [_symmetric(v, modulus) for v in cand]
            # cheap filter: constant terms must divide
            if f_cur[0] != 0 and cand[0] != 0 and f_cur[0] % cand[0] != 0:
                continue
            q, ok = _int_exact_div(f_cur, cand)
            if ok:
                result.append(cand)
                f_cur = q
                remaining = [i for i in remaining if i not in subset]
                found = True
                break
        if not found:
            size += 1
    result.append(f_cur)
    return result


def _int_exact_div(a: list[int], b: list[int]):
    """Exact division of integer polynomials with monic divisor b."""
    if len(b) > len(a):
        return [], False
    r = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for k in range(len(a) - len(b), -1, -1):
        c = r[k + len(b) - 1]
        q[k] = c
        if c:
            for j, bv in enumerate(b):
                r[k + j] -= c * bv
    if any(r[: len(b) - 1]):
        return [], False
    return q, True


# -- rational roots via scalar Newton lifting --------------------------------------


def _integer_roots_squarefree_monic(f_int: list[int]) -> list[int]:
    """All integer roots of a monic squarefree integer polynomial."""
    if not f_int:
        return []
    bound = 1 + max(abs(v) for v in f_int[:-1]) if len(f_int) > 1 else 0
    target = 2 * bound + 1
    p = _good_prime(f_int)
    fp = [v % p for v in f_int]
    dfp = _pz_deriv(fp, p)
    roots_mod_p = [r for r in range(p) if _pz_eval_mod(fp, r, p) == 0]
    roots = []
    for r0 in roots_mod_p:
        m = p
        r = r0
        while m < target:
            m2 = m * m
            fr = _eval_int_mod(f_int, r, m2)
            dfr = _eval_int_mod([k * f_int[k] for k in range(1, len(f_int))], r, m2)
            r = (r - fr * pow(dfr, -1, m2)) % m2
            m = m2
        cand = _symmetric(r, m)
        if _eval_int(f_int, cand) == 0:
            roots.append(cand)
    return sorted(set(roots))


def _pz_eval_mod(f, v, m):
    acc = 0
    for c in reversed(f):
        acc = (acc * v + c) % m
    return acc


def _eval_int_mod(f, v, m):
    acc = 0
    for c in reversed(f):
        acc = (acc * v + c) % m
    return acc


def _eval_int(f, v):
    acc = 0
    for c in reversed(f):
        acc = acc * v + c
    return acc


def _to_monic_transform(f_int: list[int]) -> tuple[list[int], int]:
    """Map primitive f with lc = l to the monic F(y) = l^(n-1) f(y/l)."""
    n = len(f_int) - 1
    l = f_int[-1]
    return [f_int[i] * l ** (n - 1 - i) for i in range(n)] + [1], l


def _from_monic_factor(g_int: list[int], l: int, var: str) -> UniPoly:
    """Map a monic factor G of the transform back to monic G(l*x) over Q."""
    coeffs = [Fraction(g_int[i]) * l**i for i in range(len(g_int))]
    return UniPoly.of(coeffs, var).monic()


def rational_roots_squarefree(f: UniPoly) -> list[Fraction]:
    """All rational roots of a squarefree polynomial, exactly."""
    if f.is_zero:
        raise ValueError("zero polynomial")
    if f.degree < 1:
        return []
    roots = []
    if f.coeff(0) == 0:
        roots.append(Fraction(0))
        f = f.exact_div(UniPoly.variable(f.var))
        if f.degree < 1:
            return roots
    _, ints = f.primitive_int()
    monic_ints, l = _to_monic_transform(ints)
    for r in _integer_roots_squarefree_monic(monic_ints):
        roots.append(Fraction(r, l))
    return sorted(set(roots))


def rational_roots(p: UniPoly) -> dict[Fraction, int]:
    """Rational roots with multiplicities."""
    out: dict[Fraction, int] = {}
    for part, mult in squarefree_decompose(p).parts:
        for r in rational_roots_squarefree(part):
            out[r] = out.get(r, 0) + mult
    return out


# -- top-level factorization ---------------------------------------------------------


def factor_rationals(p: UniPoly) -> IrreducibleFactorization:
    """Complete irreducible factorization over Q; rejects the zero polynomial."""
    if p.is_zero:
        raise ValueError("factorization of the zero polynomial")
    sf = squarefree_decompose(p)
    parts: dict[UniPoly, int] = {}
    for sq_part, mult in sf.parts:
        for factor in _factor_squarefree(sq_part):
            parts[factor] = parts.get(factor, 0) + mult
    ordered = sorted(parts.items(), key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return IrreducibleFactorization(sf.content, tuple(ordered))


def _factor_squarefree(f: UniPoly) -> list[UniPoly]:
    """Monic irreducible factors of a monic squarefree polynomial."""
    if f.degree <= 1:
        return [f.monic()] if f.degree == 1 else []
    factors: list[UniPoly] = []
    # rational-root extraction first
    for root in rational_roots_squarefree(f):
        lin = UniPoly.of((-root, 1), f.var)
        factors.append(lin)
        f = f.exact_div(lin)
    if f.degree == 0:
        return factors
    if f.degree == 1:
        return factors + [f.monic()]
    _, ints = f.primitive_int()
    monic_ints, l = _to_monic_transform(ints)
    for g_int in _factor_squarefree_monic_int(monic_ints):
        factors.append(_from_monic_factor(g_int, l, f.var))
    return factors


def is_irreducible(p: UniPoly) -> bool:
    if p.degree < 1:
        return False
    fac = factor_rationals(p)
    return len(fac.parts) == 1 and fac.parts[0][1] == 1

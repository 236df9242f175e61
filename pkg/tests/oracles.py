"""Independent reference computations.

Nothing here imports the workbench.  Values that the tests compare against
are either computed below from first principles or frozen literals that were
produced by these functions and checked by hand.
"""

from fractions import Fraction
from itertools import product


def downup_hilbert(n):
    """Number of triples (a, b, c) with a + 2b + c = n: the words d^a (ud)^b u^c."""
    return sum(1 for a in range(n + 1) for b in range(n // 2 + 1) for c in range(n + 1)
               if a + 2 * b + c == n)


DOWNUP_HILBERT_0_12 = [1, 2, 4, 6, 9, 12, 16, 20, 25, 30, 36, 42, 49]


def poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def series_divide(num, den, N):
    """Coefficients of num/den to degree N by solving den * s = num term by term."""
    s = []
    for n in range(N + 1):
        acc = Fraction(num[n] if n < len(num) else 0)
        for k in range(1, min(n, len(den) - 1) + 1):
            acc -= den[k] * s[n - k]
        s.append(acc / den[0])
    return s


def example33_series(N=16):
    """(1 - t^8) / ((1 - t^2)^2 (1 - t^4)^2), built from explicit factor lists."""
    one_minus_t2 = [1, 0, -1]
    one_minus_t4 = [1, 0, 0, 0, -1]
    den = poly_mul(poly_mul(one_minus_t2, one_minus_t2), poly_mul(one_minus_t4, one_minus_t4))
    num = [1, 0, 0, 0, 0, 0, 0, 0, -1]
    return [int(c) for c in series_divide(num, den, N)]


EXAMPLE33_SERIES_0_16 = [1, 0, 2, 0, 5, 0, 8, 0, 13, 0, 18, 0, 25, 0, 32, 0, 41]


def avoiding_words(letters, forbidden, n):
    """All words of length n over ``letters`` with no factor from ``forbidden``."""
    return ["".join(w) for w in product(letters, repeat=n)
            if not any(f in "".join(w) for f in forbidden)]


def dihedral_elements(n):
    """Reflections a: x -> -x and b: x -> 1 - x of Z/n as formal pairs (sign, shift).

    Keeping the sign formal keeps the group faithful of order 2n even for n = 2.
    """
    return (-1, 0), (-1, 1 % n)


def affine_mul(p, q, n):
    """Composite x -> p(q(x)) of affine maps x -> s x + k on Z/n."""
    (s1, k1), (s2, k2) = p, q
    return (s1 * s2, (s1 * k2 + k1) % n)


def identity_component_dims(n, N):
    """dim of the identity component of D(0,1) under d -> a, u -> b in D_2n.

    Normal words of D(0,1) are the words avoiding ud^2 and u^2d; the degree of
    a word is the product of reflections in word order.
    """
    a, b = dihedral_elements(n)
    ident = (1, 0)
    out = []
    for m in range(N + 1):
        count = 0
        for w in avoiding_words("du", ["udd", "uud"], m):
            g = ident
            for ch in w:
                g = affine_mul(g, a if ch == "d" else b, n)
            count += g == ident
        out.append(count)
    return out


def quaternion_units():
    """Unit quaternions +-1, +-i, +-j, +-k as 4-tuples with Hamilton's product."""
    def qmul(p, q):
        a1, b1, c1, d1 = p
        a2, b2, c2, d2 = q
        return (a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)
    names = {"1": (1, 0, 0, 0), "-1": (-1, 0, 0, 0), "i": (0, 1, 0, 0), "-i": (0, -1, 0, 0),
             "j": (0, 0, 1, 0), "-j": (0, 0, -1, 0), "k": (0, 0, 0, 1), "-k": (0, 0, 0, -1)}
    return names, qmul


def expand_product(factors):
    """Expand a product of noncommutative sums given as {word: coeff} dicts."""
    acc = {"": Fraction(1)}
    for f in factors:
        nxt = {}
        for u, cu in acc.items():
            for v, cv in f.items():
                nxt[u + v] = nxt.get(u + v, 0) + cu * cv
        acc = {w: c for w, c in nxt.items() if c}
    return acc


def u7_coefficient_sign_count():
    """Coefficient of u^7 in 2^7 (x^3yx^3 - y^3xy^3) with x = (d+u)/2, y = (d-u)/2.

    Only the u-part of each substituted letter reaches u^7: x contributes +1/2,
    y contributes -1/2.
    """
    def u_part(word):
        c = Fraction(1)
        for ch in word:
            c *= Fraction(1, 2) if ch == "x" else Fraction(-1, 2)
        return c
    return 2 ** 7 * (u_part("xxxyxxx") - u_part("yyyxyyy"))

"""Slow, independent reference computations used only by the tests.

Nothing here imports the package's arithmetic; polynomials are coefficient
lists (index = exponent) and sequences are plain lists of ints.
"""

from itertools import product


def coeffs(mask):
    return [(mask >> i) & 1 for i in range(max(mask.bit_length(), 1))]


def mask_of(cs):
    return sum(c << i for i, c in enumerate(cs))


def trim(cs):
    cs = list(cs)
    while len(cs) > 1 and cs[-1] == 0:
        cs.pop()
    return cs


def schoolbook_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] ^= x & y
    return trim(out)


def long_div_rem(a, m):
    a = trim(a)
    m = trim(m)
    dm = len(m) - 1
    a = list(a)
    for k in range(len(a) - 1, dm - 1, -1):
        if a[k]:
            for j in range(dm + 1):
                a[k - dm + j] ^= m[j]
    return trim(a[:dm] or [0])


def brute_inverse(a_mask, m_mask):
    n = m_mask.bit_length() - 1
    hits = [f for f in range(1 << n) if mask_of(long_div_rem(schoolbook_mul(coeffs(a_mask), coeffs(f)), coeffs(m_mask))) == 1]
    return hits


def trial_irreducible(mask):
    n = mask.bit_length() - 1
    for d in range(1, n // 2 + 1):
        for f in range(1 << d, 1 << (d + 1)):
            if mask_of(long_div_rem(coeffs(mask), coeffs(f))) == 0:
                return False
    return True


def order_of_x(mask):
    """Multiplicative order of x modulo mask by repeated multiplication (None if x is not a unit)."""
    m = coeffs(mask)
    y = [1]
    for k in range(1, 1 << (mask.bit_length())):
        y = long_div_rem(schoolbook_mul(y, [0, 1]), m)
        if y == [1]:
            return k
        if y == [0]:
            return None
    return None


def field_trace(residue_mask, mod_mask):
    """a + a^2 + ... + a^(2^(n-1)) by schoolbook squaring; returns the residue mask."""
    n = mod_mask.bit_length() - 1
    m = coeffs(mod_mask)
    a = long_div_rem(coeffs(residue_mask), m)
    acc = [0]
    for _ in range(n):
        width = max(len(acc), len(a))
        acc = trim([(acc[i] if i < len(acc) else 0) ^ (a[i] if i < len(a) else 0) for i in range(width)])
        a = long_div_rem(schoolbook_mul(a, a), m)
    return mask_of(acc)


def trace_sequence(mod_mask):
    n = mod_mask.bit_length() - 1
    m = coeffs(mod_mask)
    out = []
    e = [1]
    for _ in range((1 << n) - 1):
        out.append(field_trace(mask_of(e), mod_mask))
        e = long_div_rem(schoolbook_mul(e, [0, 1]), m)
    return out


def borrow_subtract(x, y):
    """Bit-array x - y (little-endian) for x >= y, by explicit borrow propagation."""
    out = []
    borrow = 0
    for xi, yi in zip(x, y):
        d = xi - yi - borrow
        borrow = 1 if d < 0 else 0
        out.append(d + 2 * borrow)
    assert borrow == 0
    return out


def bits_ge(x, y):
    for xi, yi in zip(reversed(x), reversed(y)):
        if xi != yi:
            return xi > yi
    return True


def arith_corr_oracle(a, b):
    """Definition-level arithmetic correlation on lists, via bit-array subtraction."""
    if bits_ge(a, b):
        d = borrow_subtract(a, b)
        return d.count(0) - d.count(1)
    d = borrow_subtract(b, a)
    return d.count(1) - d.count(0)


def count_runs_oracle(a, b, depth):
    """Literal transcription of the N(0,1;t) / N(1,0;t) definitions with indices mod N."""
    n = len(a)
    n01 = [0] * depth
    n10 = [0] * depth
    for i in range(n):
        for t in range(depth):
            if not all(a[(i + k) % n] == b[(i + k) % n] for k in range(1, t + 1)):
                break
            if a[(i + t + 1) % n] == b[(i + t + 1) % n]:
                continue
            if (a[i], b[i]) == (0, 1):
                n01[t] += 1
            elif (a[i], b[i]) == (1, 0):
                n10[t] += 1
            break
    return n01, n10


def window_counts(s, t):
    n = len(s)
    counts = {}
    for k in range(n):
        w = tuple(s[(k + j) % n] for j in range(t))
        counts[w] = counts.get(w, 0) + 1
    return {pat: counts.get(pat, 0) for pat in product((0, 1), repeat=t)}


def poly_eval_field(cs, alpha_mask, mod_mask):
    """f(alpha) in GF(2)[x]/(mod) by Horner with schoolbook arithmetic."""
    m = coeffs(mod_mask)
    acc = [0]
    for c in reversed(cs):
        acc = long_div_rem(schoolbook_mul(acc, coeffs(alpha_mask)), m)
        if c:
            acc = trim([acc[0] ^ 1] + acc[1:])
    return mask_of(acc)


def u_v_by_field_evaluation(t, g1, g2):
    """Doubled U(t), V(t) with membership decided by evaluating at the root, not by remainder."""
    n1, n2 = g1.bit_length() - 1, g2.bit_length() - 1
    q1, q2 = 1 << n1, 1 << n2
    su = sv = 0
    for cs in product((0, 1), repeat=t + 2):
        sign = -1 if (cs[0] ^ cs[-1]) else 1
        if poly_eval_field(cs, 0b10, g2) != 0:
            continue
        sv += sign
        for c0p in (0, 1):
            f1 = (c0p,) + cs[1:]
            if poly_eval_field(f1, 0b10, g1) == 0:
                su += sign
    u2 = 2 * q1 * q2 * su
    v2 = 2 * q2 * sv
    assert u2 % (1 << (t + 3)) == 0 and v2 % (1 << (t + 2)) == 0
    return u2 >> (t + 3), v2 >> (t + 2)

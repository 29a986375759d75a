"""Pure-Python kernels; reference twin of ``_ckernels.pyx``.

Bit sequences are ``bytes`` holding one 0/1 value per byte.
"""


def census(bits: bytes, t: int) -> list[int]:
    """Cyclic length-t window counts; window (s_k..s_{k+t-1}) maps to index sum s_{k+j} << (t-1-j)."""
    n = len(bits)
    counts = [0] * (1 << t)
    if n == 0:
        return counts
    mask = (1 << t) - 1
    w = 0
    for j in range(t):
        w = (w << 1) | bits[j % n]
    for k in range(n):
        counts[w] += 1
        w = ((w << 1) | bits[(k + t) % n]) & mask
    return counts


def max_zero_run(bits: bytes) -> int:
    """Longest cyclic run of zeros; equals len(bits) for the all-zero sequence."""
    n = len(bits)
    try:
        first_one = bits.index(1)
    except ValueError:
        return n
    best = run = 0
    for k in range(n):
        if bits[(first_one + 1 + k) % n]:
            run = 0
        else:
            run += 1
            if run > best:
                best = run
    return best


def run_tables(a: bytes, b: bytes, depth: int) -> tuple[list[int], list[int], int]:
    """Gap tables between successive disagreements of ``a`` and ``b``.

    For each index i with a_i != b_i, the gap t to the next disagreement
    (cyclically) is bucketed into n01[t] when (a_i, b_i) = (0, 1) and n10[t]
    when (1, 0).  Gaps with t >= depth are counted in the returned overflow.
    """
    n = len(a)
    if len(b) != n:
        raise ValueError("length mismatch")
    n01 = [0] * depth
    n10 = [0] * depth
    diff = [i for i in range(n) if a[i] != b[i]]
    overflow = 0
    m = len(diff)
    for k in range(m):
        i = diff[k]
        j = diff[k + 1] if k + 1 < m else diff[0] + n
        t = j - i - 1
        if t >= depth:
            overflow += 1
        elif a[i]:
            n10[t] += 1
        else:
            n01[t] += 1
    return n01, n10, overflow


def _mod(a: int, m: int) -> int:
    dm = m.bit_length()
    da = a.bit_length()
    while da >= dm:
        a ^= m << (da - dm)
        da = a.bit_length()
    return a


def v_sign_sum(nbits: int, g2: int) -> int:
    """Sum of (-1)^(c_0 + c_top) over all f of < nbits coefficients with g2 | f."""
    top = nbits - 1
    total = 0
    for f in range(1 << nbits):
        if _mod(f, g2) == 0:
            total += -1 if (f ^ (f >> top)) & 1 else 1
    return total


def u_sign_sum(nbits: int, g1: int, g2: int) -> int:
    """Sum of (-1)^(c_0 + c_top) over (c0', f) with g2 | f and g1 | f with its constant term replaced by c0'."""
    top = nbits - 1
    total = 0
    for f in range(1 << nbits):
        if _mod(f, g2):
            continue
        sign = -1 if (f ^ (f >> top)) & 1 else 1
        high = f & ~1
        for c0p in (0, 1):
            if _mod(high | c0p, g1) == 0:
                total += sign
    return total

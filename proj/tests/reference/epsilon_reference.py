"""Freeze 50-digit reference values of the uniform epsilon bounds.

Writes epsilon_reference.inc next to this file. Each formula is transcribed
directly with mpmath; None marks a nonpositive logarithm argument.
"""
from pathlib import Path

from mpmath import ceil, e, log, mp, pi, sqrt

mp.dps = 50


def distinct_parts(n):
    s = [1] + [0] * n
    for part in range(1, n + 1):
        for k in range(n, part - 1, -1):
            s[k] += s[k - part]
    return s


def g2(d):
    s = distinct_parts(d)
    prefix = [sum(s[: i + 1]) for i in range(d + 1)]
    return sum(prefix[a] * prefix[d - a] for a in range(d + 1))


def safe_log(x):
    return log(x) if x > 0 else None


def general2(d):
    inner = d - 2 * log(d + 1) / log(2) - log(6) / log(2)
    li = safe_log(inner)
    if li is None:
        return None
    return (li + log(log(2))) / (log(4 * d * d) + log(log(2)))


def general3(d, logq):
    inner = d - 2 * log(d + 1) / logq - log(6) / logq - 1 / (e * log(2))
    li = safe_log(inner)
    return None if li is None else li / log(4 * d * d)


def classical1(d, t):
    d = mp.mpf(d)
    tw = log(2 + log(2 * d) / log(2))
    root = 2 * pi / sqrt(3) * sqrt(d)
    if t == 1:
        inner = (1 - log(3) / log(4)) * d - (root + 3 * log(d + 1) + tw + log(4)) / log(2)
    elif t == 2:
        inner = (1 - log(4) / log(9)) * d - (root + 3 * log(d + 1) + tw + log(4)) / log(3) - 1 / (e * log(2))
    elif t == 3:
        inner = (1 - mp.mpf("0.311") * log(3) / log(2)) * d - (log(g2(int(d))) + 2 * log(3) + tw + log(2)) / log(2)
    else:
        inner = (1 - log(4) / log(27)) * d - (log(g2(int(d))) + 2 * log(d + 1) + tw + log(2)) / log(3) - 1 / (e * log(2))
    li = safe_log(inner)
    if li is None:
        return None
    if t in (1, 3):
        return (li + log(log(2))) / (log(4 * d * d) + log(log(2)))
    return li / log(4 * d * d)


def classical2(d, q):
    q = mp.mpf(q)
    log2q = log(q) / log(2)
    if d == 1:
        x = (q + 1) / (8 * log2q * (sqrt((q + 1) / 2) + sqrt((q - 1) / 2)))
        lx = safe_log(x)
        if lx is None or lx <= 0:
            return None
        return log(lx) / log(log(q * (q * q - 1)))
    c = 6 if d == 4 else 2
    m = min(d + 1, q + 1)
    unip = 1 + int(ceil(log(2 * d) / log(2)))
    lx = d * log(q) - (log(2 * c) + log(log2q) + 2 * log(m) + log(g2(d)) + log(unip) + mp.mpf(d) / 2 * log(q + 1))
    if lx <= 0:
        return None
    return log(lx) / log(4 * d * d * log(q))


GRID = [
    ("general2", 10, None, lambda: general2(10)),
    ("general2", 25, None, lambda: general2(25)),
    ("general2", 100, None, lambda: general2(100)),
    ("general3", 5, 9, lambda: general3(5, log(9))),
    ("general3", 6, 5, lambda: general3(6, log(5))),
    ("general3", 12, 4, lambda: general3(12, log(4))),
    ("general3", 40, 49, lambda: general3(40, log(49))),
    ("general3_sqrt", 7, 8, lambda: general3(7, log(8) / 2)),
    ("classical1", 1000, 1, lambda: classical1(1000, 1)),
    ("classical1", 2000, 1, lambda: classical1(2000, 1)),
    ("classical1", 300, 2, lambda: classical1(300, 2)),
    ("classical1", 95, 3, lambda: classical1(95, 3)),
    ("classical1", 150, 3, lambda: classical1(150, 3)),
    ("classical1", 55, 4, lambda: classical1(55, 4)),
    ("classical1", 80, 4, lambda: classical1(80, 4)),
    ("classical2", 1, 1000003, lambda: classical2(1, 1000003)),
    ("classical2", 1, 16777216, lambda: classical2(1, 16777216)),
    ("classical2", 3, 1048576, lambda: classical2(3, 1048576)),
    ("classical2", 4, 4096, lambda: classical2(4, 4096)),
    ("classical2", 10, 251, lambda: classical2(10, 251)),
]


def main():
    lines = ["// Generated by epsilon_reference.py; mpmath at 50 digits."]
    for name, a, b, f in GRID:
        v = f()
        text = "std::nullopt" if v is None else mp.nstr(v, 30)
        lines.append(f'{{"{name}", {a}, {0 if b is None else b}, {text}}},')
    Path(__file__).with_name("epsilon_reference.inc").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()

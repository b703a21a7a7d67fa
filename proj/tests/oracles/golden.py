"""Independent reference values frozen into the C++ tests.

Run: python3 tests/oracles/golden.py
"""
import math


def standard_step(x, y, k, n):
    nx = (x + y) % n
    s = k * math.sin(2.0 * math.pi * nx / n)
    off = math.floor(abs(s) + 0.5) * (1 if s >= 0 else -1)  # half away from zero
    return nx, (y + off) % n


def baker_step(x, y, strips, n):
    start = 0
    for k in strips:
        if x < start + k:
            st = n // k
            return st * (x - start) + y % st, (y - y % st) // st + start
        start += k
    raise ValueError


def table(step, n, *key):
    fwd = [0] * (n * n)
    for y in range(n):
        for x in range(n):
            nx, ny = step(x, y, *key, n)
            fwd[y * n + x] = ny * n + nx
    return fwd


def fnv1a(values):
    h = 0xcbf29ce484222325
    for v in values:
        for b in v.to_bytes(4, "little"):
            h ^= b
            h = (h * 0x100000001b3) % 2**64
    return h


def logistic(a):
    p = a * (2**64 - a) >> 62
    return min(p, 2**64 - 1)


def brute(p0, q0n, n, L, pow_):
    out = []
    for q in range(L):
        step = q * q % L if pow_ else q
        if (p0 + n * step) % L == q0n:
            out.append(q)
    return out


if __name__ == "__main__":
    print("standard (0,64) k=100 N=256:", standard_step(0, 64, 100, 256))
    print("baker [2,2] N=4 table:", table(baker_step, 4, [2, 2]))
    for n, k in [(16, 12), (256, 1), (256, 100), (256, 5000), (256, 50000)]:
        t = table(standard_step, n, k)
        assert sorted(t) == list(range(n * n))
        print(f"standard N={n} k={k} fnv1a=0x{fnv1a(t):016x}")
    print("attack add:", brute(10, 38, 4, 256, False))
    print("attack pow:", brute(10, 19, 1, 256, True))
    print("attack pow L=2:", brute(0, 0, 1, 2, True))
    print("logistic(0.5) = 0x%016x" % logistic(2**63))
    x = 0x123456789ABCDEF1
    for _ in range(100):
        x = logistic(x)
    print("logistic^100(0x123456789ABCDEF1) = 0x%016x" % x)

# Regenerates the frozen high-precision values used by the double-scaling tests.
#   python3 double_scaling_oracle.py
# E(N, mu) = -1/2 * sum_{p odd, 1..2N-1} log(1 - p*t/(2N)),  t = 1 - mu/(2N)
from mpmath import mp, mpf, log, fsum

mp.dps = 45


def energy(n, mu):
    n = mpf(n)
    mu = mpf(mu)
    t = 1 - mu / (2 * n)
    two_n = 2 * n
    return -fsum(log(1 - (2 * k + 1) * t / two_n) for k in range(int(n))) / 2


def genus_zero(n, mu):
    n = mpf(n)
    mu = mpf(mu)
    t = 1 - mu / (2 * n)
    return n / 2 * (1 + (1 - t) / t * log(1 - t))


if __name__ == "__main__":
    for n in (10**3, 10**4, 10**5, 10**6):
        e = energy(n, 10)
        r = e - genus_zero(n, 10)
        print(f"({n}, \"{mp.nstr(e, 40)}\", \"{mp.nstr(r, 30)}\"),")

# Straight transcription of the SP 800-22 formulas on top of scipy, used to
# freeze expected p-values for the battery unit tests.
import math
import numpy as np
from scipy.special import erfc, gammaincc
from scipy.stats import norm

EPS100 = ("11001001000011111101101010100010001000010110100011"
          "00001000110100110001001100011001100010100010111000")
LR128 = ("11001100000101010110110001001100111000000000001001"
         "00110101010001000100111101011010000000110101111100"
         "1100111001101101100010110010")


def bits(s):
    return [int(c) for c in s]


def monobit(e):
    n = len(e)
    s = abs(sum(2 * b - 1 for b in e)) / math.sqrt(n)
    return erfc(s / math.sqrt(2))


def block_frequency(e, m):
    n = len(e)
    nb = n // m
    chi = 4 * m * sum((sum(e[i * m:(i + 1) * m]) / m - 0.5) ** 2 for i in range(nb))
    return gammaincc(nb / 2, chi / 2)


def runs(e):
    n = len(e)
    pi = sum(e) / n
    if abs(pi - 0.5) >= 2 / math.sqrt(n):
        return 0.0
    v = 1 + sum(1 for k in range(n - 1) if e[k] != e[k + 1])
    return erfc(abs(v - 2 * n * pi * (1 - pi)) / (2 * math.sqrt(2 * n) * pi * (1 - pi)))


def longest_run(e):
    n = len(e)
    if n < 6272:
        m, k, lo, pis = 8, 3, 1, [0.21484375, 0.3671875, 0.23046875, 0.1875]
    elif n < 750000:
        m, k, lo, pis = 128, 5, 4, [0.1174035788, 0.242955959, 0.249363483,
                                    0.17517706, 0.102701071, 0.112398847]
    else:
        m, k, lo, pis = 10000, 6, 10, [0.0882, 0.2092, 0.2483, 0.1933, 0.1208, 0.0675, 0.0727]
    nb = n // m
    counts = [0] * (k + 1)
    for i in range(nb):
        run = best = 0
        for b in e[i * m:(i + 1) * m]:
            run = run + 1 if b else 0
            best = max(best, run)
        idx = min(max(best - lo, 0), k)
        counts[idx] += 1
    chi = sum((counts[i] - nb * pis[i]) ** 2 / (nb * pis[i]) for i in range(k + 1))
    return chi, gammaincc(k / 2, chi / 2)


def spectral(e):
    n = len(e)
    x = np.array([2 * b - 1 for b in e], dtype=float)
    mags = np.abs(np.fft.fft(x))[: n // 2]
    t = math.sqrt(math.log(1 / 0.05) * n)
    n0 = 0.95 * n / 2
    n1 = int(np.sum(mags < t))
    d = (n1 - n0) / math.sqrt(n * 0.95 * 0.05 / 4)
    return erfc(abs(d) / math.sqrt(2))


def cusum(e, backward=False):
    n = len(e)
    xs = [2 * b - 1 for b in e]
    if backward:
        xs = xs[::-1]
    s = 0
    z = 0
    for v in xs:
        s += v
        z = max(z, abs(s))
    sq = math.sqrt(n)
    s1 = 0.0
    for k in range(int((-n / z + 1) / 4), int((n / z - 1) / 4) + 1):
        s1 += norm.cdf((4 * k + 1) * z / sq) - norm.cdf((4 * k - 1) * z / sq)
    s2 = 0.0
    for k in range(int((-n / z - 3) / 4), int((n / z - 1) / 4) + 1):
        s2 += norm.cdf((4 * k + 3) * z / sq) - norm.cdf((4 * k + 1) * z / sq)
    return 1 - s1 + s2


def psi_sq(e, m):
    if m <= 0:
        return 0.0
    n = len(e)
    ext = e + e[: m - 1]
    counts = {}
    for i in range(n):
        key = tuple(ext[i:i + m])
        counts[key] = counts.get(key, 0) + 1
    return (2 ** m / n) * sum(c * c for c in counts.values()) - n


def serial(e, m):
    p0, p1, p2 = psi_sq(e, m), psi_sq(e, m - 1), psi_sq(e, m - 2)
    d1 = p0 - p1
    d2 = p0 - 2 * p1 + p2
    return gammaincc(2 ** (m - 2), d1 / 2), gammaincc(2 ** (m - 3), d2 / 2)


def phi(e, m):
    if m == 0:
        return 0.0
    n = len(e)
    ext = e + e[: m - 1]
    counts = {}
    for i in range(n):
        key = tuple(ext[i:i + m])
        counts[key] = counts.get(key, 0) + 1
    return sum((c / n) * math.log(c / n) for c in counts.values())


def apen(e, m):
    n = len(e)
    ap = phi(e, m) - phi(e, m + 1)
    chi = 2 * n * (math.log(2) - ap)
    return gammaincc(2 ** (m - 1), chi / 2)


def uniformity(ps):
    s = len(ps)
    f = [0] * 10
    for p in ps:
        f[min(int(p * 10), 9)] += 1
    chi = sum((fi - s / 10) ** 2 / (s / 10) for fi in f)
    return chi, gammaincc(4.5, chi / 2)


if __name__ == "__main__":
    print("monobit 1011010101", monobit(bits("1011010101")))
    print("monobit eps100", monobit(bits(EPS100)))
    print("block 0110011010 M=3", block_frequency(bits("0110011010"), 3))
    print("block eps100 M=10", block_frequency(bits(EPS100), 10))
    print("runs 1001101011", runs(bits("1001101011")))
    print("runs eps100", runs(bits(EPS100)))
    print("longest lr128", longest_run(bits(LR128)))
    print("spectral 1001010011", spectral(bits("1001010011")))
    print("spectral eps100", spectral(bits(EPS100)))
    print("cusum 1011010111 fwd", cusum(bits("1011010111")))
    print("cusum eps100 fwd/bwd", cusum(bits(EPS100)), cusum(bits(EPS100), True))
    print("serial 0011011101 m=3", serial(bits("0011011101"), 3))
    print("serial eps100 m=2", serial(bits(EPS100), 2))
    print("apen 0100110101 m=3", apen(bits("0100110101"), 3))
    print("apen eps100 m=2", apen(bits(EPS100), 2))
    print("uniformity one bin x100", uniformity([0.05] * 100))
    print("uniformity 0.01..0.99 step .1", uniformity([0.01 + 0.1 * (i % 10) for i in range(100)]))

#!/usr/bin/env python3
"""Independent exact oracle for the identity catalog.

Recomputes every catalog entry over the default sweep grid with Python
Fractions: products are expanded term by term through the basis table
(1, i, eps, i eps) rather than a closed multiplication formula. Compares
verdict, grid size, skipped count and counterexamples with a report JSON
written by `dckpell sweep --no-timing --out <file>`.

usage: identity_oracle.py REPORT.json
"""
import json
import sys
from fractions import Fraction as Fr

KS = [1, 2, 3, 4]
NS = range(0, 33)
MS = range(0, 33)
RS = range(1, 9)
MAX_CEX = 5

# basis product table: (sign, index) or None for zero; indices 0=1, 1=i, 2=eps, 3=i eps
TABLE = {
    (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
    (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
    (2, 0): (1, 2), (2, 1): (1, 3), (2, 2): None, (2, 3): None,
    (3, 0): (1, 3), (3, 1): (-1, 2), (3, 2): None, (3, 3): None,
}


def mul(a, b):
    out = [Fr(0)] * 4
    for x in range(4):
        for y in range(4):
            e = TABLE[(x, y)]
            if e is not None:
                out[e[1]] += e[0] * a[x] * b[y]
    return tuple(out)


def add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def sc(l, a):
    return tuple(Fr(l) * x for x in a)


def dc(a=0, b=0, c=0, d=0):
    return (Fr(a), Fr(b), Fr(c), Fr(d))


I, EPS, IEPS = dc(0, 1), dc(0, 0, 1), dc(0, 0, 0, 1)


class Seq:
    def __init__(self, k):
        self.k = Fr(k)
        self.cache = {0: Fr(0), 1: Fr(1)}

    def p(self, n):
        if n in self.cache:
            return self.cache[n]
        if n > 1:
            v = 2 * self.p(n - 1) + self.k * self.p(n - 2)
        else:
            v = (self.p(n + 2) - 2 * self.p(n + 1)) / self.k
        self.cache[n] = v
        return v

    def pl(self, n):
        return 2 * (self.p(n + 1) - self.p(n))

    def mp(self, n):
        return self.p(n + 1) - self.p(n)

    def q(self, n, f=None):
        f = f or self.p
        return tuple(f(n + j) for j in range(4))


def cdiv(a, b):  # complex division on (re, im) pairs
    den = b[0] * b[0] + b[1] * b[1]
    return ((a[0] * b[0] + a[1] * b[1]) / den, (a[1] * b[0] - a[0] * b[1]) / den)


def cmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def conj(kind, w):
    x1, x2, y1, y2 = w
    if kind == 1:
        return (x1, -x2, y1, -y2)
    if kind == 2:
        return (x1, x2, -y1, -y2)
    if kind == 3:
        return (x1, -x2, -y1, y2)
    if kind == 4:
        z1c = (x1, -x2)
        e = cmul(z1c, cdiv((y1, y2), (x1, x2)))
        return (x1, -x2, -e[0], -e[1])
    return (y1, y2, -x1, -x2)


def dcdiv(a, b):
    # find q with q*b = a: q = z1/z3 + eps (z2 z3 - z1 z4)/z3^2
    z1, z2, z3, z4 = (a[0], a[1]), (a[2], a[3]), (b[0], b[1]), (b[2], b[3])
    q1 = cdiv(z1, z3)
    num = cmul(z2, z3)
    t = cmul(z1, z4)
    q2 = cdiv((num[0] - t[0], num[1] - t[1]), cmul(z3, z3))
    return (q1[0], q1[1], q2[0], q2[1])


def gamma(k):
    k = Fr(k)
    return dc(1 + k, 2, 2 * k * k + 6 * k + 4, 4 * k + 8)


def sk(k, n):  # (-1)^n k^n
    return Fr(-1) ** n * Fr(k) ** n


PARAMS = {}


def ident(tag, params, pre=None):
    def deco(fn):
        PARAMS[tag] = (params, pre, fn)
        return fn
    return deco


N_ONLY = "n"
NM = "nm"
NR = "nr"


@ident("f12s", N_ONLY)
def _(s, k, n, m, r):
    p = s.p; w = s.q(n)
    return mul(w, conj(1, w)), dc(p(n) ** 2 + p(n + 1) ** 2, 0, 2 * p(2 * n + 3))


@ident("f12raw", N_ONLY)
def _(s, k, n, m, r):
    p = s.p; w = s.q(n)
    return mul(w, conj(1, w)), dc(p(n) ** 2 + p(n + 1) ** 2, 0, 2 * (p(n) * p(n + 2) + p(n + 1) * p(n + 3)))


@ident("f13", N_ONLY)
def _(s, k, n, m, r):
    p = s.p; w = s.q(n)
    return mul(w, conj(2, w)), dc(p(n) ** 2 - p(n + 1) ** 2, 2 * p(n) * p(n + 1))


@ident("f14", N_ONLY)
def _(s, k, n, m, r):
    p = s.p; w = s.q(n)
    return mul(w, conj(3, w)), dc(p(n) ** 2 + p(n + 1) ** 2, 0, 0, -4 * sk(k, n))


@ident("f14kernel", N_ONLY)
def _(s, k, n, m, r):
    p = s.p
    return dc(p(n) * p(n + 3) - p(n + 1) * p(n + 2)), dc(-2 * sk(k, n))


@ident("f15", N_ONLY)
def _(s, k, n, m, r):
    p = s.p; w = s.q(n)
    return mul(w, conj(4, w)), dc(p(n) ** 2 + p(n + 1) ** 2)


@ident("f16", N_ONLY)
def _(s, k, n, m, r):
    p = s.p; w = s.q(n)
    return add(w, conj(1, w)), dc(2 * p(n), 0, 2 * p(n + 2))


@ident("f17", N_ONLY)
def _(s, k, n, m, r):
    p = s.p; w = s.q(n)
    return add(w, conj(2, w)), dc(2 * p(n), 2 * p(n + 1))


@ident("f18", N_ONLY)
def _(s, k, n, m, r):
    p = s.p; w = s.q(n)
    return add(w, conj(3, w)), dc(2 * p(n), 0, 0, 2 * p(n + 3))


@ident("f19", N_ONLY)
def _(s, k, n, m, r):
    p = s.p; w = s.q(n)
    return mul(dc(p(n), p(n + 1)), conj(4, w)), mul(dc(p(n), -p(n + 1)), conj(2, w))


@ident("f19s", N_ONLY)
def _(s, k, n, m, r):
    p = s.p; w = s.q(n)
    return mul(dc(p(n), -p(n + 1)), conj(2, w)), dc(p(n) ** 2 + p(n + 1) ** 2, 0, -p(2 * n + 3), 2 * sk(k, n))


@ident("f20", N_ONLY)
def _(s, k, n, m, r):
    p = s.p; w = s.q(n)
    return add(mul(EPS, w), conj(5, w)), dc(p(n + 2), p(n + 3))


@ident("f21", N_ONLY)
def _(s, k, n, m, r):
    p = s.p; w = s.q(n)
    return sub(w, mul(EPS, conj(5, w))), dc(p(n), p(n + 1))


@ident("f22s", N_ONLY)
def _(s, k, n, m, r):
    return PARAMS["f12s"][2](s, k, n, m, r)


@ident("f23", N_ONLY)
def _(s, k, n, m, r):
    return PARAMS["f13"][2](s, k, n, m, r)


@ident("f24", N_ONLY)
def _(s, k, n, m, r):
    return PARAMS["f14"][2](s, k, n, m, r)


@ident("f25", N_ONLY)
def _(s, k, n, m, r):
    return PARAMS["f15"][2](s, k, n, m, r)


@ident("f26", N_ONLY)
def _(s, k, n, m, r):
    return s.q(n + 2), add(sc(2, s.q(n + 1)), sc(k, s.q(n)))


@ident("f27", N_ONLY)
def _(s, k, n, m, r):
    return s.q(n + 2, s.pl), add(sc(2, s.q(n + 1, s.pl)), sc(k, s.q(n, s.pl)))


@ident("f28", N_ONLY)
def _(s, k, n, m, r):
    return s.q(n, s.mp), add(s.q(n), sc(k, s.q(n - 1)))


@ident("f29", N_ONLY)
def _(s, k, n, m, r):
    return s.q(n, s.mp), sub(s.q(n + 1), s.q(n))


@ident("f30", N_ONLY)
def _(s, k, n, m, r):
    return s.q(n, s.pl), sc(2, sub(s.q(n + 1), s.q(n)))


@ident("f31", N_ONLY)
def _(s, k, n, m, r):
    return s.q(n + 1, s.pl), sc(2, add(s.q(n + 1), s.q(n)))


@ident("g9", N_ONLY)
def _(s, k, n, m, r):
    return add(sc(2, s.q(n + 1)), sc(k, s.q(n))), s.q(n + 2)


@ident("g10", N_ONLY)
def _(s, k, n, m, r):
    p, q = s.p, s.q
    return (add(mul(q(n + 1), q(n + 1)), sc(k, mul(q(n), q(n)))),
            add(q(2 * n + 1), dc(-p(2 * n + 3), p(2 * n + 2), p(2 * n + 3) - 2 * p(2 * n + 5), 3 * p(2 * n + 4))))


@ident("g11", N_ONLY)
def _(s, k, n, m, r):
    p, q = s.p, s.q
    return (sub(mul(q(n + 1), q(n + 1)), sc(Fr(k) ** 2, mul(q(n - 1), q(n - 1)))),
            sub(sc(2, q(2 * n)), sc(2, dc(p(2 * n + 2), -p(2 * n + 1), p(2 * n + 4), -3 * p(2 * n + 3)))))


@ident("g12", N_ONLY)
def _(s, k, n, m, r):
    p, q = s.p, s.q
    lhs = sub(sub(sub(q(n), mul(I, conj(3, q(n + 1)))), mul(EPS, q(n + 2))), mul(IEPS, q(n + 3)))
    return lhs, dc(p(n) - p(n + 2), 0, 2 * p(n + 4))


@ident("g13", NM, lambda n, m, r: n >= 0 and m >= 0)
def _(s, k, n, m, r):
    p, q = s.p, s.q
    return (add(sc(k, mul(q(n - 1), q(m))), mul(q(n), q(m + 1))),
            add(q(n + m), dc(-p(n + m + 2), p(n + m + 1), p(n + m + 2) - 2 * p(n + m + 4), 3 * p(n + m + 3))))


@ident("g14", N_ONLY, lambda n, m, r: n >= 0)
def _(s, k, n, m, r):
    q = s.q
    total = dc()
    for j in range(n + 1):
        total = add(total, q(j))
    return total, sc(Fr(1) / (k + 1), add(sub(add(q(n + 1), sc(k, q(n))), q(1)), q(0)))


@ident("g17", NM, lambda n, m, r: n >= 0 and m >= 0)
def _(s, k, n, m, r):
    q = s.q
    return sub(mul(q(m), q(n + 1)), mul(q(m + 1), q(n))), sc(sk(k, n) * s.p(m - n), gamma(k))


@ident("g18", N_ONLY, lambda n, m, r: n >= 1)
def _(s, k, n, m, r):
    q = s.q
    return sub(mul(q(n - 1), q(n + 1)), mul(q(n), q(n))), sc(Fr(-1) ** n * Fr(k) ** (n - 1), gamma(k))


@ident("g19stated", NR, lambda n, m, r: 1 <= r <= n)
def _(s, k, n, m, r):
    q = s.q
    return sub(mul(q(n), q(n)), mul(q(n + r), q(n - r))), sc(Fr(-k) ** (n - r + 1) * s.p(r) ** 2, gamma(k))


@ident("g19proof", NR, lambda n, m, r: 1 <= r <= n)
def _(s, k, n, m, r):
    q = s.q
    return (sub(mul(q(n - r), q(n + r)), mul(q(n), q(n))),
            sc(Fr(-1) ** (n - r + 1) * Fr(k) ** (n - r) * s.p(r) ** 2, gamma(k)))


@ident("helperhonsberger", NM)
def _(s, k, n, m, r):
    p = s.p
    return dc(k * p(n - 1) * p(m) + p(n) * p(m + 1)), dc(p(n + m))


@ident("helperdocagne", NM)
def _(s, k, n, m, r):
    p = s.p
    return dc(p(m) * p(n + 1) - p(m + 1) * p(n)), dc(sk(k, n) * p(m - n))


@ident("helpercassini", N_ONLY)
def _(s, k, n, m, r):
    p = s.p
    return dc(p(n - 1) * p(n + 1) - p(n) ** 2), dc(Fr(-1) ** n * Fr(k) ** (n - 1))


@ident("ringaxioms", N_ONLY)
def _(s, k, n, m, r):
    return None  # seeded random values live in the C++ engine; only the grid is checked


@ident("divroundtrip", NM)
def _(s, k, n, m, r):
    return mul(dcdiv(s.q(n), s.q(m)), s.q(m)), s.q(n)


@ident("binetnumber", N_ONLY, lambda n, m, r: n >= 0)
def _(s, k, n, m, r):
    return None  # checked against the recurrence in the C++ suites


@ident("binetquaternion", N_ONLY, lambda n, m, r: n >= 0)
def _(s, k, n, m, r):
    return None


@ident("prefixsum", N_ONLY, lambda n, m, r: n >= 0)
def _(s, k, n, m, r):
    p = s.p
    return dc(sum((p(j) for j in range(n + 1)), Fr(0))), dc((p(n + 1) + k * p(n) - 1) / (k + 1))


def fmt(x):
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def to_obj(w):
    return {"one": fmt(w[0]), "i": fmt(w[1]), "eps": fmt(w[2]), "ieps": fmt(w[3])}


def oracle_report(tag):
    params, pre, fn = PARAMS[tag]
    grid = skipped = 0
    failures = []
    k1_fail = False
    for k in KS:
        s = Seq(k)
        for n in NS:
            for m in (MS if "m" in params else [None]):
                for r in (RS if "r" in params else [None]):
                    if pre and not pre(n, m, r):
                        skipped += 1
                        continue
                    grid += 1
                    sides = fn(s, Fr(k), n, m, r)
                    if sides is None or sides[0] == sides[1]:
                        continue
                    k1_fail = k1_fail or k == 1
                    failures.append({"k": str(k), "n": n, "m": m, "r": r,
                                     "lhs": to_obj(sides[0]), "rhs": to_obj(sides[1])})
    if not failures:
        verdict = "holds"
    elif not k1_fail:
        verdict = "holds_only_k1"
    else:
        verdict = "fails"
    return {"identity": tag, "grid_size": grid, "skipped": skipped, "verdict": verdict,
            "failures": len(failures), "counterexamples": failures[:MAX_CEX]}


def main():
    with open(sys.argv[1]) as f:
        report = json.load(f)
    by_tag = {entry["identity"]: entry for entry in report}
    bad = 0
    for tag in PARAMS:
        expected = oracle_report(tag)
        got = by_tag.get(tag)
        if got is None:
            print(f"MISSING {tag}")
            bad += 1
            continue
        for key in ("grid_size", "skipped", "verdict", "failures", "counterexamples"):
            if got[key] != expected[key]:
                print(f"MISMATCH {tag} {key}: report={got[key]!r} oracle={expected[key]!r}")
                bad += 1
        print(f"{tag} {expected['verdict']} {expected['grid_size']} {expected['skipped']}")
    if set(by_tag) != set(PARAMS):
        print(f"catalog mismatch: {sorted(set(by_tag) ^ set(PARAMS))}")
        bad += 1
    print("oracle agrees" if bad == 0 else f"{bad} disagreements")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())

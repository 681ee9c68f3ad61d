#!/usr/bin/env python3
"""Screens unknown fingerprint classes from an enumeration dump for being
connected sums. Jones is multiplicative under connected sum and every factor
of a <=13-crossing composite has at most 10 crossings, so testing quotients
against the reference table is exact (recursion handles sums of up to four
factors)."""

import re
import sys
from functools import lru_cache


def parse_poly(text):
    out = {}
    if text == "0":
        return out
    for m in re.finditer(r"([+-]?\d+)\*t\^(-?\d+)", text):
        out[int(m.group(2))] = out.get(int(m.group(2)), 0) + int(m.group(1))
    return {e: c for e, c in out.items() if c}


def mul(p, q):
    out = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def mirror(p):
    return {-e: c for e, c in p.items()}


def key(p):
    if not p:
        return (0,)
    lo, hi = min(p), max(p)
    return (lo, hi, tuple(p.get(e, 0) for e in range(lo, hi + 1)))


def fold(p):
    m = mirror(p)
    return p if key(p) <= key(m) else m


def divides(product, factor):
    """Exact Laurent division product/factor, or None."""
    if not product or not factor:
        return None
    p = dict(product)
    fh = max(factor)
    fl = factor[fh]
    out = {}
    guard = 0
    while p:
        guard += 1
        if guard > 200:
            return None
        ph = max(p)
        c = p[ph]
        if c % fl:
            return None
        q = c // fl
        e = ph - fh
        out[e] = q
        for fe, fc in factor.items():
            k = fe + e
            p[k] = p.get(k, 0) - fc * q
            if not p[k]:
                del p[k]
    return out


def load_table(path):
    rows = []
    for line in open(path):
        if line.startswith("#") or not line.strip():
            continue
        name, jones, alex, det = line.strip().split(",")
        if name == "0_1":
            continue
        rows.append((name, parse_poly(jones), int(det)))
    return rows


TABLE = None


def factor_names(target, dets_left, depth=4):
    """Factorization of the (unfolded) Jones `target` into table Jones
    polynomials (up to mirrors); returns names or None."""
    span = max(target) - min(target) if target else 0
    if span == 0:
        return [] if target == {0: 1} else None
    if depth == 0:
        return None
    for name, vj, det in TABLE:
        if dets_left % det:
            continue
        for vf in (vj, mirror(vj)):
            q = divides(target, vf)
            if q is None:
                continue
            if q == {0: 1} and dets_left == det:
                return [name]
            rest = factor_names(q, dets_left // det, depth - 1)
            if rest is not None:
                return [name] + rest
    return None


def main():
    global TABLE
    TABLE = load_table(sys.argv[2])
    text = open(sys.argv[1]).read()
    groups = re.split(r"== group ", text)[1:]
    for gi, g in enumerate(groups):
        unknowns = re.findall(
            r"unknown: span=(\d+) det=(\d+) alex=(\S+)\n\s+jones=(\S+)\n\s+pd=(\S+)", g)
        printed = False
        for span, det, alex, jones, pd in unknowns:
            target = parse_poly(jones)
            fac = factor_names(target, int(det))
            if fac is None or len(fac) < 2:
                if not printed:
                    print("group %d:" % gi)
                    printed = True
                print("  PRIME span=%s det=%s alex=%s" % (span, det, alex))
            elif "-v" in sys.argv:
                print("  composite %s = %s" % (det, "#".join(fac)))


if __name__ == "__main__":
    main()

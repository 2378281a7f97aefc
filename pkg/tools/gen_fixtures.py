"""Offline fixture generation.

Computes the degree-reverse-lexicographic Groebner basis of each benchmark
system and writes the leading exponent vectors in the text monomial format.

Two backends:

* ``sympy`` (default): over prime fields; leading monomials agree with the
  rational computation for all but finitely many primes, and two primes are
  cross-checked.
* ``singular``: runs a Singular executable (``$SINGULAR``, e.g. the binary
  bundled in the passagemath-singular wheel) over the rationals, ordering dp.

Usage: python tools/gen_fixtures.py NAME [--singular] [PRIME ...]
"""

import os
import subprocess
import sys
import time

import sympy as sp


def cyclic(n):
    xs = sp.symbols(f"x1:{n + 1}")
    eqs = []
    for k in range(1, n):
        eqs.append(sum(sp.Mul(*(xs[(i + j) % n] for j in range(k))) for i in range(n)))
    eqs.append(sp.Mul(*xs) - 1)
    return eqs, xs


def reimer5():
    # alternating signs (the classical Reimer system); with +2*x3^k the
    # Groebner basis has 36 leading monomials instead of the tabulated 38
    xs = sp.symbols("x1:6")
    eqs = []
    for k in range(2, 7):
        eqs.append(1 - 2 * xs[0] ** k + 2 * xs[1] ** k - 2 * xs[2] ** k
                   + 2 * xs[3] ** k - 2 * xs[4] ** k)
    return eqs, xs


def katsura7():
    x1, x2, x3, x4, x5, x6, x7 = xs = sp.symbols("x1:8")
    eqs = [
        x1**2 - x1 + 2*x2**2 + 2*x3**2 + 2*x4**2 + 2*x5**2 + 2*x6**2 + 2*x7**2,
        2*x2*x1 + 2*x2*x3 + 2*x3*x4 + 2*x4*x5 + 2*x5*x6 + 2*x6*x7 - x2,
        2*x3*x1 + 2*x2*x4 + 2*x3*x5 + 2*x4*x6 + 2*x5*x7 + x2**2 - x3,
        2*x4*x1 + 2*x2*x5 + 2*x3*x6 + 2*x4*x7 + 2*x2*x3 - x4,
        2*x5*x1 + 2*x2*x6 + 2*x3*x7 + 2*x2*x4 + x3**2 - x5,
        2*x6*x1 + 2*x2*x7 + 2*x2*x5 + 2*x3*x4 - x6,
        x1 + 2*x2 + 2*x3 + 2*x4 + 2*x5 + 2*x6 + 2*x7 - 1,
    ]
    return eqs, xs


def square_zero(n):
    # a11 > a12 > ... > a1n > a21 > ... > ann
    xs = sp.symbols(" ".join(f"a{i}{j}" for i in range(1, n + 1) for j in range(1, n + 1)))
    A = sp.Matrix(n, n, xs)
    return [e for e in (A * A) if e != 0], xs


SYSTEMS = {
    "cyc4": lambda: cyclic(4),
    "cyc5": lambda: cyclic(5),
    "cyc6": lambda: cyclic(6),
    "reimer5": reimer5,
    "katsura7": katsura7,
    "sq3": lambda: square_zero(3),
    "sq4": lambda: square_zero(4),
}

DESCRIPTIONS = {
    "cyc4": "cyclic 4-roots",
    "cyc5": "cyclic 5-roots",
    "cyc6": "cyclic 6-roots",
    "reimer5": "Reimer system in 5 variables, 1 - 2x1^k + 2x2^k - 2x3^k + 2x4^k - 2x5^k, k = 2..6",
    "katsura7": "Katsura system in 7 variables",
    "sq3": "A^2 = 0 for a generic 3x3 matrix, a11 > a12 > ... > a33",
    "sq4": "A^2 = 0 for a generic 4x4 matrix, a11 > a12 > ... > a44",
}


def leading_exponents(name, prime, method):
    eqs, xs = SYSTEMS[name]()
    t0 = time.time()
    G = sp.groebner(eqs, *xs, order="grevlex", modulus=prime, method=method)
    lms = sorted({sp.Poly(g, *xs).monoms(order="grevlex")[0] for g in G.exprs}, reverse=True)
    return [list(m) for m in lms], len(xs), time.time() - t0


def singular_leading_exponents(name):
    eqs, xs = SYSTEMS[name]()
    names = ",".join(str(x) for x in xs)
    polys = ",".join(str(sp.expand(e)).replace("**", "^") for e in eqs)
    script = (f"ring r=0,({names}),dp; ideal i={polys}; option(redSB); ideal g=std(i);"
              " int k; for(k=1;k<=size(g);k++){string(leadexp(g[k]));} quit;")
    t0 = time.time()
    out = subprocess.run([os.environ.get("SINGULAR", "Singular"), "-q"], input=script,
                         capture_output=True, text=True, check=True).stdout
    lms = []
    for line in out.splitlines():
        line = line.strip()
        if line:
            lms.append([int(t) for t in line.replace(",", " ").split()])
    lms = sorted(set(map(tuple, lms)), reverse=True)
    return [list(m) for m in lms], len(xs), time.time() - t0


def main_singular(name):
    lms, n, dt = singular_leading_exponents(name)
    print(f"# {name} Singular: m={len(lms)} n={n} d={max(map(sum, lms))} in {dt:.1f}s",
          file=sys.stderr)
    print(f"# {name}: {DESCRIPTIONS[name]}")
    print("# leading monomials of the degree-reverse-lexicographic Groebner basis,")
    print("# variables x1 > x2 > ... > xn, computed with Singular (std, ordering dp)")
    print("# over the rationals")
    print(f"vars {n}")
    for m in lms:
        print(" ".join(map(str, m)))


def main():
    name = sys.argv[1]
    if "--singular" in sys.argv[2:]:
        return main_singular(name)
    primes = [int(p) for p in sys.argv[2:]] or [32003, 2147483647]
    method = "f5b"
    results = []
    for p in primes:
        lms, n, dt = leading_exponents(name, p, method)
        print(f"# {name} p={p}: m={len(lms)} n={n} d={max(map(sum, lms))} in {dt:.1f}s",
              file=sys.stderr)
        results.append(lms)
    if any(r != results[0] for r in results):
        sys.exit(f"{name}: leading monomials differ between primes {primes}")
    lms = results[0]
    print(f"# {name}: {DESCRIPTIONS[name]}")
    print("# leading monomials of the degree-reverse-lexicographic Groebner basis,")
    print(f"# variables x1 > x2 > ... > xn, computed with sympy {sp.__version__} ({method})")
    print(f"# over GF(p) for p in {primes} (identical leading monomials)")
    print(f"vars {n}")
    for m in lms:
        print(" ".join(map(str, m)))


if __name__ == "__main__":
    main()

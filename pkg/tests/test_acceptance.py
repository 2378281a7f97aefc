"""End-to-end acceptance checks, one test per criterion.

Each test appends a PASS/FAIL line that is echoed in the terminal summary.
"""

import random
import time

import pytest

from involutive.bench import run_bench
from involutive.completion import (
    Completion,
    CompletionResult,
    CompletionStats,
    InvolutiveSet,
    complete,
    find_involutive_divisor_naive,
    is_involutive,
    is_involutively_autoreduced,
    update_separations,
)
from involutive.division import (
    DivisionKind,
    axiom_check,
    cumulated_multiples,
    janet_table,
    separation,
    separation_table,
)
from involutive.fixtures import load
from involutive.hilbert import brute_force_hf_series, hilbert_data, poly_eval
from involutive.monomial import MonomialSet, Ordering, autoreduce, divides, multiply
from involutive.sampling import random_instance, random_monomial
from oracles import check_cover, naive_minimum

K = DivisionKind
ALL = list(K)

PUBLISHED_LENGTHS = {
    "cyc4": {K.JANET: 7, K.THOMAS: 98, K.DIV1: 98, K.DIV2: 25, K.IND_LEX: 41,
             K.IND_DEGREVLEX: 9, K.IND_DEGLEX: 7},
    "cyc5": {K.JANET: 23, K.THOMAS: 1010, K.POMMARET: 23, K.DIV1: 1010, K.DIV2: 93,
             K.IND_LEX: 154, K.IND_DEGREVLEX: 135, K.IND_DEGLEX: 106},
    "cyc6": {K.JANET: 46, K.POMMARET: 46, K.DIV2: 201, K.IND_LEX: 385, K.IND_DEGREVLEX: 841,
             K.IND_DEGLEX: 972},
    "reimer5": {K.JANET: 55, K.THOMAS: 4392, K.POMMARET: 55, K.DIV2: 151, K.IND_LEX: 242,
                K.IND_DEGREVLEX: 894, K.IND_DEGLEX: 594},
    "katsura7": {K.JANET: 43, K.POMMARET: 43, K.DIV2: 201, K.IND_LEX: 201,
                 K.IND_DEGREVLEX: 1337, K.IND_DEGLEX: 1346},
    "sq3": {K.JANET: 56, K.DIV2: 612, K.IND_LEX: 531, K.IND_DEGREVLEX: 1711,
            K.IND_DEGLEX: 1479},
    "sq4": {K.JANET: 1324},
}


def _verdict(ok):
    return "PASS" if ok else "FAIL"


def _zero_dimensional(n, U):
    top = max(max(u) for u in U) + 1
    return U + [tuple(top if j == i else 0 for j in range(n)) for i in range(n)]


@pytest.fixture(scope="module")
def bench():
    t0 = time.perf_counter()
    report = run_bench()
    return report, time.perf_counter() - t0


def test_criterion_1_basis_lengths(bench, report_line):
    report, elapsed = bench
    wrong, slowest = [], 0.0
    count = 0
    for name, row in PUBLISHED_LENGTHS.items():
        for kind, length in row.items():
            cell = report.cell(name, kind)
            count += 1
            if cell is None or cell.status != "ok" or cell.length != length:
                wrong.append((name, kind.label, None if cell is None else cell.length, length))
            else:
                slowest = max(slowest, cell.elapsed)
    report_line(f"criterion 1 (basis lengths, exact): {_verdict(not wrong)} "
                f"{count - len(wrong)}/{count} cells, slowest cell {slowest:.2f} s, "
                f"whole table {elapsed:.1f} s" + (f"; mismatches {wrong}" if wrong else ""))
    assert not wrong
    assert slowest < 60


def test_criterion_2_already_involutive(bench, report_line):
    report, _ = bench
    U = load("cyc4")
    problems = []
    for kind in (K.JANET, K.IND_DEGLEX):
        cell = report.cell("cyc4", kind)
        if cell.reducible != cell.examined or cell.percent != 100:
            problems.append(f"{kind.label}: {cell.reducible}/{cell.examined} reducible")
        if cell.basis != U.as_set():
            problems.append(f"{kind.label}: basis differs from input")
        if not is_involutive(U, kind):
            problems.append(f"{kind.label}: raw input not reported involutive")
    report_line(f"criterion 2 (cyc4 already involutive under J and D_DL): "
                f"{_verdict(not problems)}" + (f"; {problems}" if problems else ""))
    assert not problems


def test_criterion_3_coincidences(bench, report_line):
    report, _ = bench
    t_eq_i = report.cell("cyc4", K.THOMAS).basis == report.cell("cyc4", K.DIV1).basis
    j_eq_d = report.cell("cyc4", K.JANET).basis == report.cell("cyc4", K.IND_DEGLEX).basis
    report_line(f"criterion 3 (cyc4 coincidences T = I, J = D_DL): {_verdict(t_eq_i and j_eq_d)}"
                f" (T = I: {t_eq_i}, J = D_DL: {j_eq_d})")
    assert t_eq_i and j_eq_d


def test_criterion_4_prolongation_counts(bench, report_line):
    report, _ = bench
    parts, matched = [], True
    for name, published in (("cyc4", 14), ("cyc5", 76)):
        cell = report.cell(name, K.JANET)
        ok = published in (cell.examined, cell.distinct)
        matched &= ok
        parts.append(f"{name} J published {published}, examined {cell.examined}, "
                     f"distinct {cell.distinct}")
    # soft criterion: discrepancies are reported, not fatal
    report_line(f"criterion 4 (prolongation counts, soft): "
                f"{'PASS' if matched else 'PASS (reported discrepancy)'}; " + "; ".join(parts))


def test_criterion_5_axioms(report_line):
    t0 = time.perf_counter()
    failures = []
    for kind in ALL:
        rng = random.Random(1000 + ALL.index(kind))
        for _ in range(1000):
            n, U = random_instance(rng, 5, 12, 6)
            rep = axiom_check(kind, U, subset_samples=8, rng=rng)
            if not rep.passed:
                failures.append((kind.value, rep.failed_condition, rep.witness))
    elapsed = time.perf_counter() - t0
    report_line(f"criterion 5 (division axioms, 8 x 1000 random sets): "
                f"{_verdict(not failures and elapsed < 60)} {len(failures)} failures in "
                f"{elapsed:.1f} s" + (f"; first {failures[0]}" if failures else ""))
    assert not failures
    assert elapsed < 60


def test_criterion_6_oracle_equivalence(report_line):
    rng = random.Random(6)
    bad = {"a": 0, "b": 0, "c": 0, "d": 0, "e": 0}
    checks = {"a": 0, "b": 0, "c": 0, "d": 0, "e": 0}
    for i in range(500):
        n, raw = random_instance(rng, 5, 12, 6)
        U = autoreduce(raw)

        # (c) Janet grouping and (d) cumulated multiples against the definitions
        fast = janet_table(raw)
        checks["c"] += 1
        bad["c"] += any(fast[u] != separation(K.JANET, u, raw) for u in raw)
        for order in Ordering:
            kind = K.induced(order)
            desc = sorted(raw, key=order.key, reverse=True)
            cms = cumulated_multiples(desc, order)
            via_cm = [sum(1 << j for j in range(n) if u[j] == m[j]) for u, m in zip(desc, cms)]
            checks["d"] += 1
            bad["d"] += via_cm != [separation(kind, u, raw) for u in desc]

        for kind in ALL:
            seps = separation_table(kind, U)
            inv = InvolutiveSet(U, kind, n, separations=dict(zip(U, seps)))
            # (a) divisor search: arbitrary probes and prolongations with hint
            for v in (random_monomial(rng, n, 8) for _ in range(4)):
                found = find_involutive_divisor_naive(v, U, seps)
                checks["a"] += 1
                bad["a"] += len(found) > 1 or inv.find_divisor(v) != (found[0] if found else None)
            for u, s in zip(U, seps):
                for x in range(n):
                    if not s >> x & 1:
                        v = multiply(u, x)
                        found = find_involutive_divisor_naive(v, U, seps)
                        checks["a"] += 1
                        bad["a"] += inv.find_divisor(v, (u, x)) != (found[0] if found else None)
            # (b) incremental update after adding a prolongation
            u = rng.choice(U)
            nonmult = [x for x in range(n) if not seps[U.index(u)] >> x & 1]
            if nonmult:
                var = rng.choice(nonmult)
                v = multiply(u, var)
            else:
                v, var = random_monomial(rng, n, 7), None
            if v not in U:
                got = update_separations(kind, U, seps, v, var)
                full = U + [v]
                checks["b"] += 1
                bad["b"] += got != dict(zip(full, separation_table(kind, full)))

        # (e) queue minimum along a completion trace, with the other oracles
        # re-checked on every intermediate set
        kind = ALL[i % len(ALL)]
        n, inputs = random_instance(rng, 4, 8, 5)
        if kind is K.POMMARET:
            inputs = _zero_dimensional(n, inputs)

        def step_check(run):
            checks["e"] += 1
            top = run.queue.peek()
            bad["e"] += top != naive_minimum(run)
            elems = run.basis.elems
            seps_now = [run.basis.mult[m] for m in elems]
            checks["b"] += 1
            bad["b"] += seps_now != separation_table(kind, elems)
            u, x = top
            v = multiply(u, x)
            found = find_involutive_divisor_naive(v, elems, seps_now)
            checks["a"] += 1
            bad["a"] += run.basis.find_divisor(v, (u, x)) != (found[0] if found else None)

        Completion(inputs, kind, n).run(on_step=step_check)

    total = sum(bad.values())
    summary = ", ".join(f"({k}) {bad[k]}/{checks[k]}" for k in "abcde")
    report_line(f"criterion 6 (optimized paths vs oracles, 500 instances): {_verdict(not total)} "
                f"discrepancies {summary}")
    assert total == 0


def test_criterion_7_soundness(report_line):
    t0 = time.perf_counter()
    failures = []
    runs = 0
    for kind in ALL:
        rng = random.Random(7000 + ALL.index(kind))
        for _ in range(300):
            n, U = random_instance(rng, 4, 8, 5)
            if kind is K.POMMARET:
                U = _zero_dimensional(n, U)
            results = {order: complete(U, kind, order, n=n) for order in Ordering}
            runs += 3
            basis = results[Ordering.DEGREVLEX].basis.monomials
            why = None
            if len({r.basis.as_set() for r in results.values()}) != 1:
                why = "selection order changes the basis"
            elif not is_involutive(basis, kind):
                why = "not involutive"
            elif not is_involutively_autoreduced(basis, kind):
                why = "not involutively autoreduced"
            elif not all(any(divides(g, u) for g in U) for u in basis):
                why = "basis element outside the ideal"
            else:
                why = check_cover(U, basis, kind, n, extra=2)
            if why:
                failures.append((kind.value, U, why))
    elapsed = time.perf_counter() - t0
    report_line(f"criterion 7 (completion soundness, 8 x 300 inputs, {runs} runs): "
                f"{_verdict(not failures)} {len(failures)} failures in {elapsed:.1f} s"
                + (f"; first {failures[0]}" if failures else ""))
    assert not failures


def _as_result(basis, kind, n):
    ms = MonomialSet(basis, Ordering.DEGREVLEX, n)
    return CompletionResult(ms, separation_table(kind, ms.monomials), CompletionStats(), kind,
                            Ordering.DEGREVLEX)


def _hilbert_problems(result, generators, n, s_max=12):
    data = hilbert_data(result)
    brute = brute_force_hf_series(generators, s_max, n)
    problems = [f"HF({s}) {data.hf(s)} != {brute[s]}" for s in range(s_max + 1)
                if data.hf(s) != brute[s]]
    r = data.regularity
    if any(data.hf(s) != poly_eval(data.polynomial, s) for s in range(r, r + 6)):
        problems.append("polynomial differs from HF above the regularity index")
    if r > 0 and data.hf(r - 1) == poly_eval(data.polynomial, r - 1):
        problems.append("regularity index not minimal")
    return problems


def test_criterion_8_hilbert(bench, report_line):
    report, _ = bench
    problems = []
    cells = 0
    fixtures = set()
    for cell in report.cells:
        if cell.status != "ok":
            continue
        U = load(cell.fixture)
        fixtures.add(cell.fixture)
        res = _as_result(cell.basis, cell.division, U.n)
        cells += 1
        problems += [f"{cell.fixture}/{cell.division.label}: {p}"
                     for p in _hilbert_problems(res, list(U), U.n)]
    rng = random.Random(8)
    for i in range(100):
        n, U = random_instance(rng, 4, 8, 5)
        kind = [K.JANET, K.THOMAS, K.DIV2, K.IND_DEGLEX, K.DIV1][i % 5]
        res = complete(U, kind, n=n)
        problems += [f"random {U} {kind.value}: {p}" for p in _hilbert_problems(res, U, n)]
    report_line(f"criterion 8 (Hilbert function vs enumeration, s <= 12): "
                f"{_verdict(not problems)} {cells} fixture bases over {len(fixtures)} fixtures "
                f"and 100 random inputs" + (f"; first {problems[0]}" if problems else ""))
    assert not problems

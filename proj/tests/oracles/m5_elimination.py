"""Independent sympy check of the M5 automorphism parametrization and of the
structure constants extracted from the vector-field realization.

Usage: m5_elimination.py LIEAUT_BINARY DATA_DIR
"""

import json
import subprocess
import sys
from pathlib import Path

import sympy as sp

BASIS = ["G1", "F1", "F2", "Pt", "Dt"]
# [q_i, q_j] = sum c_k q_k, 0-based, from the commutation relations
TABLE = {
    (3, 4): {3: 1},
    (4, 1): {1: 1},
    (4, 2): {2: 2},
    (3, 1): {0: 1},
    (3, 2): {1: 2},
}


def structure():
    n = len(BASIS)
    c = [[[0] * n for _ in range(n)] for _ in range(n)]
    for (i, j), res in TABLE.items():
        for k, v in res.items():
            c[i][j][k] += v
            c[j][i][k] -= v
    return c


def bracket(c, x, y):
    n = len(x)
    return sp.Matrix([sum(x[i] * y[j] * c[i][j][k] for i in range(n) for j in range(n)) for k in range(n)])


def automorphism_equations(c):
    n = len(c)
    a = sp.zeros(n, n)
    names = []
    for i in range(n):
        for j in range(i, n):
            s = sp.Symbol(f"a{i + 1}{j + 1}")
            a[i, j] = s
            names.append(s)
    eqs = []
    for i in range(n):
        for j in range(i + 1, n):
            lhs = a * sp.Matrix([c[i][j][k] for k in range(n)])
            rhs = bracket(c, a[:, i], a[:, j])
            eqs.extend(sp.expand(e) for e in lhs - rhs)
    return a, names, [e for e in eqs if e != 0]


def check_parametrization(analysis, failures):
    c = structure()
    a, names, eqs = automorphism_equations(c)
    sym = {str(s): s for s in names}
    dependents = [sym[k] for k in ("a11", "a12", "a13", "a14", "a22", "a23", "a24", "a34", "a55")]
    solutions = sp.solve(eqs, dependents, dict=True)
    a33, a44 = sym["a33"], sym["a44"]
    good = [s for s in solutions if sp.simplify(a33 * a44 * s.get(sym["a55"], 1)) != 0
            and all(sp.simplify(s.get(sym[d], sym[d])) != 0 for d in ("a11", "a22", "a55"))]
    if len(good) != 1:
        failures.append(f"expected one nondegenerate solution branch, found {len(good)}")
        return
    oracle = good[0]

    aut = analysis["automorphisms"]
    got = {k: sp.sympify(v.replace("^", "**"), locals=sym) for k, v in aut["assignments"].items()}
    for d in dependents:
        if sp.expand(got.get(str(d), d) - oracle[d]) != 0:
            failures.append(f"{d}: tool {got.get(str(d))} vs oracle {oracle[d]}")

    free = [str(s) for s in names if s not in dependents]
    if sorted(aut["free_parameters"]) != sorted(free):
        failures.append(f"free parameters {aut['free_parameters']} vs {free}")

    # the substitution kills every equation
    for e in eqs:
        if sp.expand(e.subs(oracle)) != 0:
            failures.append(f"oracle solution leaves {e}")

    # tangent space at the identity has dimension equal to the number of free parameters
    jac = sp.Matrix(eqs).jacobian(names)
    ident = {s: (1 if str(s)[1] == str(s)[2] else 0) for s in names}
    dim = len(names) - jac.subs(ident).rank()
    if dim != 6:
        failures.append(f"tangent dimension {dim}")


def vf_bracket(xs, ys, variables):
    return {v: sp.expand(sum(xs.get(w, 0) * sp.diff(ys.get(v, 0), w) - ys.get(w, 0) * sp.diff(xs.get(v, 0), w)
                             for w in variables)) for v in variables}


def check_extraction(data_dir, failures):
    doc = json.loads((data_dir / "paperfamily.json").read_text())
    variables = [sp.Symbol(v) for v in doc["variables"]]
    loc = {str(v): v for v in variables}
    fields = {}
    for f in doc["fields"]:
        fields[f["name"]] = {loc[k]: sp.sympify(v.replace("^", "**"), locals=loc) for k, v in f["components"].items()}
    c = structure()
    for i, p in enumerate(BASIS):
        for j, q in enumerate(BASIS):
            got = vf_bracket(fields[p], fields[q], variables)
            want = {v: sp.expand(sum(c[i][j][k] * fields[BASIS[k]].get(v, 0) for k in range(len(BASIS))))
                    for v in variables}
            if got != want:
                failures.append(f"[{p}, {q}] realized as {got}")

    m5 = json.loads((data_dir / "m5.json").read_text())
    tensor = [[[sp.Rational(0)] * 5 for _ in range(5)] for _ in range(5)]
    for b in m5["brackets"]:
        i, j = m5["basis"].index(b["left"]), m5["basis"].index(b["right"])
        for k, v in b["result"].items():
            tensor[i][j][m5["basis"].index(k)] = sp.Rational(v)
            tensor[j][i][m5["basis"].index(k)] = -sp.Rational(v)
    if tensor != structure():
        failures.append("m5.json does not match the commutation relations")


def main():
    binary, data_dir = sys.argv[1], Path(sys.argv[2])
    failures = []
    out = subprocess.run([binary, "analyze", str(data_dir / "m5.json")], capture_output=True, text=True, check=True)
    check_parametrization(json.loads(out.stdout), failures)
    check_extraction(data_dir, failures)
    for f in failures:
        print("FAIL:", f)
    if failures:
        return 1
    print("sympy oracle agrees")
    return 0


if __name__ == "__main__":
    sys.exit(main())

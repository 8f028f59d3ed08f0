#!/usr/bin/env python3
"""Reference external-solver adapter.

Reads an LP file produced by `cjs export`, solves it with scipy's HiGHS
backend, and prints the solution in the bridge protocol:

    <variable-name> <value>     one line per variable
    infeasible                  when the model is proven infeasible

Exit status 0 on either outcome; nonzero on parse or solver failure, which
the bridge reports as Unknown.  The parser covers exactly the LP subset the
exporter emits (Minimize/Maximize, one objective line, `Subject To` rows
with integer coefficients, a `Binaries` block, `End`).
"""

import sys

import numpy as np
from scipy.optimize import Bounds, LinearConstraint, milp


def tokens_of(lines):
    """Logical statements: the exporter wraps long rows with a 3-space indent."""
    merged = []
    for raw in lines:
        line = raw.rstrip("\n")
        if not line.strip() or line.startswith("\\"):
            continue
        if line.startswith("   ") and merged:
            merged[-1] += " " + line.strip()
        else:
            merged.append(line.strip())
    return merged


def parse_terms(text, var_index, var_names):
    """`3 x_0_1 - s_2 + 4 y_0_1` -> {index: coeff}; registers new variables."""
    coeffs = {}
    sign = 1.0
    pending = None  # numeric literal waiting for its variable
    for tok in text.split():
        if tok == "+":
            sign = 1.0
        elif tok == "-":
            sign = -1.0
        else:
            try:
                pending = float(tok)
                continue
            except ValueError:
                pass
            if tok not in var_index:
                var_index[tok] = len(var_names)
                var_names.append(tok)
            idx = var_index[tok]
            coeffs[idx] = coeffs.get(idx, 0.0) + sign * (pending if pending is not None else 1.0)
            sign = 1.0
            pending = None
    return coeffs


def main():
    if len(sys.argv) != 2:
        print("usage: lp_solve.py model.lp", file=sys.stderr)
        return 2
    with open(sys.argv[1]) as f:
        stmts = tokens_of(f.readlines())

    sense = 1.0
    var_index, var_names = {}, []
    objective = {}
    rows = []  # (coeffs, lo, hi)
    binaries = set()

    section = None
    for stmt in stmts:
        low = stmt.lower()
        if low in ("minimize", "maximize"):
            sense = 1.0 if low == "minimize" else -1.0
            section = "objective"
            continue
        if low == "subject to":
            section = "rows"
            continue
        if low in ("binaries", "binary"):
            section = "binaries"
            continue
        if low == "end":
            break
        if section == "objective":
            body = stmt.split(":", 1)[1] if ":" in stmt else stmt
            objective = parse_terms(body, var_index, var_names)
        elif section == "rows":
            body = stmt.split(":", 1)[1] if ":" in stmt else stmt
            for rel in ("<=", ">=", "="):
                if rel in body:
                    lhs, rhs = body.split(rel, 1)
                    rhs = float(rhs)
                    coeffs = parse_terms(lhs, var_index, var_names)
                    lo = -np.inf if rel == "<=" else rhs
                    hi = np.inf if rel == ">=" else rhs
                    rows.append((coeffs, lo, hi))
                    break
            else:
                print(f"unparseable row: {stmt}", file=sys.stderr)
                return 2
        elif section == "binaries":
            for name in stmt.split():
                if name not in var_index:
                    var_index[name] = len(var_names)
                    var_names.append(name)
                binaries.add(name)

    n = len(var_names)
    c = np.zeros(n)
    for idx, coeff in objective.items():
        c[idx] = sense * coeff
    if rows:
        a = np.zeros((len(rows), n))
        lo = np.zeros(len(rows))
        hi = np.zeros(len(rows))
        for i, (coeffs, row_lo, row_hi) in enumerate(rows):
            for idx, coeff in coeffs.items():
                a[i, idx] = coeff
            lo[i], hi[i] = row_lo, row_hi
        constraints = [LinearConstraint(a, lo, hi)]
    else:
        constraints = []

    ub = np.array([1.0 if name in binaries else np.inf for name in var_names])
    integrality = np.array([1 if name in binaries else 0 for name in var_names])

    res = milp(
        c=c,
        constraints=constraints,
        bounds=Bounds(np.zeros(n), ub),
        integrality=integrality,
    )
    if res.status == 2:  # proven infeasible
        print("infeasible")
        return 0
    if not res.success:
        print(f"solver status {res.status}: {res.message}", file=sys.stderr)
        return 2
    for name, value in zip(var_names, res.x):
        print(f"{name} {value:.9f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

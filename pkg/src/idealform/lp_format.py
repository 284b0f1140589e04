"""Plain LP-format text for handing a formulation to an off-the-shelf solver.

Each paired row splits into its two one-sided inequalities, moved to the
all-on-the-left convention so every coefficient stays an integer:

    g{k}_lo:  lower . lambda - normal . z <= 0
    g{k}_up:  normal . z - upper . lambda <= 0

Variables are lambda_1..lambda_n (continuous, nonnegative; the simplex
equality caps them at 1) and z_1..z_r (general integers with their box
bounds). The writer is deterministic: same formulation, same bytes.
"""

from __future__ import annotations

from .formulation import Formulation

__all__ = ["emit_lp_text"]


def _terms(pairs) -> str:
    """Render [(coeff, name), ...] as '+ 2 x - 1 y', skipping zeros."""
    parts = []
    for coeff, name in pairs:
        if coeff == 0:
            continue
        sign = "-" if coeff < 0 else "+"
        parts.append(f"{sign} {abs(coeff)} {name}")
    return " ".join(parts)


def _lambda_names(n: int) -> list[str]:
    return [f"lambda_{v}" for v in range(1, n + 1)]


def _z_names(r: int) -> list[str]:
    return [f"z_{k}" for k in range(1, r + 1)]


def emit_lp_text(f: Formulation) -> str:
    lam = _lambda_names(f.n_lambda)
    z = _z_names(f.r_z)
    lines = ["Minimize", f" obj: 0 {lam[0]}", "Subject To"]
    for i, eq in enumerate(f.equalities, 1):
        run = _terms(list(zip(eq.lam, lam)) + list(zip(eq.z, z)))
        lines.append(f" eq_{i}: {run} = {eq.rhs}")
    for k, row in enumerate(f.general_rows, 1):
        lo = _terms(list(zip(row.lower, lam)) + [(-b, name) for b, name in zip(row.normal, z)])
        up = _terms(list(zip(row.normal, z)) + [(-u, name) for u, name in zip(row.upper, lam)])
        lines.append(f" g{k}_lo: {lo} <= 0")
        lines.append(f" g{k}_up: {up} <= 0")
    lines.append("Bounds")
    for name in lam:
        lines.append(f" {name} >= 0")
    for name, (low, high) in zip(z, f.z_bounds):
        lines.append(f" {low} <= {name} <= {high}")
    if z:
        lines.append("Generals")
        lines.append(" " + " ".join(z))
    lines.append("End")
    return "\n".join(lines) + "\n"

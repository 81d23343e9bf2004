"""Command line front end: exact JSON matrix I/O, reports, figures.

Matrices travel as JSON documents {"n": ..., "entries": [[...], ...]} whose
entries are rational strings ("3/2", "-1") or plain integers; floats are
rejected.  Exit codes: 0 member or success, 1 non-member, 2 usage or parse
error.  Pair indices are printed 1-based.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from pathlib import Path

from .errors import CapacityError, NotAMemberError
from .factor import decompose_rank_one, gram_factor, symmetric_barvinok_rank
from .newton_subdiv import is_trivial, lattice_points, lower_subdivision
from .psd_cone import is_trop_psd_det, is_trop_psd_inequalities
from .puiseux import (
    SignPattern,
    construct_witness,
    format_poly,
    principal_minors,
    specialize_and_check,
    verify_witness,
)
from .trop_core import SymMatrix, as_rat, trop_det_assignment

__all__ = [
    "GRID",
    "NONNEG_GRID",
    "main",
    "parse_document",
    "random_member_matrix",
    "random_symmetric_matrix",
    "render_document",
    "render_subdivision_svg",
    "run",
]

# Small half-integer grid; chosen so random entries tie often.
GRID = tuple(Fraction(k, 2) for k in (-4, -2, -1, 0, 1, 2, 4))
NONNEG_GRID = (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2))


def parse_document(text: str) -> SymMatrix:
    """Parse a matrix document; raises ValueError with a diagnostic."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ValueError("document must be a JSON object")
    n = data.get("n")
    entries = data.get("entries")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError('"n" must be a positive integer')
    if not isinstance(entries, list) or len(entries) != n:
        raise ValueError(f'"entries" must be a list of {n} rows')
    rows = []
    for i, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != n:
            raise ValueError(f"row {i + 1} must be a list of {n} entries")
        parsed = []
        for j, cell in enumerate(row):
            if isinstance(cell, bool) or not isinstance(cell, (str, int)):
                raise ValueError(
                    f"entry ({i + 1}, {j + 1}) must be a rational string or integer"
                )
            try:
                parsed.append(as_rat(cell))
            except (ValueError, ZeroDivisionError) as exc:
                raise ValueError(f"entry ({i + 1}, {j + 1}): {exc}") from exc
        rows.append(parsed)
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise ValueError(f"matrix is not symmetric at ({i + 1}, {j + 1})")
    return SymMatrix.from_rows(rows)


def render_document(matrix: SymMatrix) -> str:
    """Canonical one-line JSON document for a matrix."""
    doc = {"n": matrix.n, "entries": [[str(x) for x in row] for row in matrix.rows()]}
    return json.dumps(doc)


def random_symmetric_matrix(rng: random.Random, n: int) -> SymMatrix:
    """Unconstrained symmetric matrix with entries from the test grid."""
    return SymMatrix.from_upper(n, (rng.choice(GRID) for _ in range(n * (n + 1) // 2)))


def random_member_matrix(rng: random.Random, n: int) -> SymMatrix:
    """Cone member built from random generator coefficients.

    Lineality directions get arbitrary grid coefficients, off-diagonal rays
    nonnegative ones; zero ray coefficients are included on purpose so
    boundary matrices show up often.
    """
    lam = [rng.choice(GRID) for _ in range(n)]
    upper = []
    for i in range(n):
        for j in range(i, n):
            if i == j:
                upper.append(2 * lam[i])
            else:
                upper.append(lam[i] + lam[j] + rng.choice(NONNEG_GRID))
    return SymMatrix.from_upper(n, upper)


# ---------------------------------------------------------------------------
# SVG rendering (n = 3 only: the doubled triangle is the one planar case)

_CORNERS = ((40, 420), (460, 420), (250, 56))


def _point_xy(point) -> tuple[int, int]:
    i, j = point
    ax, ay = _CORNERS[i]
    bx, by = _CORNERS[j]
    return (ax + bx) // 2, (ay + by) // 2


def _hull_vertices(points):
    """Vertices of the 2D convex hull (monotone chain, integer cross products)."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def render_subdivision_svg(matrix: SymMatrix) -> str:
    """Deterministic SVG of the doubled triangle with its subdivision.

    Lattice points are labeled with their heights; each cell of the lower
    subdivision is drawn as a polygon.  Byte-identical output for identical
    input: every coordinate is an integer and ordering is canonical.
    """
    if matrix.n != 3:
        raise ValueError("svg rendering is defined for n = 3 only")
    subdivision = lower_subdivision(matrix)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" width="500" height="470"'
        ' viewBox="0 0 500 470">',
    ]
    for cell in subdivision.cells:
        hull = _hull_vertices([_point_xy(p) for p in sorted(cell)])
        coords = " ".join(f"{x},{y}" for x, y in hull)
        lines.append(
            f'  <polygon points="{coords}" fill="none" stroke="black"'
            ' stroke-width="2"/>'
        )
    for point in lattice_points(3):
        x, y = _point_xy(point)
        height = matrix[point[0], point[1]]
        lines.append(f'  <circle cx="{x}" cy="{y}" r="4" fill="black"/>')
        lines.append(
            f'  <text x="{x + 8}" y="{y - 8}" font-family="monospace"'
            f' font-size="14">{height}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Commands


def _pair_str(pair) -> str:
    i, j = pair
    return f"({i + 1},{j + 1})"


def _violation_line(matrix: SymMatrix, pair) -> str:
    i, j = pair
    return (
        f"non-member: x[{i + 1},{i + 1}] + x[{j + 1},{j + 1}] > 2*x[{i + 1},{j + 1}]"
        f"  ({matrix[i, i]} + {matrix[j, j]} > 2*({matrix[i, j]}))"
    )


def _load(path_arg: str) -> SymMatrix:
    text = sys.stdin.read() if path_arg == "-" else Path(path_arg).read_text(encoding="utf-8")
    return parse_document(text)


def cmd_check(args) -> int:
    matrix = _load(args.matrix)
    method = args.method
    subdivision = None
    if method == "inequalities":
        verdict = is_trop_psd_inequalities(matrix)
        member = verdict.is_member
    elif method == "det":
        member = is_trop_psd_det(matrix)
    else:
        subdivision = lower_subdivision(matrix)
        member = is_trivial(subdivision)
    if args.json:
        payload = {"member": member, "method": method}
        if method == "inequalities" and not member:
            i, j = verdict.violated_pair
            payload["violated_pair"] = [i + 1, j + 1]
        elif method == "det":
            payload["tropical_det"] = str(trop_det_assignment(matrix.rows()))
            payload["diagonal_sum"] = str(sum(matrix.diagonal()))
        elif method == "subdivision":
            payload["cells"] = [
                [[i + 1, j + 1] for i, j in sorted(cell)] for cell in subdivision.cells
            ]
        print(json.dumps(payload, sort_keys=True))
    elif member:
        print("member")
    elif method == "inequalities":
        print(_violation_line(matrix, verdict.violated_pair))
    elif method == "det":
        det = trop_det_assignment(matrix.rows())
        print(f"non-member: tropical determinant {det} < diagonal sum {sum(matrix.diagonal())}")
    else:
        print(f"non-member: subdivision has {len(subdivision.cells)} cells")
        for cell in subdivision.cells:
            print("  cell: " + " ".join(_pair_str(p) for p in sorted(cell)))
    return 0 if member else 1


def _subset_label(subset) -> str:
    return "{" + ",".join(str(i + 1) for i in subset) + "}"


def cmd_witness(args) -> int:
    matrix = _load(args.matrix)
    n = matrix.n
    signs = SignPattern.from_string(n, args.signs) if args.signs else SignPattern.all_plus(n)
    witness = construct_witness(matrix, signs)
    minors = principal_minors(witness)
    verified = verify_witness(witness, matrix)
    special = None
    u = None
    if args.specialize is not None:
        u = as_rat(args.specialize)
        special = specialize_and_check(witness, u)
    if args.json:
        payload = {
            "witness": [[format_poly(witness[i, j]) for j in range(n)] for i in range(n)],
            "minors": {_subset_label(s): format_poly(m) for s, m in minors.items()},
            "verified": verified,
        }
        if special is not None:
            payload["specialization"] = {"u": str(u), "positive": special}
        print(json.dumps(payload, sort_keys=True))
    else:
        print("witness:")
        for i in range(n):
            print("  [" + ", ".join(format_poly(witness[i, j]) for j in range(n)) + "]")
        print("principal minors:")
        for subset, minor in minors.items():
            print(f"  {_subset_label(subset)}: {format_poly(minor)}")
        print(f"verification: {'PASS' if verified else 'FAIL'}")
        if special is not None:
            print(f"specialization at u = {u}: {'PASS' if special else 'FAIL'}")
    return 0 if verified and (special is None or special) else 1


def cmd_decompose(args) -> int:
    matrix = _load(args.matrix)
    decomposition = decompose_rank_one(matrix)
    ok = decomposition.to_matrix() == matrix
    if args.json:
        payload = {
            "vectors": [[str(x) for x in u] for u in decomposition.vectors],
            "reconstructs": ok,
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        print("rank-one vectors:")
        for k, u in enumerate(decomposition.vectors):
            print(f"  u[{k + 1}] = (" + ", ".join(str(x) for x in u) + ")")
        print(f"reconstruction: {'OK' if ok else 'FAIL'}")
    return 0 if ok else 1


def cmd_rank(args) -> int:
    matrix = _load(args.matrix)
    rank = symmetric_barvinok_rank(matrix)
    if args.json:
        print(json.dumps({"rank": rank}))
    else:
        print(f"symmetric Barvinok rank: {rank}")
    return 0


def cmd_factor(args) -> int:
    matrix = _load(args.matrix)
    factor = gram_factor(matrix)
    ok = factor.to_matrix() == matrix
    if args.json:
        payload = {
            "B": [[str(x) for x in row] for row in factor.matrix],
            "columns": factor.column_count,
            "reconstructs": ok,
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        print("B =")
        for row in factor.matrix:
            print("  [" + ", ".join(str(x) for x in row) + "]")
        print(f"B (min,+) B^T = A: {'OK' if ok else 'FAIL'}")
    return 0 if ok else 1


def cmd_random(args) -> int:
    rng = random.Random(args.seed)
    for _ in range(args.count):
        if args.member:
            matrix = random_member_matrix(rng, args.n)
        else:
            matrix = random_symmetric_matrix(rng, args.n)
        print(render_document(matrix))
    return 0


def cmd_svg(args) -> int:
    matrix = _load(args.matrix)
    svg = render_subdivision_svg(matrix)
    Path(args.out).write_text(svg, encoding="utf-8")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="troppsd",
        description="Exact tools for the tropical positive semidefinite cone.",
    )
    parser.add_argument("--json", action="store_true", help="emit machine-readable JSON")
    parser.add_argument("--seed", type=int, default=0, help="random seed (used by `random`)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_matrix(p):
        p.add_argument("matrix", help="path to a matrix document, or - for stdin")

    p = sub.add_parser("check", help="cone membership test")
    add_matrix(p)
    p.add_argument(
        "--method",
        choices=("inequalities", "det", "subdivision"),
        default="inequalities",
    )
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("witness", help="symbolic certificate for a member")
    add_matrix(p)
    p.add_argument(
        "--signs",
        help="off-diagonal sign string in pair order (1,2),(1,3),...,(2,3),...",
    )
    p.add_argument(
        "--specialize",
        metavar="U",
        help="also check the exact rational specialization at this u in (0,1)",
    )
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("decompose", help="greedy rank-one decomposition")
    add_matrix(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("rank", help="exact symmetric Barvinok rank")
    add_matrix(p)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("factor", help="tropical Gram factor B with B (min,+) B^T = A")
    add_matrix(p)
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("random", help="emit random matrix documents, one JSON per line")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--member", action="store_true", help="sample inside the cone")
    group.add_argument(
        "--any",
        dest="member",
        action="store_false",
        help="sample unconstrained symmetric matrices",
    )
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("svg", help="render the n=3 subdivision as a deterministic SVG")
    add_matrix(p)
    p.add_argument("--out", required=True, help="output path for the SVG file")
    p.set_defaults(func=cmd_svg)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NotAMemberError as exc:
        print(str(exc))
        return 1
    except (ValueError, CapacityError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    """Console-script entry point."""
    sys.exit(main())


if __name__ == "__main__":
    run()

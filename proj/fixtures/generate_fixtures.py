#!/usr/bin/env python3
"""Regenerates the fixture corpus. Expected tables for the rational normal
curves come from the closed form kappa_{p,1} = p * C(e+1, p+1)."""
import itertools
import json
from math import comb
from pathlib import Path

HERE = Path(__file__).resolve().parent


def emit_table(rows):
    out = []
    for q in sorted(rows):
        last = max(rows[q])
        out.append(f"{q}: " + " ".join(str(rows[q].get(p, ".")) for p in range(last + 1)))
    return "\n".join(out) + "\n"


def write(name, text):
    (HERE / name).write_text(text)


def term(coefficient, degrees):
    return {"coefficient": coefficient, "degrees": degrees}


fixtures = []

write("veronese_projection.table", "# general projection of the Veronese surface to P^4\n0: 1\n2: . 7 10 5 1\n")
fixtures.append({
    "name": "veronese_projection",
    "description": "projected Veronese surface in P^4 (decomposes into three pure diagrams)",
    "table": "veronese_projection.table",
    "decomposition": {"terms": [term("1/10", [0, 3, 4, 5, 6]), term("7/30", [0, 3, 4, 5]), term("2/3", [0, 3, 4])]},
    "codim": 2, "multiplicity": "4",
    "checks": [{"kind": "max", "codim": 2, "q": 2, "nd_q": True, "verdict": "Violation", "p": 1}],
})

write("cubic_conic.table", "# plane nodal cubic union a smooth conic in P^4\n0: 1\n1: . 5 6 2\n2: . 1 2 1\n")
fixtures.append({
    "name": "cubic_conic",
    "description": "nodal plane cubic union a conic in P^4 (exceeds the next-to-maximal bound)",
    "table": "cubic_conic.table",
    "decomposition": {"terms": [term("2/3", [0, 2, 3, 4]), term("2/15", [0, 2, 3, 5]),
                                term("1/10", [0, 2, 4, 5]), term("1/10", [0, 3, 4, 5])]},
    "codim": 3, "multiplicity": "5",
    "checks": [{"kind": "next-to-max", "codim": 3, "verdict": "Violation", "p": 2},
               {"kind": "max", "codim": 3, "q": 1, "verdict": "NoneMax"}],
})

write("pure_tilde_3_1.table", "# pi(0,2,3,5)\n0: 1\n1: . 5 5\n2: . . . 1\n")
fixtures.append({
    "name": "pure_tilde_3_1",
    "description": "pure diagram of (0,2,3,5), attains the next-to-maximal bounds",
    "table": "pure_tilde_3_1.table",
    "decomposition": {"terms": [term("1", [0, 2, 3, 5])]},
    "codim": 3, "multiplicity": "5",
    "checks": [{"kind": "next-to-max", "codim": 3, "lgp": True, "verdict": "AllMax",
                "degree_predicted": "5", "shape_holds": True}],
})

write("twisted_cubic.ideal", "# twisted cubic in P^3\nvars 4\nx0*x2 - x1^2\nx0*x3 - x1*x2\nx1*x3 - x2^2\n")
write("twisted_cubic.expected.table", emit_table({0: {0: 1}, 1: {1: 3, 2: 2}}))
fixtures.append({
    "name": "twisted_cubic", "description": "twisted cubic curve in P^3",
    "ideal": "twisted_cubic.ideal", "qmax": 3, "expected_table": "twisted_cubic.expected.table",
    "decomposition": {"terms": [term("1", [0, 2, 3])]}, "codim": 2, "multiplicity": "3",
    "checks": [{"kind": "max", "codim": 2, "q": 1, "nd_q": True, "verdict": "AllMax",
                "degree_predicted": "3", "shape_holds": True},
               {"kind": "next-to-max", "codim": 2, "verdict": "Violation", "p": 1}],
})

# 2x2 minors of the generic symmetric 3x3 matrix [[x0,x1,x2],[x1,x3,x4],[x2,x4,x5]]
write("veronese_surface.ideal", "# Veronese surface v_2(P^2) in P^5\nvars 6\nfield rational\n"
      "x0*x3 - x1^2\nx0*x4 - x1*x2\nx1*x4 - x2*x3\nx0*x5 - x2^2\nx1*x5 - x2*x4\nx3*x5 - x4^2\n")
write("veronese_surface.expected.table", emit_table({0: {0: 1}, 1: {1: 6, 2: 8, 3: 3}}))
fixtures.append({
    "name": "veronese_surface", "description": "Veronese surface v_2(P^2) in P^5",
    "ideal": "veronese_surface.ideal", "qmax": 3, "expected_table": "veronese_surface.expected.table",
    "decomposition": {"terms": [term("1", [0, 2, 3, 4])]}, "codim": 3, "multiplicity": "4",
    "checks": [{"kind": "max", "codim": 3, "q": 1, "nd_q": True, "verdict": "AllMax",
                "degree_predicted": "4", "shape_holds": True}],
})

for e in range(1, 6):
    n = e + 1
    lines = [f"# rational normal curve of degree {n} in P^{n}: 2x2 minors of [x0..x{n-1}; x1..x{n}]", f"vars {n + 1}"]
    for i, j in itertools.combinations(range(n), 2):
        a = f"x{i}*x{j + 1}"
        b = f"x{i + 1}^2" if i + 1 == j else f"x{i + 1}*x{j}"
        lines.append(f"{a} - {b}")
    write(f"rnc_{n}.ideal", "\n".join(lines) + "\n")
    write(f"rnc_{n}.expected.table",
          emit_table({0: {0: 1}, 1: {p: p * comb(e + 1, p + 1) for p in range(1, e + 1)}}))
    fixtures.append({
        "name": f"rational_normal_curve_{n}", "description": f"rational normal curve of degree {n}, codimension {e}",
        "ideal": f"rnc_{n}.ideal", "qmax": 3, "expected_table": f"rnc_{n}.expected.table",
        "decomposition": {"terms": [term("1", [0] + [1 + k for k in range(1, e + 1)])]},
        "codim": e, "multiplicity": str(n),
        "checks": [{"kind": "max", "codim": e, "q": 1, "nd_q": True, "verdict": "AllMax",
                    "degree_predicted": str(comb(e + 1, 1)), "shape_holds": True}],
    })

write("ci_two_quadrics.ideal", "# complete intersection of two quadrics in P^1\nvars 2\nx0^2\nx1^2\n")
write("ci_two_quadrics.expected.table", emit_table({0: {0: 1}, 1: {1: 2}, 2: {2: 1}}))
fixtures.append({
    "name": "ci_two_quadrics", "description": "complete intersection (x0^2, x1^2)",
    "ideal": "ci_two_quadrics.ideal", "qmax": 4, "expected_table": "ci_two_quadrics.expected.table",
    "decomposition": {"terms": [term("1", [0, 2, 4])]}, "codim": 2, "multiplicity": "4",
    "checks": [{"kind": "max", "codim": 2, "q": 1, "verdict": "NoneMax"}],
})

write("ci_quadric_cubic.ideal", "# complete intersection of a quadric and a cubic in P^2\nvars 3\nfield rational\nx0^2\nx1^3\n")
write("ci_quadric_cubic.expected.table", emit_table({0: {0: 1}, 1: {1: 1}, 2: {1: 1}, 3: {2: 1}}))
fixtures.append({
    "name": "ci_quadric_cubic", "description": "complete intersection (x0^2, x1^3) in P^2",
    "ideal": "ci_quadric_cubic.ideal", "qmax": 5, "expected_table": "ci_quadric_cubic.expected.table",
    "decomposition": {"terms": [term("3/5", [0, 2, 5]), term("2/5", [0, 3, 5])]}, "codim": 2, "multiplicity": "6",
})

write("cubic_curve.ideal", "# smooth plane cubic (Fermat)\nvars 3\nx0^3 + x1^3 + x2^3\n")
write("cubic_curve.expected.table", emit_table({0: {0: 1}, 2: {1: 1}}))
fixtures.append({
    "name": "cubic_curve", "description": "plane cubic hypersurface",
    "ideal": "cubic_curve.ideal", "qmax": 4, "expected_table": "cubic_curve.expected.table",
    "decomposition": {"terms": [term("1", [0, 3])]}, "codim": 1, "multiplicity": "3",
    "checks": [{"kind": "max", "codim": 1, "q": 2, "nd_q": True, "verdict": "AllMax",
                "degree_predicted": "3", "shape_holds": True}],
})

write("zero_ideal.ideal", "# the zero ideal: S itself\nvars 2\n")
write("zero_ideal.expected.table", emit_table({0: {0: 1}}))
fixtures.append({
    "name": "zero_ideal", "description": "zero ideal in two variables",
    "ideal": "zero_ideal.ideal", "qmax": 2, "expected_table": "zero_ideal.expected.table",
    "decomposition": {"terms": [term("1", [0])]}, "codim": 0, "multiplicity": "1",
})

write("linear_form.ideal", "# a single linear form\nvars 2\nx0\n")
write("linear_form.expected.table", emit_table({0: {0: 1, 1: 1}}))
fixtures.append({
    "name": "linear_form", "description": "S/(x0) in two variables",
    "ideal": "linear_form.ideal", "qmax": 2, "expected_table": "linear_form.expected.table",
    "decomposition": {"terms": [term("1", [0, 1])]}, "codim": 1, "multiplicity": "1",
})

write("manifest.json", json.dumps({"fixtures": fixtures}, indent=2) + "\n")

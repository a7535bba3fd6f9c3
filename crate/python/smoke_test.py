#!/usr/bin/env python3
"""Smoke test for the zspline_py extension module.

Build the module first, then run this script from anywhere:

    cargo build -p zspline-py
    python3 python/smoke_test.py

The script copies the built cdylib into a temporary directory under the
importable name `zspline_py.so`, imports it, and checks a handful of
known answers end to end.
"""

import shutil
import sys
import tempfile
from pathlib import Path


def locate_extension() -> Path:
    root = Path(__file__).resolve().parent.parent
    candidates = [
        root / "target" / profile / "libzspline_py.so"
        for profile in ("release", "debug")
    ]
    built = [p for p in candidates if p.exists()]
    if not built:
        sys.exit(
            "libzspline_py.so not found; run `cargo build -p zspline-py` first"
        )
    return max(built, key=lambda p: p.stat().st_mtime)


def check(name: str, condition: bool) -> None:
    if not condition:
        sys.exit(f"FAIL: {name}")
    print(f"PASS: {name}")


def main() -> None:
    extension = locate_extension()
    with tempfile.TemporaryDirectory() as scratch:
        shutil.copy2(extension, Path(scratch) / "zspline_py.so")
        sys.path.insert(0, scratch)
        import zspline_py as zs

        # Exact arithmetic, including values far beyond machine range.
        check("gcd of big powers", zs.gcd_all([2**100, 2**99]) == 2**99)
        check("lcm", zs.lcm_all([4, 6, 10]) == 60)
        check(
            "congruence system",
            zs.crt_system([(7, 3), (3, 7), (5, 5), (4, 6)]) == (10, 210),
        )
        check("incompatible pair", zs.crt_pair(1, 2, 0, 4) is None)
        check(
            "big congruence pair",
            zs.crt_pair(1, 2**64, 1 + 2**64, 3) == (1 + 2**64, 3 * 2**64),
        )

        # Graphs and verification.
        triangle = zs.Graph.cycle([2, 3, 5])
        check("triangle family", triangle.family == "cycle")
        check("triangle spline", triangle.is_spline([0, 2, 5]))
        check(
            "first violation",
            triangle.first_violation([0, 1, 5]) == (1, 1, 2, 2),
        )
        star = zs.Graph.star([3, 7, 5, 6])
        check("star spline", star.is_spline([7, 3, 5, 4, 10]))

        # Flow-up classes and the basis.
        check(
            "triangle basis",
            zs.flow_up_basis([2, 3, 5]) == [[1, 1, 1], [0, 2, 5], [0, 0, 15]],
        )
        check("smallest class", zs.smallest_flow_up([5, 4, 6], 2) == [0, 0, 12])
        check("leading entry", zs.smallest_leading_entry([5, 2, 4, 8], 1) == 10)

        # Decomposition round trip on the square example.
        coefficients = zs.decompose([5, 2, 4, 8], [1, 11, 13, 17])
        check("square coefficients", coefficients == [1, 1, 3, 2])
        check(
            "recombination",
            zs.recombine([5, 2, 4, 8], coefficients) == [1, 11, 13, 17],
        )

        # Contraction and its inverse.
        shorter = zs.contract_first_edge([5, 2, 4, 8], [0, 0, 4, 0])
        check("contraction", shorter == ([2, 4, 8], [0, 4, 0]))
        check(
            "edge addition",
            zs.add_leading_zero([2, 4, 8], [0, 4, 0], 5)
            == ([5, 2, 4, 8], [0, 0, 4, 0]),
        )

        # Stars, wheels, and complete graphs.
        check("star center", zs.star_center([3, 7, 5, 6], [7, 3, 5, 4]) == (10, 210))
        check("unsolvable star", zs.star_center([2, 2], [0, 1]) is None)
        check(
            "wheel hub",
            zs.wheel_extend([2, 3, 5], [2, 1, 5], [0, 2, 5]) == (0, 10),
        )
        k3 = zs.Graph.complete([2, 3, 5], [])
        grown, extended = zs.complete_extend(k3, [0, 2, 5], [2, 1, 5])
        check("complete extension", extended == [0, 2, 5, 0])
        check("grown graph", grown.vertex_count == 4 and grown.family == "complete")
        check(
            "blocked extension",
            zs.complete_extend(k3, [0, 2, 5], [2, 3, 2]) is None,
        )

        # Oracles.
        check(
            "tight enumeration",
            zs.enumerate_splines(triangle, 2) == [[0, 0, 0], [1, 1, 1]],
        )
        check("enumeration count", len(zs.enumerate_splines(triangle, 30)) == 900)
        check(
            "minimal class accepted",
            zs.minimality_scan([2, 3, 5], 1, [0, 2, 5], 30) is None,
        )
        check(
            "inflated class rejected",
            zs.minimality_scan([2, 3, 5], 1, [0, 4, 10], 30) == [0, 2, 5],
        )
        check("span check", zs.span_check([2, 3, 5], 30) == 900)

        # Error mapping.
        try:
            zs.Graph.cycle([2, 0, 5])
        except ValueError:
            check("domain errors raise ValueError", True)
        else:
            check("domain errors raise ValueError", False)

        print("all smoke checks passed")


if __name__ == "__main__":
    main()

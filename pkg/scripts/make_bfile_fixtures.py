"""Regenerate the vendored b-file fixtures from sympy.

The values come from sympy's own Fibonacci/Lucas functions and Chebyshev
polynomials (B*_n(1) = U_(n-1)(3), C_n(1) = T_n(3)), not from lucas_euler,
so the fixtures stay an independent cross-check.
"""
from pathlib import Path

import sympy

TERMS = 40
OUT = Path(__file__).resolve().parents[1] / "src" / "lucas_euler" / "data"

SEQUENCES = {
    "A000045": ("Fibonacci numbers", lambda n: sympy.fibonacci(n)),
    "A000032": ("Lucas numbers", lambda n: sympy.lucas(n)),
    "A001109": ("Balancing numbers", lambda n: 0 if n == 0 else sympy.chebyshevu(n - 1, 3)),
    "A001541": ("Lucas-balancing numbers", lambda n: sympy.chebyshevt(n, 3)),
}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for seq_id, (title, fn) in SEQUENCES.items():
        lines = [f"# {seq_id} {title}, offset 0, first {TERMS} terms"]
        lines += [f"{n} {int(fn(n))}" for n in range(TERMS)]
        path = OUT / f"b{seq_id[1:]}.txt"
        path.write_text("\n".join(lines) + "\n", encoding="ascii")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()

"""Regenerate the frozen oracle fixtures (slow; run by hand).

    python3 tests/fixtures/generate.py
"""
import json
import sys
from fractions import Fraction
from pathlib import Path

HERE = Path(__file__).resolve().parent
sys.path.insert(0, str(HERE.parent))

import oracles  # noqa: E402

COMMUTANT_INPUTS = {"z^2+1": [1, 0, 1], "z^3-2z": [0, -2, 0, 1], "z^4+2z^2+2": [2, 0, 2, 0, 1]}
COMMUTANT_MAX_DEGREE = 9

TAME_CORPUS = [
    [0, 0, 0, 1], [0, -3, 0, 1], [0, 1, 0, 1], [1, 0, 1, 1], [1, -1, 0, 1],
    [0, 0, 3, 2], [2, 1, -1, 1], [0, -2, 0, 1], [5, 0, 0, -1], [1, 2, 3, 1],
    [0, 0, 0, 0, 1], [0, 1, 0, 0, 1], [0, 0, 1, 0, 1], [1, 0, -8, 0, 8], [0, 0, 0, 1, 1],
    [1, 1, 0, 0, 1], [0, -1, 2, 0, 1], [0, 1, 1, 1, 1], [2, 0, -3, 1, 1], [0, 0, -2, 0, 1],
]


def frac(c):
    return str(Fraction(c))


def main():
    commutant = {}
    for name, P in COMMUTANT_INPUTS.items():
        elements = oracles.commutant(P, COMMUTANT_MAX_DEGREE)
        reps = oracles.class_representatives(P, elements)
        commutant[name] = {
            "P": [frac(c) for c in P],
            "max_degree": COMMUTANT_MAX_DEGREE,
            "elements": [[str(c) for c in oracles.to_fractions(e)] for e in elements],
            "representatives": [[str(c) for c in oracles.to_fractions(e)] for e in reps],
        }
    (HERE / "commutant_oracle.json").write_text(json.dumps(commutant, indent=1, sort_keys=True) + "\n")

    tame = []
    for A in TAME_CORPUS:
        res = oracles.plane_curve_min_genus(A)
        res["A"] = [frac(c) for c in A]
        tame.append(res)
    (HERE / "tame_corpus.json").write_text(json.dumps(tame, indent=1, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()

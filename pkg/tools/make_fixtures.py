#!/usr/bin/env python3
"""Regenerate the JSON fixtures shipped with the package from the catalog.

Run from the repository root after changing friezelab.catalog:

    python3 tools/make_fixtures.py
"""

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from friezelab import catalog
from friezelab.cc import cc_map
from friezelab.frieze import generate, growth
from friezelab.rep import grassmannian_table
from friezelab.theta import double_arrow_seed, theta

ROOT = Path(__file__).resolve().parent.parent / "src" / "friezelab" / "fixtures"


def dump(relative: str, payload) -> None:
    path = ROOT / relative
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    print("wrote", path.relative_to(ROOT.parent.parent.parent))


def tube_json(tube):
    return {"reps": [rep.to_json() for rep in tube]}


def goldens():
    f = generate([8, 2], depth=6)
    table = grassmannian_table(catalog.d4_m_lambda(2))
    character = cc_map(catalog.d4_m_lambda(2))
    seed, (u, v), _ = double_arrow_seed(catalog.d4_star(), 1000)
    return {
        "frieze_8_2": {
            "quiddity": ["8", "2"],
            "rows": [[str(x) for x in f.row(r)] for r in range(1, 7)],
        },
        "growth_8_2": {str(k): str(growth(f, k)) for k in (1, 2, 3)},
        "grassmannian_table": table.to_json(),
        "cc_m_lambda": character.laurent.to_json(),
        "cc_m_lambda_at_ones": str(character.at_ones),
        "theta_at_ones": str(theta(seed, u, v).integer),
    }


def main() -> None:
    dump("d4/quiver.json", catalog.d4_star().to_json())
    dump("d4/m_lambda.json", catalog.d4_m_lambda(2).to_json())
    dump("d4/m_lambda0.json", catalog.d4_m_lambda(0).to_json())
    for i, tube in enumerate(catalog.d4_tubes(), 1):
        dump("d4/tube%d.json" % i, tube_json(tube))
    dump("d4/goldens.json", goldens())
    dump("d4/double_arrow.json", catalog.d4_double_arrow().to_json())

    dump("e6/quiver.json", catalog.e6_affine().to_json())
    dump("e6/double_arrow.json", catalog.e_double_arrow(6).to_json())
    dump("e6/quiddities.json",
         {"tubes": [[str(a) for a in q] for q in catalog.E6_TUBE_QUIDDITIES]})
    dump("e6/tube_dimension_vectors.json",
         {"tubes": [[list(v) for v in tube]
                    for tube in catalog.E6_TUBE_DIMENSION_VECTORS]})
    dump("e7/quiver.json", catalog.e7_affine().to_json())
    dump("e7/double_arrow.json", catalog.e_double_arrow(7).to_json())
    dump("e8/quiver.json", catalog.e8_affine().to_json())
    dump("e8/double_arrow.json", catalog.e_double_arrow(8).to_json())

    dump("kronecker/quiver.json", catalog.kronecker().to_json())
    dump("kronecker/regular.json", catalog.kronecker_regular().to_json())


if __name__ == "__main__":
    main()

"""Record service payloads as fixtures for the explorer UI's contract tests."""

from __future__ import annotations

import json
import pathlib

from fastapi.testclient import TestClient

from cqt import cycle_quiver, dynkin_quiver, g_quiver, kronecker_quiver, t_quiver
from cqt.service import create_app

OUT = pathlib.Path(__file__).resolve().parent.parent / "frontend" / "fixtures"


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    client = TestClient(create_app())
    exchanges = []

    def record(endpoint: str, body: dict) -> dict:
        response = client.post(endpoint, json=body)
        exchanges.append(
            {
                "endpoint": endpoint,
                "body": body,
                "status": response.status_code,
                "response": response.json(),
            }
        )
        return response.json()

    a3 = dynkin_quiver("A", 3).to_json_dict()
    g22 = g_quiver(2, 2).to_json_dict()

    record("/api/mutate", {"quiver": a3, "vertex": "2"})

    # the G(2,2) -> T(2,2) replay chain, one hop at a time
    q = g22
    for vertex in ("2", "2'", "1"):
        q = record("/api/mutate", {"quiver": q, "vertex": vertex})["quiver"]

    record("/api/typecheck", {"quiver": g22})
    record("/api/typecheck", {"quiver": kronecker_quiver().to_json_dict()})
    record("/api/relations", {"quiver": g22})
    record("/api/relations", {"quiver": kronecker_quiver().to_json_dict()})
    record("/api/typecheck", {"quiver": a3})
    record("/api/relations", {"quiver": a3})

    fixtures = {
        "quivers": {
            "a3-linear": a3,
            "c3": cycle_quiver(3).to_json_dict(),
            "g22": g22,
            "t22": t_quiver(2, 2).to_json_dict(),
            "kronecker": kronecker_quiver().to_json_dict(),
        },
        "exchanges": exchanges,
    }
    path = OUT / "service-fixtures.json"
    path.write_text(json.dumps(fixtures, indent=2) + "\n", encoding="utf-8")
    print(f"wrote {len(exchanges)} exchanges to {path}")


if __name__ == "__main__":
    main()

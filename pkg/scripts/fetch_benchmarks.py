#!/usr/bin/env python3
"""Download the two benchmark matrices into tests/data/.

The acceptance suite and the experiment scripts pick them up automatically
when present; without them the synthetic instances are used alone.
Requires network access.
"""

import io
import sys
import tarfile
import urllib.request
from pathlib import Path

SOURCES = {
    "1138_bus": "https://suitesparse-collection-website.herokuapp.com/MM/HB/1138_bus.tar.gz",
    "dwt_1005": "https://suitesparse-collection-website.herokuapp.com/MM/HB/dwt_1005.tar.gz",
}

DATA_DIR = Path(__file__).resolve().parent.parent / "tests" / "data"


def fetch(name: str, url: str) -> None:
    target = DATA_DIR / f"{name}.mtx"
    if target.exists():
        print(f"{target} already present")
        return
    print(f"downloading {url}")
    with urllib.request.urlopen(url, timeout=60) as response:
        payload = response.read()
    with tarfile.open(fileobj=io.BytesIO(payload), mode="r:gz") as archive:
        member = next(m for m in archive.getmembers() if m.name.endswith(f"{name}.mtx"))
        extracted = archive.extractfile(member)
        assert extracted is not None
        DATA_DIR.mkdir(parents=True, exist_ok=True)
        target.write_bytes(extracted.read())
    print(f"wrote {target}")


def main() -> int:
    for name, url in SOURCES.items():
        try:
            fetch(name, url)
        except Exception as exc:  # noqa: BLE001 - report and continue
            print(f"failed to fetch {name}: {exc}", file=sys.stderr)
            return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

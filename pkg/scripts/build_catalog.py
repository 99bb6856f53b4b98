"""Regenerate src/kmroots/data/catalog.json from the classification search."""

import sys
import time
from pathlib import Path

from kmroots.catalog import dump_catalog
from kmroots.classify import build_records

if __name__ == "__main__":
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parents[1] / "src/kmroots/data/catalog.json"
    t0 = time.time()
    records = build_records()
    dump_catalog(records, out)
    print(f"wrote {len(records)} records to {out} in {time.time() - t0:.1f}s")

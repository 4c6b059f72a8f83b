#!/usr/bin/env python3
"""Fetch the soc-Epinions1 edge list from SNAP into the dataset cache.

Downloads https://snap.stanford.edu/data/soc-Epinions1.txt.gz, decompresses
it, and verifies the published counts (75,879 nodes, 508,837 edge lines)
before installing it as <cache>/soc-Epinions1.txt. The cache directory is
$NETROBUST_DATA_DIR, falling back to ./data. The SHA-256 of the downloaded
archive is printed for the record.
"""

import gzip
import hashlib
import os
import shutil
import sys
import tempfile
import urllib.request

URL = "https://snap.stanford.edu/data/soc-Epinions1.txt.gz"
EXPECTED_NODES = 75_879
EXPECTED_EDGE_LINES = 508_837


def verify(path: str) -> None:
    nodes = set()
    edge_lines = 0
    with open(path, "r", encoding="ascii") as f:
        for lineno, line in enumerate(f, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2:
                raise SystemExit(f"unexpected line {lineno}: {line!r}")
            nodes.update(int(p) for p in parts)
            edge_lines += 1
    if len(nodes) != EXPECTED_NODES or edge_lines != EXPECTED_EDGE_LINES:
        raise SystemExit(
            f"verification failed: {len(nodes)} nodes / {edge_lines} edge lines "
            f"(expected {EXPECTED_NODES} / {EXPECTED_EDGE_LINES})"
        )
    print(f"verified: {len(nodes)} nodes, {edge_lines} edge lines")


def main() -> None:
    cache = os.environ.get("NETROBUST_DATA_DIR", "data")
    os.makedirs(cache, exist_ok=True)
    target = os.path.join(cache, "soc-Epinions1.txt")
    if os.path.exists(target):
        print(f"{target} already present; verifying")
        verify(target)
        return

    print(f"downloading {URL}")
    with tempfile.TemporaryDirectory() as tmp:
        archive = os.path.join(tmp, "soc-Epinions1.txt.gz")
        urllib.request.urlretrieve(URL, archive)
        digest = hashlib.sha256(open(archive, "rb").read()).hexdigest()
        print(f"sha256(soc-Epinions1.txt.gz) = {digest}")

        plain = os.path.join(tmp, "soc-Epinions1.txt")
        with gzip.open(archive, "rb") as src, open(plain, "wb") as dst:
            shutil.copyfileobj(src, dst)
        verify(plain)
        shutil.move(plain, target)
    print(f"installed {target}")


if __name__ == "__main__":
    try:
        main()
    except KeyboardInterrupt:
        sys.exit(130)

#!/usr/bin/env python3
"""Download the two KONECT networks used by the acceptance benchmarks.

Produces:
    data/petster-hamster.edges   friendship network, ~2426 nodes
    data/crime-projection.edges  one-mode projection of the Moreno crime
                                 bipartite person-crime network onto persons

Both files are plain whitespace-separated edge lists that the toolkit's
loader reads directly. Needs network access; the benchmarks skip with a
note when the files are absent.
"""

import argparse
import io
import sys
import tarfile
import urllib.request
from pathlib import Path

SOURCES = {
    "petster-hamster": "http://konect.cc/files/download.tsv.petster-hamster.tar.bz2",
    "moreno_crime": "http://konect.cc/files/download.tsv.moreno_crime.tar.bz2",
}


def fetch_konect(name: str) -> bytes:
    url = SOURCES[name]
    print(f"fetching {url}")
    with urllib.request.urlopen(url, timeout=120) as resp:
        return resp.read()


def extract_edges(archive: bytes, name: str) -> list[tuple[int, int]]:
    edges = []
    with tarfile.open(fileobj=io.BytesIO(archive), mode="r:bz2") as tar:
        member = next(
            m for m in tar.getmembers()
            if m.name.split("/")[-1].startswith("out.")
        )
        payload = tar.extractfile(member)
        if payload is None:
            raise RuntimeError(f"{name}: could not read {member.name}")
        for raw in payload.read().decode("utf-8", "replace").splitlines():
            line = raw.strip()
            if not line or line.startswith("%") or line.startswith("#"):
                continue
            parts = line.split()
            edges.append((int(parts[0]), int(parts[1])))
    if not edges:
        raise RuntimeError(f"{name}: no edges found in archive")
    return edges


def write_edge_list(path: Path, edges: list[tuple[int, int]]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w") as out:
        for u, v in edges:
            out.write(f"{u} {v}\n")
    print(f"wrote {len(edges)} edges to {path}")


def project_bipartite(edges: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """One-mode projection onto the left class: two persons are linked when
    they share at least one right-side node (crime)."""
    by_event: dict[int, list[int]] = {}
    for person, event in edges:
        by_event.setdefault(event, []).append(person)
    seen = set()
    for members in by_event.values():
        members = sorted(set(members))
        for i, u in enumerate(members):
            for v in members[i + 1:]:
                seen.add((u, v))
    return sorted(seen)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="data", type=Path,
                        help="where to put the edge lists (default: data/)")
    args = parser.parse_args()

    hamster = extract_edges(fetch_konect("petster-hamster"), "petster-hamster")
    write_edge_list(args.out_dir / "petster-hamster.edges", hamster)

    crime = extract_edges(fetch_konect("moreno_crime"), "moreno_crime")
    # the bipartite file indexes both classes from 1; keep them apart before
    # projecting by shifting the event ids out of the person id range
    shift = max(u for u, _ in crime) + 1
    projection = project_bipartite([(u, v + shift) for u, v in crime])
    write_edge_list(args.out_dir / "crime-projection.edges", projection)
    return 0


if __name__ == "__main__":
    sys.exit(main())

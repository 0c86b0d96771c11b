#!/usr/bin/env python3
"""Regenerate the bundled diagram corpus in data/diagrams."""

import pathlib
import random

OUT = pathlib.Path(__file__).resolve().parent.parent / "data" / "diagrams"

FLAT = {
    "flat_hopf": "1,2,1,2",
    "flat_hopf_mirror": "2,1,2,1",
    "flat_unlink": "1,1,2,2",
    "flat_nested": "1,2,2,1",
    "flat_3_1": "1,2,3,4,1,2,3,4",
    "flat_4_1": "1,2,4,3,1,2,4,3",
    "flat_5_2": "1,2,3,5,6,4,5,6,1,2,3,4",
    "flat_6_1": "1,2,3,1,2,4,6,5,3,4,6,5",
}

HAND = {
    "valley": ["1,0; 1,3; 2,3; 2,1; 3,1; 3,4; 4,4; 4,0"],
    "step_up": ["1,0; 1,1; 2,1; 2,2; 3,2; 3,0"],
    "step_down": ["1,0; 1,2; 2,2; 2,1; 3,1; 3,0"],
    "valley_over_arch": ["1,0; 1,3; 2,3; 2,1; 4,1; 4,4; 5,4; 5,0", "3,0; 3,2; 6,2; 6,0"],
    "step_hopf": ["1,0; 1,1; 3,1; 3,3; 4,3; 4,0", "2,0; 2,2; 5,2; 5,0"],
}


def arches(word):
    labels = [int(t) for t in word.split(",")]
    feet = {}
    for pos, lab in enumerate(labels, start=1):
        feet.setdefault(lab, []).append(pos)
    return [f"{p},0; {p},{lab}; {q},{lab}; {q},0" for lab, (p, q) in sorted(feet.items())]


def random_diagram(rng, bands, max_xlines):
    sizes = [rng.randint(1, max_xlines) for _ in range(bands)]
    columns = list(range(1, sum(k + 1 for k in sizes) + 1))
    heights = list(range(1, sum(sizes) + 1))
    rng.shuffle(columns)
    rng.shuffle(heights)
    out = []
    for k in sizes:
        xs = [columns.pop() for _ in range(k + 1)]
        ys = [heights.pop() for _ in range(k)]
        path = [(xs[0], 0)]
        for i in range(k):
            path.append((xs[i], ys[i]))
            path.append((xs[i + 1], ys[i]))
        path.append((xs[k], 0))
        out.append("; ".join(f"{x},{y}" for x, y in path))
    return out


def write(name, lines, note):
    (OUT / f"{name}.txt").write_text(f"# {note}\n" + "\n".join(lines) + "\n")


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name, word in FLAT.items():
        write(name, arches(word), f"flat, reads ({word})")
    for name, lines in HAND.items():
        write(name, lines, name.replace("_", " "))
    rng = random.Random(20240601)
    for i in range(12):
        bands = 1 + i % 3
        write(f"random_{i:02d}", random_diagram(rng, bands, 3), f"random, {bands} band(s)")


if __name__ == "__main__":
    main()

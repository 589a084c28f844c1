"""Regenerate the bundled example triangulations in src/trikit/corpus/.

Small items are written by hand; larger ones grow from them by seeded moves.
"""

import random
from pathlib import Path

from trikit.moves import MoveKind, apply_move, enumerate_moves
from trikit.triangulation import parse, serialize, validate

OUT = Path(__file__).resolve().parents[1] / "src" / "trikit" / "corpus"

HAND = {
    "ball_1": ["0: _ | _ | _ | _"],
    "solid_torus_1": ["0: _ | _ | 0:2031 | 0:1302"],
    "folded_ball_1": ["0: _ | _ | 0:0132 | 0:0132"],
    "s3_1": ["0: 0:1023 | 0:1023 | 0:0132 | 0:0132"],
    "l41_1": ["0: 0:1230 | 0:3012 | 0:1230 | 0:3012"],
    "l52_1": ["0: 0:1230 | 0:3012 | 0:2031 | 0:1302"],
    "s3_2": ["0: 1:0123 | 1:0123 | 1:0123 | 1:0123", "1: 0:0123 | 0:0123 | 0:0123 | 0:0123"],
}

K = MoveKind
# name: (start, seed, target size, kinds that grow the triangulation, shuffle steps)
GROWN = {
    "ball_2": ("ball_1", 1, 2, {K.BdyAttach1}, 0),
    "s3_3": ("s3_2", 1, 3, {K.TwoThree}, 0),
    "solid_torus_3": ("solid_torus_1", 3, 3, {K.BdyAttach1, K.BdyAttach2}, 0),
    "l41_4": ("l41_1", 1, 4, {K.OneFour}, 0),
    "s3_6": ("s3_2", 6, 6, {K.TwoThree, K.OneFour}, 4),
    "solid_torus_7": ("solid_torus_1", 7, 7, {K.TwoThree, K.BdyAttach1, K.BdyAttach2}, 4),
    "l52_12": ("l52_1", 12, 12, {K.TwoThree, K.OneFour}, 6),
}


def grow(tri, seed, target, kinds, shuffle):
    rng = random.Random(seed)
    while tri.size < target:
        sites = [s for s in enumerate_moves(tri, kinds) if tri.size + s.kind.delta <= target]
        tri, _ = apply_move(tri, rng.choice(sites))
    for _ in range(shuffle):
        sites = enumerate_moves(tri, {K.TwoThree})
        tri, _ = apply_move(tri, rng.choice(sites))
        sites = enumerate_moves(tri, {K.ThreeTwo})
        tri, _ = apply_move(tri, rng.choice(sites))
    return tri


def build():
    """File contents by corpus name."""
    made = {}
    for name, rows in HAND.items():
        made[name] = parse(f"tri v1\ntets={len(rows)}\n" + "\n".join(rows) + "\n")
    for name, (start, seed, target, kinds, shuffle) in GROWN.items():
        made[name] = grow(made[start], seed, target, kinds, shuffle)
    out = {}
    for name, tri in made.items():
        assert not validate(tri), name
        out[name] = f"# {name}\n" + serialize(tri)
    return out


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name, text in build().items():
        (OUT / f"{name}.tri").write_text(text)
        print(name)


if __name__ == "__main__":
    main()

"""Regenerate the built-in map files under src/rrt_rewire/maps/.

    python scripts/make_maps.py [OUTPUT_DIR]
"""

import json
import math
import sys
from pathlib import Path


def rect(x0, y0, x1, y1):
    return [[x0, y0], [x1, y0], [x1, y1], [x0, y1]]


def square(cx, cy, side):
    h = side / 2
    return rect(round(cx - h, 3), round(cy - h, 3), round(cx + h, 3), round(cy + h, 3))


def doc(name, start, goal, obstacles):
    return {"name": name, "width": 600, "height": 600, "epsilon": 0,
            "start": start, "goal": goal, "obstacles": obstacles}


def map1():
    # two thick barriers, each pierced by one narrow corridor; corridors on opposite sides
    th, cw = 100, 24
    return doc("map1-narrow-passage", [60, 60], [540, 540], [
        rect(0, 150, 420, 150 + th),
        rect(420 + cw, 150, 600, 150 + th),
        rect(0, 370, 150, 370 + th),
        rect(150 + cw, 370, 600, 370 + th),
    ])


def map2():
    # a handful of scattered bars between opposite corners
    return doc("map2-moderate", [50, 550], [550, 50], [
        rect(120, 380, 300, 410),
        rect(200, 150, 230, 330),
        rect(330, 220, 480, 250),
        rect(360, 400, 390, 560),
        rect(60, 80, 160, 110),
        rect(450, 90, 480, 200),
    ])


def map3():
    # 50 squares on two concentric rings; the rings read as curved walls
    squares = []
    for k in range(30):
        a = 2 * math.pi * k / 30
        squares.append(square(300 + 170 * math.cos(a), 300 + 170 * math.sin(a), 20))
    for k in range(20):
        a = 2 * math.pi * (k + 0.5) / 20
        squares.append(square(300 + 90 * math.cos(a), 300 + 90 * math.sin(a), 18))
    return doc("map3-fifty-squares", [40, 300], [560, 300], squares)


def map4():
    # goal inside two nested boxes; outer entrance faces right, inner entrance faces left
    w, gap = 20, 24
    h0, h1 = 300 - gap / 2, 300 + gap / 2
    obs = [
        rect(100, 100, 500, 100 + w),
        rect(100, 500 - w, 500, 500),
        rect(100, 100 + w, 100 + w, 500 - w),
        rect(500 - w, 100 + w, 500, h0),
        rect(500 - w, h1, 500, 500 - w),
        rect(220, 220, 380, 220 + w),
        rect(220, 380 - w, 380, 380),
        rect(380 - w, 220 + w, 380, 380 - w),
        rect(220, 220 + w, 220 + w, h0),
        rect(220, h1, 220 + w, 380 - w),
    ]
    return doc("map4-narrow-entrance", [50, 50], [300, 300], obs)


MAPS = {1: map1, 2: map2, 3: map3, 4: map4}

if __name__ == "__main__":
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).parent.parent / "src" / "rrt_rewire" / "maps"
    for k, build in MAPS.items():
        with open(out / f"map{k}.json", "w") as fh:
            json.dump(build(), fh, indent=1)
            fh.write("\n")

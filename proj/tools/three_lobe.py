#!/usr/bin/env python3
"""Writes the three-lobe fixture: a domain with 3-fold rotational symmetry
whose center is the origin and whose farthest points from the origin are
interior points reached by three shortest paths each.

Each lobe is an arm of the outer boundary holding a V-shaped cup that opens
outward. A narrow corridor runs from the outer side of the cup down to the
bottom of the V and splits the cup into two holes. A point inside the V is
reached through the corridor or around either rim."""
import argparse
import math

ARM_HALF_WIDTH = 3.0
ARM_END = 8.3
CUP_BACK = 4.0        # back face of the cup
CUP_HALF_WIDTH = 2.5
APEX = 5.0            # bottom of the V
RIM = 8.0             # x of the rims
MOUTH_HALF_WIDTH = 2.0
CORRIDOR_ENTRY = 6.3  # where the corridor leaves the outer side
CORRIDOR_WIDTH = 0.1
RIM_TOP = 2.45        # keeps the rim piece off the line of the cup's back face
TIP_FLARE = 0.15      # slants the tip faces so the two rims and tips are not collinear


def rotate(p, k):
    t = 2.0 * math.pi * k / 3.0
    c, s = math.cos(t), math.sin(t)
    return [c * p[0] - s * p[1], s * p[0] + c * p[1]]


def lobe_holes(entry):
    wc, h = CUP_HALF_WIDTH, MOUTH_HALF_WIDTH
    top_in = (entry, wc)
    bottom = (APEX, 0.0)
    dx, dy = bottom[0] - top_in[0], bottom[1] - top_in[1]
    length = math.hypot(dx, dy)
    # Unit normal pointing to the rim side of the corridor.
    nx, ny = -dy / length, dx / length
    if nx < 0:
        nx, ny = -nx, -ny
    off = CORRIDOR_WIDTH / 2.0

    def shift(p, s):
        return [p[0] + s * off * nx, p[1] + s * off * ny]

    # Corridor walls meet the top side and the V walls.
    def wall_end_on_line(s, y):
        p = shift(top_in, s)
        t = (y - p[1]) / dy
        return [p[0] + t * dx, y]

    rim_piece = [wall_end_on_line(1, RIM_TOP), [RIM + TIP_FLARE, RIM_TOP], [RIM, h], shift(bottom, 1)]
    body = [[CUP_BACK, wc], wall_end_on_line(-1, wc), shift(bottom, -1),
            [RIM, -h], [RIM + TIP_FLARE, -wc], [CUP_BACK, -wc]]
    return [rim_piece, body]


def outer_ring():
    w = ARM_HALF_WIDTH
    joint = w / math.sin(math.pi / 3.0)
    ring = []
    for k in range(3):
        ring += [rotate([ARM_END, -w], k), rotate([ARM_END, w], k)]
        t = 2.0 * math.pi * k / 3.0 + math.pi / 3.0
        ring.append([joint * math.cos(t), joint * math.sin(t)])
    return ring


def clean(v):
    return 0.0 if abs(v) < 1e-12 else v


def format_ring(ring):
    return "[" + ", ".join("[%.12g, %.12g]" % (clean(x), clean(y)) for x, y in ring) + "]"


def format_domain(outer, holes):
    body = ",\n    ".join(format_ring(h) for h in holes)
    return '{\n  "outer": %s,\n  "holes": [\n    %s\n  ]\n}' % (format_ring(outer), body)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("output", nargs="?")
    parser.add_argument("--entry", type=float, default=CORRIDOR_ENTRY)
    args = parser.parse_args()
    holes = [[rotate(p, k) for p in h] for k in range(3) for h in lobe_holes(args.entry)]
    text = format_domain(outer_ring(), holes)
    if args.output:
        with open(args.output, "w") as f:
            f.write(text + "\n")
    else:
        print(text)


if __name__ == "__main__":
    main()

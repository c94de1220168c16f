"""Static SVG drawings of plane graphs that carry coordinates."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MissingCoordinates, ValidationError
from .plane_graph import PlaneGraph, face_walks


@dataclass(frozen=True)
class RenderSpec:
    width: int = 480
    height: int = 480
    stroke: float = 1.5
    radius: float = 3.5
    label_faces: bool = True
    margin: int = 24

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0 or self.stroke <= 0 or self.radius <= 0:
            raise ValidationError("render dimensions must be positive")
        if 2 * self.margin >= min(self.width, self.height):
            raise ValidationError("margin leaves no room to draw")


def _fmt(v: float) -> str:
    return f"{v:.2f}".rstrip("0").rstrip(".")


def render(graph: PlaneGraph, spec: RenderSpec = RenderSpec()) -> str:
    if graph.coords is None:
        raise MissingCoordinates("graph has no coordinates to draw")
    xs = [p.x for p in graph.coords]
    ys = [p.y for p in graph.coords]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1)
    scale = min(spec.width, spec.height) - 2 * spec.margin
    scale /= span
    x0, y1 = min(xs), max(ys)

    def at(v):
        p = graph.coords[v]
        # SVG y grows downwards
        return spec.margin + (p.x - x0) * scale, spec.margin + (y1 - p.y) * scale

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{spec.width}" height="{spec.height}" '
        f'viewBox="0 0 {spec.width} {spec.height}">',
        "<!-- y axis flipped: input coordinates are y-up, SVG is y-down -->",
    ]
    walks = face_walks(graph)
    out.append('<g class="faces" fill="#e8eef7" stroke="none">')
    for walk in walks[1:]:
        pts = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in map(at, walk))
        out.append(f'<polygon points="{pts}"/>')
    out.append("</g>")
    out.append(f'<g class="edges" stroke="#1f2937" stroke-width="{_fmt(spec.stroke)}" stroke-linecap="round">')
    for u, v in graph.edges:
        (ax, ay), (bx, by) = at(u), at(v)
        out.append(f'<line x1="{_fmt(ax)}" y1="{_fmt(ay)}" x2="{_fmt(bx)}" y2="{_fmt(by)}"/>')
    out.append("</g>")
    out.append('<g class="vertices" fill="#b91c1c">')
    for v in range(graph.n):
        x, y = at(v)
        out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(spec.radius)}"/>')
    out.append("</g>")
    if spec.label_faces:
        out.append('<g class="labels" font-family="sans-serif" font-size="11" text-anchor="middle" fill="#374151">')
        for walk in walks[1:]:
            cx = sum(at(v)[0] for v in walk) / len(walk)
            cy = sum(at(v)[1] for v in walk) / len(walk)
            out.append(f'<text x="{_fmt(cx)}" y="{_fmt(cy + 4)}">{len(walk)}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"

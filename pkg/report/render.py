import io
from fractions import Fraction
from typing import List

import matplotlib
import pandas as pd
from matplotlib.figure import Figure

from gkz.fan import GKZFan
from lattice.vectors import LatticeVector
from report.models import Report, StratificationRecord

ASCII_RADIUS = 10
SVG_INCHES = 5
SVG_HASH_SALT = "vgit"
_WALL_MARKS = "0123456789abcdefghijklmnopqrstuvwxyz"


def _mark(index: int) -> str:
    return _WALL_MARKS[index] if index < len(_WALL_MARKS) else "*"


def _reach(v: LatticeVector) -> int:
    return max(abs(v.x), abs(v.y))


def render_ascii(fan: GKZFan, chamber_labels: List[str], wall_labels: List[str]) -> str:
    """Character grid centred on the origin, walls drawn with their index, chambers with their label."""
    r = ASCII_RADIUS
    grid = [[" "] * (2 * r + 1) for _ in range(2 * r + 1)]

    def put(x: int, y: int, ch: str):
        if -r <= x <= r and -r <= y <= r:
            grid[r - y][x + r] = ch

    for index, wall in enumerate(fan.walls):
        reach = _reach(wall.ray)
        for t in range(1, r + 1):
            put(round(Fraction(t * wall.ray.x, reach)), round(Fraction(t * wall.ray.y, reach)), _mark(index))

    for index, cone in enumerate(fan.chambers):
        middle = cone.a + cone.b
        scale = Fraction(2 * r, 3 * _reach(middle))
        x, y = round(middle.x * scale), round(middle.y * scale)
        for offset, ch in enumerate(chamber_labels[index]):
            put(x + offset, y, ch)
    put(0, 0, "+")

    lines = ["".join(row).rstrip() for row in grid]
    lines.append("")
    for index, wall in enumerate(fan.walls):
        lines.append(f"{_mark(index)}: {wall_labels[index]} along {wall.ray}")
    for index, cone in enumerate(fan.chambers):
        lines.append(f"{chamber_labels[index]}: cone{cone.a}{cone.b}")
    return "\n".join(lines) + "\n"


def render_svg(fan: GKZFan, chamber_labels: List[str], wall_labels: List[str]) -> str:
    """
    Static SVG of the fan in lattice coordinates. Each wall is drawn out to the
    same box and marked at its primitive lattice point.
    """
    longest = max(_reach(wall.ray) for wall in fan.walls)
    fig = Figure(figsize=(SVG_INCHES, SVG_INCHES))
    ax = fig.add_subplot()
    for index, wall in enumerate(fan.walls):
        steps = longest // _reach(wall.ray)
        ex, ey = wall.ray.x * steps, wall.ray.y * steps
        ax.plot([0, ex], [0, ey], color="black", linewidth=1.5)
        ax.plot([wall.ray.x], [wall.ray.y], marker="o", markersize=4, color="black")
        ax.annotate(wall_labels[index], (ex, ey), fontsize=11, family="monospace")

    for index, cone in enumerate(fan.chambers):
        middle = cone.a + cone.b
        scale = Fraction(2 * longest, 3 * _reach(middle))
        ax.text(float(middle.x * scale), float(middle.y * scale), chamber_labels[index],
                fontsize=13, family="serif", ha="center", va="center")

    reach = longest * 1.25
    ax.set_xlim(-reach, reach)
    ax.set_ylim(-reach, reach)
    ax.set_aspect("equal")
    ax.axis("off")

    buffer = io.StringIO()
    with matplotlib.rc_context({"svg.hashsalt": SVG_HASH_SALT, "svg.fonttype": "none"}):
        fig.savefig(buffer, format="svg", metadata={"Date": None})
    return buffer.getvalue()


def render_fan(fan: GKZFan, chamber_labels: List[str], wall_labels: List[str], fmt: str = "ascii") -> str:
    if fmt == "svg":
        return render_svg(fan, chamber_labels, wall_labels)
    return render_ascii(fan, chamber_labels, wall_labels)


def strata_table(record: StratificationRecord) -> str:
    rows = [{"lambda": f"({record.lambda_max[0]},{record.lambda_max[1]})", "Z": "max", "S": record.s_max, "eta": ""}]
    rows += [
        {"lambda": f"({s.lam[0]},{s.lam[1]})", "Z": s.z, "S": s.s, "eta": s.eta_plus}
        for s in record.strata
    ]
    return pd.DataFrame(rows, columns=["lambda", "Z", "S", "eta"]).to_string(index=False)


def _section(title: str, body: str) -> str:
    return f"== {title} ==\n{body}\n"


def render_text(report: Report) -> str:
    """Human-readable report: one table per section."""
    parts: List[str] = []
    if report.fan is not None:
        walls = pd.DataFrame(
            [{"wall": w.label, "ray": tuple(w.ray), "source": w.source_group} for w in report.fan.walls]
        )
        chambers = pd.DataFrame(
            [{"chamber": c.label, "from": tuple(c.generators[0]), "to": tuple(c.generators[1])}
             for c in report.fan.chambers]
        )
        parts.append(_section("fan", walls.to_string(index=False) + "\n\n" + chambers.to_string(index=False)))
    for record in report.strata or []:
        parts.append(_section(f"{record.title} at {tuple(record.linearization)}", strata_table(record)))
    if report.walls:
        table = pd.DataFrame(
            [
                {
                    "wall": w.label,
                    "verdict": w.verdict,
                    "K": w.k,
                    "lambda+": tuple(w.lambda_plus),
                    "Z": w.shared_z or "",
                    "eta": w.eta,
                    "weights": " ".join(str(d) for d in w.residual_weights),
                }
                for w in report.walls
            ]
        )
        parts.append(_section("walls", table.to_string(index=False)))
    if report.horn:
        table = pd.DataFrame([{"lambda": tuple(h.lam), "pullback": h.rendered} for h in report.horn])
        parts.append(_section("horn", table.to_string(index=False)))
    if report.expected:
        table = pd.DataFrame(
            [
                {
                    "wall": e.label,
                    "discriminant": e.discriminant_length,
                    "collection": e.collection_length,
                    "agree": "n/a" if e.agree is None else e.agree,
                }
                for e in report.expected
            ]
        )
        parts.append(_section("expected", table.to_string(index=False)))
    if report.kmut:
        table = pd.DataFrame(
            [{"check": k.check, "seed": k.seed, "instances": k.instances, "passed": k.passed,
              "failed": k.failed, "skipped": k.skipped} for k in report.kmut]
        )
        parts.append(_section("kmut", table.to_string(index=False)))
    for warning in report.warnings:
        parts.append(f"warning: {warning}\n")
    return "\n".join(parts) if parts else "(no tasks)\n"

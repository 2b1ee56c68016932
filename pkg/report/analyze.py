from typing import Dict, List, Optional

from discriminant.expected import expected_autoequivalences
from discriminant.horn import horn_pullback, normalize, render_form
from discriminant.intersection import wall_intersection_length
from gkz.fan import GKZFan, build_fan, group_rays
from gkz.weights import WeightMatrix, parse_and_validate
from kmut.checks import run_check
from lattice.vectors import LatticeVector
from report.models import (
    AnalysisRequest,
    ChamberRecord,
    ExpectedRecord,
    FanRecord,
    HornFactor,
    HornRecord,
    InputEcho,
    KmutRecord,
    PointRecord,
    RayRecord,
    Report,
    StratificationRecord,
    StratumRecord,
    SubquotientRecord,
    WallRecord,
    WallSummary,
    WindowRecord,
)
from stratification.coordsets import render_v_notation
from stratification.kn import Stratification, chamber_sample, kn_stratify
from stratification.walls import BalancedWallReport, Verdict, fixed_subquotient, wall_crossing
from utils.exceptions import MalformedInput
from utils.logger import logger

GEOMETRIC_TASKS = {"fan", "strata", "walls", "horn", "expected"}

_NUMERALS = [
    (1000, "M"), (900, "CM"), (500, "D"), (400, "CD"), (100, "C"), (90, "XC"),
    (50, "L"), (40, "XL"), (10, "X"), (9, "IX"), (5, "V"), (4, "IV"), (1, "I"),
]


def roman(n: int) -> str:
    if n <= 0:
        raise MalformedInput(f"Roman numerals start at 1, got {n}")
    out = []
    for value, symbol in _NUMERALS:
        count, n = divmod(n, value)
        out.append(symbol * count)
    return "".join(out)


def chamber_labels(fan: GKZFan, custom: Optional[List[str]] = None) -> List[str]:
    """Roman numerals counterclockwise from the positive x-axis unless a relabeling is given."""
    if custom is None:
        return [roman(i + 1) for i in range(len(fan.chambers))]
    if len(custom) != len(fan.chambers):
        raise MalformedInput(f"Expected {len(fan.chambers)} chamber labels, got {len(custom)}")
    return list(custom)


def wall_labels(fan: GKZFan, custom: Optional[List[str]] = None) -> List[str]:
    if custom is None:
        return [f"wall{i}" for i in range(len(fan.walls))]
    if len(custom) != len(fan.walls):
        raise MalformedInput(f"Expected {len(fan.walls)} wall labels, got {len(custom)}")
    return list(custom)


def _vector(raw: List[int], what: str) -> LatticeVector:
    if len(raw) != 2:
        raise MalformedInput(f"{what} must have two entries, got {raw}")
    return LatticeVector(*raw)


class Analysis:
    """One parsed weight matrix with its fan, labels and cached wall crossings."""

    def __init__(self, request: AnalysisRequest):
        self.request = request
        self.w: WeightMatrix = parse_and_validate(request.weights, request.labels)
        self.fan = build_fan(group_rays(self.w))
        self.chamber_labels = chamber_labels(self.fan, request.chamber_labels)
        self.wall_labels = wall_labels(self.fan, request.wall_labels)
        self._crossings: Dict[int, BalancedWallReport] = {}

        for index, check in ((request.chamber, self.fan.chamber), (request.near_wall, self.fan.wall),
                             (request.wall, self.fan.wall)):
            if index is not None:
                check(index)

    def crossing(self, wall_index: int) -> BalancedWallReport:
        if wall_index not in self._crossings:
            self._crossings[wall_index] = wall_crossing(self.w, self.fan, wall_index)
        return self._crossings[wall_index]

    def selected_walls(self) -> List[int]:
        if self.request.wall is not None:
            return [self.request.wall]
        return list(range(len(self.fan.walls)))

    # records

    def fan_record(self) -> FanRecord:
        rays = [
            RayRecord(
                chi=g.chi.as_list(),
                multipliers=list(g.multipliers),
                total=g.total,
                members=[self.w.labels[i] for i in g.member_columns],
            )
            for g in self.fan.ray_groups
        ]
        walls = [
            WallSummary(
                index=i,
                label=self.wall_labels[i],
                ray=wall.ray.as_list(),
                source_group=wall.source_group,
                opposite_group=wall.opposite_group,
            )
            for i, wall in enumerate(self.fan.walls)
        ]
        chambers = [
            ChamberRecord(index=i, label=self.chamber_labels[i], generators=[c.a.as_list(), c.b.as_list()])
            for i, c in enumerate(self.fan.chambers)
        ]
        return FanRecord(rays=rays, walls=walls, chambers=chambers)

    def stratification_record(self, strat: Stratification, title: str) -> StratificationRecord:
        return StratificationRecord(
            title=title,
            chamber=strat.chamber,
            chamber_label=self.chamber_labels[strat.chamber],
            linearization=strat.linearization.as_list(),
            lambda_max=strat.max_stratum.lam.as_list(),
            s_max=render_v_notation(strat.max_stratum.s_set, self.w),
            strata=[
                StratumRecord(
                    lam=s.lam.as_list(),
                    mu_squared=f"{'-' if s.mu.sign < 0 else ''}{s.mu.squared}",
                    z=render_v_notation(s.z_set, self.w),
                    s=render_v_notation(s.s_set, self.w),
                    eta_plus=s.eta_plus,
                    eta_minus=s.eta_minus,
                )
                for s in strat.strata
            ],
        )

    def wall_sides(self, wall_index: int) -> List[StratificationRecord]:
        report = self.crossing(wall_index)
        label = self.wall_labels[wall_index]
        return [
            self.stratification_record(side, f"near {label}, chamber {self.chamber_labels[side.chamber]}")
            for side in (report.side_plus, report.side_minus)
        ]

    def strata_records(self) -> List[StratificationRecord]:
        request = self.request
        if request.near_wall is not None:
            return self.wall_sides(request.near_wall)
        if request.chamber is not None:
            chi = chamber_sample(self.fan, request.chamber)
            strat = kn_stratify(self.w, chi, self.fan)
            return [self.stratification_record(strat, f"chamber {self.chamber_labels[strat.chamber]} at {chi}")]
        records = []
        for index in range(len(self.fan.walls)):
            records.extend(self.wall_sides(index))
        return records

    def wall_record(self, wall_index: int) -> WallRecord:
        report = self.crossing(wall_index)
        window = report.window(self.request.window_weight)
        sub = fixed_subquotient(self.fan, report.flipped_plus, wall_index)
        return WallRecord(
            index=wall_index,
            label=self.wall_labels[wall_index],
            verdict=report.verdict.value,
            k=report.k,
            chi_plus=report.chi_plus.as_list(),
            chi_minus=report.chi_minus.as_list(),
            chamber_plus=self.chamber_labels[report.side_plus.chamber],
            chamber_minus=self.chamber_labels[report.side_minus.chamber],
            lambda_plus=report.flipped_plus.lam.as_list(),
            lambda_minus=report.flipped_minus.lam.as_list(),
            shared_z=render_v_notation(report.shared_z, self.w) if report.shared_z is not None else None,
            eta=report.eta,
            window=WindowRecord(
                weight=window.weight,
                g_window=list(window.g_window),
                c_window=list(window.c_window),
                next_g_window=list(window.next_g_window),
                dual_weight=window.dual_weight,
            ),
            residual_weights=list(report.residual_weights),
            fixed_subquotient=SubquotientRecord(
                positive_weights=list(sub.positive_weights),
                negative_weights=list(sub.negative_weights),
                collection_length=sub.collection_length,
                weighted_projective=sub.weighted_projective,
            ),
            sides=self.wall_sides(wall_index),
        )

    def horn_record(self, raw: List[int]) -> HornRecord:
        lam = _vector(raw, "lambda")
        value = normalize(self.fan, horn_pullback(self.fan, lam))
        return HornRecord(
            lam=lam.as_list(),
            coefficient=str(value.coefficient),
            factors=[HornFactor(form=render_form(f), exponent=e) for f, e in value.factors],
            rendered=value.render(),
        )

    def expected_record(self, wall_index: int) -> ExpectedRecord:
        report = self.crossing(wall_index)
        sub = fixed_subquotient(self.fan, report.flipped_plus, wall_index)
        intersection = wall_intersection_length(self.fan, wall_index)
        expected = expected_autoequivalences(self.fan, wall_index, sub, intersection)
        return ExpectedRecord(
            wall=wall_index,
            label=self.wall_labels[wall_index],
            applicable=expected.applicable,
            d_formula=intersection.d_formula,
            points=[
                PointRecord(
                    zero_of=render_form(p.point.form),
                    ray_groups=list(p.point.ray_groups),
                    functional=p.point.functional.as_list(),
                    lengths={self.chamber_labels[c]: n for c, n in sorted(p.lengths.items())},
                    length=p.length,
                )
                for p in intersection.per_point
            ],
            discriminant_length=expected.discriminant_length,
            collection_length=expected.collection_length,
            agree=expected.agree,
            note=expected.note,
        )

    def warnings(self, walls: List[int]) -> List[str]:
        notes = []
        for index in walls:
            label = self.wall_labels[index]
            if self.fan.walls[index].opposite_group is not None:
                notes.append(f"{label}: wall direction is itself a weight ray, expected count inapplicable")
            if index in self._crossings and self._crossings[index].verdict is Verdict.NOT_BALANCED:
                notes.append(f"{label}: flipped strata do not share a fixed locus")
        return notes


def run_analyze(request: AnalysisRequest) -> Report:
    """Run every requested task and assemble the report; nothing is returned on error."""
    tasks = list(dict.fromkeys(request.tasks))
    report = Report(input=InputEcho(weights=request.weights, labels=request.labels, tasks=tasks))

    analysis = None
    if request.weights is not None:
        analysis = Analysis(request)
        report.input.labels = list(analysis.w.labels)
    elif GEOMETRIC_TASKS.intersection(tasks):
        raise MalformedInput(f"Tasks {sorted(GEOMETRIC_TASKS.intersection(tasks))} need a weight matrix")

    if "fan" in tasks:
        report.fan = analysis.fan_record()
    if "strata" in tasks:
        report.strata = analysis.strata_records()
    if "walls" in tasks:
        report.walls = [analysis.wall_record(i) for i in analysis.selected_walls()]
    if "horn" in tasks:
        report.horn = [analysis.horn_record(lam) for lam in request.lambdas]
    if "expected" in tasks:
        report.expected = [analysis.expected_record(i) for i in analysis.selected_walls()]
    if "kmut" in tasks:
        report.kmut = []
        for name in request.kmut_checks:
            result = run_check(name, request.corpus_size, request.seed)
            report.kmut.append(
                KmutRecord(
                    check=result.check,
                    seed=result.seed,
                    instances=result.instances,
                    passed=result.passed,
                    failed=result.failed,
                    skipped=result.skipped,
                    notes=result.notes,
                )
            )

    if analysis is not None and GEOMETRIC_TASKS.intersection(tasks):
        report.warnings = analysis.warnings(analysis.selected_walls())
    logger.info(f"Analysis finished: tasks={tasks}, warnings={len(report.warnings)}")
    return report

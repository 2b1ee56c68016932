from report.models import AnalysisRequest, Report
from report.loader import InputLoader, build_request
from report.analyze import Analysis, chamber_labels, roman, run_analyze, wall_labels
from report.render import render_fan, render_text

__all__ = [
    "AnalysisRequest",
    "Report",
    "InputLoader",
    "build_request",
    "Analysis",
    "chamber_labels",
    "roman",
    "run_analyze",
    "wall_labels",
    "render_fan",
    "render_text",
]

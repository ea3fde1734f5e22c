"""Experiment harness: plans, runner, reports and the surrogate profile."""

from .plan import ExperimentPlan, RunConfiguration, plan_from_entries
from .profile import emit_profile, profile_grid
from .reports import RunReport, summarize
from .runner import PlanResult, complete_image, run_configuration, run_plan, solve_channels

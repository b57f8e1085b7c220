from .agent import apply_step, choose_step
from .grid_map import coverage_stats, load_map, neighbors, parse_map, reachable_set, serialize_map
from .ripple_field import bfs_oracle, propagate, relax_sweep
from .scenarios import load_scenarios
from .sim import random_start, run_episode, tick
from .visibility import apply_vision, line_of_sight, visible_set

__all__ = [
    "apply_step",
    "apply_vision",
    "bfs_oracle",
    "choose_step",
    "coverage_stats",
    "line_of_sight",
    "load_map",
    "load_scenarios",
    "neighbors",
    "parse_map",
    "propagate",
    "random_start",
    "reachable_set",
    "relax_sweep",
    "run_episode",
    "serialize_map",
    "tick",
    "visible_set",
]

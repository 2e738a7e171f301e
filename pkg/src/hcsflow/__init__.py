"""Homotopic curve shortening among point obstacles, with an affine curve-shortening-flow reference."""
from ._kernels import BACKEND, HAVE_NUMBA
from .acsf import AcsfState, curvature_circle, run_to_length_fraction
from .engine import CollapsedCurveError, hcs_step, release_visit, run, shorten
from .experiments import DELTA, ExperimentReport, estimate_constant, run_conjecture_experiment
from .geom import Polyline, h_distance, is_simple, orient, polyline_length, total_abs_curvature
from .homotopy import edge_sequence, homotopic, reduce, triangulate
from .layers import convex_layers, hull_curve
from .obstacles import ExplicitObstacleSet, GridObstacleSet, generate_random, release_chain
from .pcurve import PCurve, canonicalize, snap_to_obstacles

__version__ = "0.1.0"

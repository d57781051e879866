#  Copyright (c) 2026 smcrc developers. See LICENSE

from .errors import *
from .randomstream import RandomStream
from .particles import Particle, ParticleSet
from .resampling import resample_index, resample_indices, resample_indices_log
from .model import StateSpaceModel, Trajectory, simulate

"""
Minimal-norm interpolation, regulariser admissibility and representer
theorems in weighted l^p spaces and a Fourier RKBS.
"""
from representer.config.settings import settings

__version__ = settings.PROJECT_VERSION

import os
from dotenv import load_dotenv

load_dotenv()

class Settings:
    """
    Application configuration settings.
    Loads from environment variables with defaults.
    """
    PROJECT_NAME: str = "representer"
    PROJECT_VERSION: str = "1.0.0"

    # Solver
    TOL: float = float(os.getenv("REPRESENTER_TOL", "1e-9"))
    MAX_ITER: int = int(os.getenv("REPRESENTER_MAX_ITER", "500"))
    SEED: int = int(os.getenv("REPRESENTER_SEED", "0"))
    MULTISTART: int = int(os.getenv("REPRESENTER_MULTISTART", "8"))

    # Regularisers
    ADMISSIBILITY_TOL: float = float(os.getenv("REPRESENTER_ADMISSIBILITY_TOL", "1e-9"))
    QUADRATURE_ORDER: int = int(os.getenv("REPRESENTER_QUADRATURE_ORDER", "64"))

    # RKBS
    RKBS_NODES: int = int(os.getenv("REPRESENTER_RKBS_NODES", "256"))

    OUT_DIR: str = os.getenv("REPRESENTER_OUT_DIR", ".")
    LOG_LEVEL: str = os.getenv("REPRESENTER_LOG_LEVEL", "WARNING")

settings = Settings()

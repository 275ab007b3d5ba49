"""
Configuration schemas for qclass.

Size bounds for the enumeration kernels and settings for the randomized
self-test harness.
"""
from dataclasses import dataclass, field


@dataclass
class LimitsConfig:
    """Size bounds enforced by the enumeration and group kernels.

    Attributes:
        max_n: Largest ground set any enumeration accepts (QCLASS_MAX_N overrides)
        max_degree: Largest weight for which all integer compositions are listed
        max_group_order: Largest group order the closure in ``generate`` builds
        oracle_max_order: Largest group order the floating-point character table accepts;
            its multiplicities are rounded with an absolute tolerance of 1e-6
    """
    max_n: int = 9
    max_degree: int = 10
    max_group_order: int = 100_000
    oracle_max_order: int = 24

    def __post_init__(self) -> None:
        """Validate configuration after initialization."""
        if self.max_n < 0:
            raise ValueError("max_n must be nonnegative")
        if self.max_degree < 0:
            raise ValueError("max_degree must be nonnegative")
        if self.max_group_order <= 0:
            raise ValueError("max_group_order must be positive")
        if self.oracle_max_order <= 0:
            raise ValueError("oracle_max_order must be positive")


@dataclass
class SelftestConfig:
    """Settings for the seeded random-instance suites.

    Attributes:
        seed: Base seed; instance ``i`` draws from ``random.Random(seed + i)``
        count: Number of random instances per suite
        max_size: Largest ground set drawn for a random instance
        workers: Thread-pool size used to run instances
        edge_probability: Probability of a relation or edge between two labels
    """
    seed: int = 20240611
    count: int = 200
    max_size: int = 5
    workers: int = 4
    edge_probability: float = 0.4

    def __post_init__(self) -> None:
        """Validate configuration after initialization."""
        if self.count < 0:
            raise ValueError("count must be nonnegative")
        if self.max_size < 1:
            raise ValueError("max_size must be at least 1")
        if self.workers <= 0:
            raise ValueError("workers must be positive")
        if not 0.0 <= self.edge_probability <= 1.0:
            raise ValueError("edge_probability must lie in [0, 1]")


@dataclass
class QClassConfig:
    """Top-level configuration.

    Attributes:
        limits: Size bounds
        selftest: Random-instance harness settings
        log_level: Level name handed to ``setup_logging``
    """
    limits: LimitsConfig = field(default_factory=LimitsConfig)
    selftest: SelftestConfig = field(default_factory=SelftestConfig)
    log_level: str = "WARNING"

    def __post_init__(self) -> None:
        """Validate configuration after initialization."""
        if self.log_level.upper() not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"Unknown log level '{self.log_level}'")

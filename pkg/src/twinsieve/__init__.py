"""Twin-prime double sieve: wheels that delete multiples together with twins,
plus the count estimates and reference-table reproduction built on them."""

from .primes import (
    PrimeTable,
    nth_prime,
    phi_primorial,
    primorial,
    sieve_primes,
)
from .wheel import (
    SURVIVES,
    DeletionLedger,
    TwinWheel,
    WheelCapExceeded,
    advance,
    build_wheel,
    deletion_step_of,
    designated_twin,
    exact_deletion_ledger,
    initial_wheel,
    render_table,
)
from .estimates import (
    EULER_GAMMA,
    HALF_E_GAMMA,
    Constants,
    asymptotic_eq16,
    correction_r,
    deleted_estimate_eq5,
    density_eq1,
    estimate_eq7,
    estimate_eq15,
    make_constants,
    mertens_check,
    telescoping_total_eq6,
    twin_product,
)
from .report import (
    TABLE4_PRIMES,
    EstimateRow,
    FigureSeries,
    TableReport,
    build_table4,
    count_actual_twins,
    count_twin_pairs,
    export_report,
    figure1_series,
)

__version__ = "0.1.0"

__all__ = [
    "PrimeTable", "sieve_primes", "nth_prime", "primorial", "phi_primorial",
    "TwinWheel", "DeletionLedger", "WheelCapExceeded", "SURVIVES",
    "initial_wheel", "advance", "build_wheel", "designated_twin",
    "deletion_step_of", "exact_deletion_ledger", "render_table",
    "EULER_GAMMA", "HALF_E_GAMMA", "Constants", "make_constants",
    "density_eq1", "deleted_estimate_eq5", "telescoping_total_eq6",
    "estimate_eq7", "correction_r", "estimate_eq15", "asymptotic_eq16",
    "twin_product", "mertens_check",
    "TABLE4_PRIMES", "EstimateRow", "TableReport", "FigureSeries",
    "count_actual_twins", "count_twin_pairs", "build_table4",
    "figure1_series", "export_report",
]

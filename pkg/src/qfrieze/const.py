"""Constants for qfrieze."""

# JSON schema tag carried at the top level of every payload
SCHEMA_VERSION = "qfrieze-1"

# Verification checks, in report order
CHECK_FRIEZE_RELATIONS = "frieze-relations"
CHECK_PERIODICITY = "periodicity"
CHECK_BIJECTION = "bijection"
CHECK_MOUTH = "mouth-consistency"
CHECK_QUASI_COMMUTATION = "quasi-commutation"
CHECK_LEFT_RECURSION = "left-recursion"
CHECK_CONTINUANT_FRIEZE = "continuant-frieze-relation"
CHECK_MAIN_THEOREM = "main-theorem"
CHECK_SPECIALIZATION = "specialization"
CHECK_SEED_PERIODICITY = "seed-periodicity"

# Literature diagnostics (opt-in via --checks)
CHECK_POSITIVITY = "positivity"
CHECK_BAR_INVARIANCE = "bar-invariance"

DEFAULT_CHECKS = (
    CHECK_FRIEZE_RELATIONS,
    CHECK_PERIODICITY,
    CHECK_BIJECTION,
    CHECK_MOUTH,
    CHECK_QUASI_COMMUTATION,
    CHECK_LEFT_RECURSION,
    CHECK_CONTINUANT_FRIEZE,
    CHECK_MAIN_THEOREM,
    CHECK_SPECIALIZATION,
    CHECK_SEED_PERIODICITY,
)
DIAGNOSTIC_CHECKS = (CHECK_POSITIVITY, CHECK_BAR_INVARIANCE)
ALL_CHECKS = DEFAULT_CHECKS + DIAGNOSTIC_CHECKS

# Default frieze window is [-(n+3), WINDOW_PERIODS * (n+3)]
WINDOW_PERIODS = 2

# Number of forward sweeps replayed by the seed-periodicity check
SEED_SWEEPS = 2

OUTPUT_FORMATS = ("text", "json")
DEFAULT_FORMAT = "text"

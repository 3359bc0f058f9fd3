# Exit codes
EXIT_INTERNAL = 1
EXIT_INPUT = 2
EXIT_PRECONDITION = 3
EXIT_VERIFY = 4

# Oracle budget defaults
DEFAULT_MAX_N = 4
DEFAULT_MAX_P = 3
DEFAULT_MAX_E = 2
DEFAULT_MAX_DEGREE = 6

# Serialization
MINUS_INFINITY = "-inf"
APPROX_DIGITS = 12

# Environment
ENV_ORACLE_BUDGET = "FSR_ORACLE_BUDGET"
ENV_LOG_LEVEL = "FSR_LOG_LEVEL"
DEFAULT_LOG_LEVEL = "WARNING"

# Tables
DEFAULT_TABLE_LEVELS = 3

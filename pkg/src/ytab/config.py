"""Default resource caps.

Enumerations refuse to run past these limits unless the caller raises the
cap explicitly (the CLI exposes them as flags).  The defaults keep every
operation comfortably interactive on one core.
"""

# Largest n for which full tableau / involution enumeration runs by default.
# There are 2,390,480 tableaux with 14 cells.
MAX_ENUM_N = 14

# Largest tableau size for z-set extraction, which scans all k! words.
MAX_ZSET_K = 9

# Largest assigned value in a cell-assignment probability query.
MAX_ASSIGN_VALUE = 12

# Largest number of distinct patterns scanned by a deviation query.
MAX_PATTERNS = 200_000

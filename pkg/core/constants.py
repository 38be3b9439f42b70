# Bumped whenever the JSON envelope or a payload schema changes
FORMAT_VERSION = 1

# A successful command returns normally, which is exit status 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3
# A self-check failed or a search hit its state cap
EXIT_INTERNAL = 4

BEAD_GLYPH = "o"
GAP_GLYPH = "."

# Beads needed on runner 0 before the reduction can use it as helper runner
MIN_RUNNER_ZERO_BEADS = 3

DEFAULT_MAX_INDEX = 8
DEFAULT_R_SPAN = 4
DEFAULT_MAX_SIZE = 40
DEFAULT_BFS_MAX_STATES = 200_000

BLOCK_CLASSES_SHEET_TITLE = "Limiting-block classes"
BLOCK_CLASSES_HEADERS = [
    "Class",
    "Partition",
    "Size",
    "Runner 0",
    "Paired sums",
    "Parity",
]

FAMILY_A = "A"
FAMILY_B = "B"
FAMILY_C = "C"
FAMILY_D = "D"
FAMILY_E = "E"
FAMILY_F = "F"
FAMILY_G = "G"

LABEL_SEPARATOR = "~"

MAX_RANK = 4

ROOT_KIND_FULL = "full"
ROOT_KIND_HALF = "half"

OP_E = "e"
OP_F = "f"

FORMAT_JSON = "json"
FORMAT_DOT = "dot"
EXPORT_FORMATS = [FORMAT_JSON, FORMAT_DOT]

TENSOR_ORDER_STATED = "stated"
TENSOR_ORDER_REVERSED = "reversed"

DEFAULT_CAP = 10 ** 6
DEFAULT_DEPTH = 4
DEFAULT_N_MAX = 4
DEFAULT_SAMPLES = 500
DEFAULT_SEED = 0
DEFAULT_THREADS = 1
BATCH_FACTOR = 4

FULL_CHECK_BELOW = 200
SAMPLE_RATIO = 10

N_BOUND_FACTOR = 3
WEYL_WINDOW_RETRIES = 6

ENV_THREADS = "LS_CRYSTAL_THREADS"

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2

REPORT_DATUM = "datum"
REPORT_CHAINS = "chains"
REPORT_COMPS = "comps"
REPORT_SIMPLE = "simple"
REPORT_THETA = "theta"
REPORT_AXIOMS = "axioms"

"""Constants used throughout the package."""

# Role ranking for "highest ranking" pronouns and referents, theme first and agent last.
ROLE_RANKING = ("TH", "GO", "BEN", "INS", "LOC", "OBL", "AG")

# Roles whose fillers a non-reflexive pronoun of the same clause may not corefer with.
CORE_ROLES = frozenset({"AG", "TH", "GO"})

# Pronoun positions exempt from the co-argument constraint ("Near her, the blond girl ...").
EXEMPT_ROLES = frozenset({"LOC", "OBL"})

# DRT variable names handed out in order; later rounds get a numeric suffix.
VARIABLE_NAMES = ("x", "y", "z", "w", "v", "u")

PLACEHOLDER_PREFIX = "?"
MEMBER_PREDICATE = "member"

# Ratification
DEFAULT_HOOK = "accept"
ANIMATE_AGENT_PREDICATES = frozenset({"ler", "read"})

# Evaluation
DEFAULT_WORKERS = 4
PHENOMENA = ("ellipsis", "reflexive", "recency", "relative", "focus")

# CLI exit codes
EXIT_OK = 0
EXIT_PARSE_ERROR = 1
EXIT_FAULT = 2

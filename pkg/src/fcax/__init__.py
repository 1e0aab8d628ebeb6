"""Attribute exploration over formal contexts and abstract closure
operators, with canonical bases and an interactive session service."""

from .canonical import CanonicalBase, canonical_base, pseudo_intents, relative_canonical_base
from .closure import (
    ClosureOperator,
    PseudoclosedFamily,
    check_closure_laws,
    from_context,
    from_implications,
    from_partial_context,
    identity_operator,
    make_operator,
    meet,
    pseudoclosed_sets,
    refine_with_implication,
    relative_pseudoclosed,
    top_operator,
)
from .context import FormalContext
from .errors import (
    ConsistencyError,
    ExplorationAborted,
    FcaxError,
    InputError,
    ParseError,
    RejectedAnswerError,
    UniverseMismatchError,
)
from .experts import (
    CONFIRM,
    Confirm,
    ExpertLog,
    ExpertReply,
    FullCounterexample,
    PartialCounterexample,
    adversarial_pair,
    audit_consistency,
    full_oracle,
    masked_partial_oracle,
    oracle_full,
    oracle_partial,
    partial_oracle,
    validate_reply,
)
from .exploration import (
    ExplorationResult,
    ExplorationState,
    ExplorationTrace,
    apply_answer,
    check_termination_condition,
    default_interaction_cap,
    explore_classical,
    explore_general,
    next_question,
    pose,
    replay_events,
    start_exploration,
    state_fingerprint,
    trace_events,
)
from .formats import (
    implications_from_json,
    implications_to_json,
    parse_cxt,
    partial_context_from_json,
    partial_context_to_json,
    serialize_cxt,
)
from .implications import Implication, ImplicationSet
from .lectic import enumerate_closed, lectic_cmp, next_closed
from .partial import PartialContext, PartialObjectDescription
from .universe import AttributeSet, AttributeUniverse

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]

"""Catalan combinatorics both ways: 021-avoiding ascent sequences,
Dyck paths, the size-preserving bijection between them, and exhaustive
verification of its statistic correspondences."""

from .bijection import (
    REPEAT_PREVIOUS,
    ForwardStepRecord,
    ForwardTrace,
    InverseStepRecord,
    InverseTrace,
    RepeatPrevious,
    classify_inverse_case,
    forward,
    forward_step,
    forward_trace,
    inverse,
    inverse_step,
    inverse_trace,
    iter_pairs,
)
from .errors import (
    AscentBoundViolated,
    BadCharacter,
    CapExceeded,
    DipsBelowGround,
    EmptyInput,
    EntryNotAllowed,
    FirstEntryNonzero,
    IndexOutOfRange,
    InputError,
    InternalInvariant,
    NegativeEntry,
    Not021Avoiding,
    NotElevated,
    NotEnoughUpsteps,
    ResultInvalid,
    SizeZero,
    TooSmall,
    Unbalanced,
    WrongKind,
)
from .paths import (
    DOWN,
    UP,
    DyckPath,
    PathStats,
    StepRef,
    degree_of_elevation,
    delete_last_peak,
    duu_count,
    elevate,
    enumerate_dyck_paths,
    first_descent_length,
    insert_ud_at_vertex,
    is_elevated,
    is_pyramid,
    key_downsteps,
    last_ascent_length,
    lower,
    match_of_downstep,
    match_of_upstep,
    parse_path,
    path_statistics,
    peak_positions,
    render_ascii,
    terminal_descent,
    transfer_upsteps_from_front,
    transfer_upsteps_to_front,
    valley_count,
    vertex_height,
)
from .sequences import (
    AllowableList,
    AscentSequence,
    SequenceStats,
    allowable_next_values,
    allowable_nonzero_values,
    ascent_count,
    contains_pattern_021_bruteforce,
    enumerate_021_avoiding,
    is_021_avoiding,
    parse_sequence,
    sequence_statistics,
    validate_ascent_sequence,
)
from .verify import (
    DEFAULT_CAP,
    EXTENDED_CAP,
    Failure,
    VerifyReport,
    catalan,
    check_bijectivity,
    check_characterization,
    check_counts,
    check_invariants,
    check_roundtrip,
    check_statistics,
)

__version__ = "0.1.0"

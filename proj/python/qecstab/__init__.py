"""Python bindings for the qecstab recovery simulator."""

from ._core import (
    DecoderTable,
    QecstabError,
    StabilizerCode,
    __version__,
    alpha,
    analyze_point,
    break_even,
    code_by_name,
    css_from_classical,
    curve,
    estimate_failure_rate,
    p1,
    p2,
    parse_code,
    registry_names,
    run_cli,
    synth,
    verify,
)

__all__ = [
    "DecoderTable",
    "QecstabError",
    "StabilizerCode",
    "__version__",
    "alpha",
    "analyze_point",
    "break_even",
    "code_by_name",
    "css_from_classical",
    "curve",
    "estimate_failure_rate",
    "p1",
    "p2",
    "parse_code",
    "registry_names",
    "run_cli",
    "synth",
    "verify",
]

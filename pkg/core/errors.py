# core/errors.py
from typing import Optional


class EquimatchError(Exception):
    """Base class for every error raised by the core package."""


class GraphError(EquimatchError, ValueError):
    """Invalid graph construction (self-loop, bad vertex, duplicate edge, bad family)."""


class GraphFormatError(GraphError):
    """Malformed edge-list document. Carries the offending line number."""

    def __init__(self, lineno: int, reason: str):
        self.lineno = lineno
        self.reason = reason
        super().__init__(f"line {lineno}: {reason}")


class MatchingError(EquimatchError, ValueError):
    """Edge set is not a matching of its host graph, or a size is out of range."""


class ScaleError(EquimatchError):
    """An exponential oracle was asked to run above the configured vertex cap."""

    def __init__(self, what: str, n: int, cap: int):
        self.what = what
        self.n = n
        self.cap = cap
        super().__init__(
            f"{what} is exponential; graph has {n} vertices, cap is {cap} "
            f"(raise it with --cap)"
        )


class HypothesisError(EquimatchError):
    """A shortcut was applied to a graph that fails one of its hypotheses."""

    def __init__(self, hypothesis: str, detail: Optional[str] = None):
        self.hypothesis = hypothesis
        msg = f"hypothesis failed: {hypothesis}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class ConfigError(EquimatchError):
    """Unreadable or malformed configuration file."""


# exit codes used by app.py
EXIT_CODES = {
    GraphFormatError: 2,
    GraphError: 2,
    ScaleError: 3,
    HypothesisError: 4,
}


def exit_code_for(exc: BaseException) -> int:
    for cls in type(exc).__mro__:
        if cls in EXIT_CODES:
            return EXIT_CODES[cls]
    return 1
